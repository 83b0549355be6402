#include "kellerlab/field_tower.hpp"

#include <cmath>
#include <sstream>

namespace kellerlab {
namespace {

using V = std::vector<Rational>;

V scaled(const V& a, const Rational& s) {
  V r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] * s;
  return r;
}

void add_into(V& a, const V& b) {
  for (size_t k = 0; k < b.size(); ++k) a[k] += b[k];
}

bool all_zero(const V& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

// Product of two coordinate vectors spanning the first `level` slots of T.
V mul_rec(const FieldTower& T, const V& a, const V& b, size_t level) {
  if (level == 0) return {a[0] * b[0]};
  const size_t half = size_t{1} << (level - 1);
  V a0(a.begin(), a.begin() + half), a1(a.begin() + half, a.end());
  V b0(b.begin(), b.begin() + half), b1(b.begin() + half, b.end());
  V lo = mul_rec(T, a0, b0, level - 1);
  if (!all_zero(a1) && !all_zero(b1)) {
    V cross = mul_rec(T, a1, b1, level - 1);
    add_into(lo, mul_rec(T, cross, T.level_square(level - 1), level - 1));
  }
  V hi = mul_rec(T, a0, b1, level - 1);
  add_into(hi, mul_rec(T, a1, b0, level - 1));
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

V inv_rec(const FieldTower& T, const V& a, size_t level) {
  if (level == 0) {
    if (a[0] == 0) throw DivisionByZero();
    return {1 / a[0]};
  }
  const size_t half = size_t{1} << (level - 1);
  V a0(a.begin(), a.begin() + half), a1(a.begin() + half, a.end());
  // (a0 + a1*g)^-1 = (a0 - a1*g) / (a0^2 - a1^2*g^2)
  V norm = mul_rec(T, a0, a0, level - 1);
  V a1sq = mul_rec(T, a1, a1, level - 1);
  V sub = mul_rec(T, a1sq, T.level_square(level - 1), level - 1);
  for (size_t k = 0; k < half; ++k) norm[k] -= sub[k];
  V ninv = inv_rec(T, norm, level - 1);
  V lo = mul_rec(T, a0, ninv, level - 1);
  V hi = mul_rec(T, a1, ninv, level - 1);
  for (auto& c : hi) c = -c;
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q == 0) return Rational(0);
  if (q < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

// Complete square-root search within the tower: descend one quadratic
// extension at a time. For d = d0 + d1*g with g the top adjoined root,
// z = u + v*g solves z^2 = d iff d0 = u^2 + v^2 g^2 and d1 = 2uv, which
// reduces to square roots one level down.
std::optional<V> sqrt_rec(const FieldTower& T, const V& d, size_t level) {
  if (level == 0) {
    auto r = rational_sqrt(d[0]);
    if (!r) return std::nullopt;
    return V{*r};
  }
  const size_t half = size_t{1} << (level - 1);
  V d0(d.begin(), d.begin() + half), d1(d.begin() + half, d.end());
  const V gsq = T.level_square(level - 1);
  if (all_zero(d1)) {
    if (auto u = sqrt_rec(T, d0, level - 1)) {
      u->resize(2 * half, Rational(0));
      return u;
    }
    // z = v*g with v^2 = d0 / g^2
    V quot = mul_rec(T, d0, inv_rec(T, gsq, level - 1), level - 1);
    if (auto v = sqrt_rec(T, quot, level - 1)) {
      V z(2 * half, Rational(0));
      for (size_t k = 0; k < half; ++k) z[half + k] = (*v)[k];
      return z;
    }
    return std::nullopt;
  }
  // s^2 = d0^2 - d1^2 g^2, then u^2 = (d0 +/- s)/2 and v = d1/(2u).
  V disc = mul_rec(T, d0, d0, level - 1);
  V d1sq = mul_rec(T, d1, d1, level - 1);
  V sub = mul_rec(T, d1sq, gsq, level - 1);
  for (size_t k = 0; k < half; ++k) disc[k] -= sub[k];
  auto s = sqrt_rec(T, disc, level - 1);
  if (!s) return std::nullopt;
  for (int sign = 0; sign < 2; ++sign) {
    V u2(half);
    for (size_t k = 0; k < half; ++k)
      u2[k] = (d0[k] + (sign == 0 ? (*s)[k] : -(*s)[k])) / 2;
    if (all_zero(u2)) continue;  // u = 0 contradicts d1 = 2uv != 0
    auto u = sqrt_rec(T, u2, level - 1);
    if (!u || all_zero(*u)) continue;
    V v = mul_rec(T, d1, inv_rec(T, scaled(*u, Rational(2)), level - 1), level - 1);
    V z = *u;
    z.insert(z.end(), v.begin(), v.end());
    return z;
  }
  return std::nullopt;
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::vector<Rational> FieldTower::level_square(size_t level) const {
  if (has_i_ && level == 0) return {Rational(-1)};
  const size_t idx = level - (has_i_ ? 1 : 0);
  return radicands_[idx];
}

TowerPtr FieldTower::rationals() {
  static const TowerPtr t = std::make_shared<FieldTower>(false, false);
  return t;
}

TowerPtr FieldTower::gaussian() {
  static const TowerPtr t = std::make_shared<FieldTower>(true, false);
  return t;
}

TowerPtr FieldTower::reals() {
  static const TowerPtr t = std::make_shared<FieldTower>(false, true);
  return t;
}

TowerPtr FieldTower::extended(const TowerPtr& base, std::vector<Rational> radicand) {
  if (radicand.size() != base->dim())
    throw std::logic_error("radicand coordinate size mismatch");
  if (all_zero(radicand)) throw ZeroRadicand();
  if (base->generator_count() >= kMaxGenerators) throw TowerLimit();
  if (sqrt_rec(*base, radicand, base->levels()))
    throw std::logic_error("radicand already has a square root in the tower");
  if (base->real_only()) {
    FieldElement r(base, radicand);
    if (r.sign_real() < 0)
      throw RealModeViolation("real tower requires positive radicands");
  }
  auto t = std::make_shared<FieldTower>(base->has_i(), base->real_only());
  t->radicands_ = base->radicands_;
  t->radicands_.push_back(std::move(radicand));
  return t;
}

bool FieldTower::embeds(const FieldTower& a, const FieldTower& b) {
  if (a.has_i_ && !b.has_i_) return false;
  if (a.radicands_.size() > b.radicands_.size()) return false;
  const bool lift = !a.has_i_ && b.has_i_;
  for (size_t k = 0; k < a.radicands_.size(); ++k) {
    const auto& ra = a.radicands_[k];
    const auto& rb = b.radicands_[k];
    if (!lift) {
      if (ra != rb) return false;
      continue;
    }
    // a-index m maps to b-index m<<1 (the inserted bit 0 is i).
    if (rb.size() != 2 * ra.size()) return false;
    for (size_t m = 0; m < rb.size(); ++m) {
      const Rational expect = (m % 2 == 0) ? ra[m / 2] : Rational(0);
      if (rb[m] != expect) return false;
    }
  }
  return true;
}

bool FieldTower::same_structure(const FieldTower& other) const {
  return has_i_ == other.has_i_ && radicands_ == other.radicands_;
}

FieldElement::FieldElement() : tower_(FieldTower::rationals()), coords_{Rational(0)} {}

FieldElement::FieldElement(const Rational& r)
    : tower_(FieldTower::rationals()), coords_{r} {
  coords_[0].canonicalize();
}

FieldElement::FieldElement(long n) : tower_(FieldTower::rationals()), coords_{Rational(n)} {}

FieldElement::FieldElement(TowerPtr tower, std::vector<Rational> coords)
    : tower_(std::move(tower)), coords_(std::move(coords)) {
  if (coords_.size() != tower_->dim())
    throw std::logic_error("coordinate size does not match tower dimension");
  // Caller-supplied rationals may be non-canonical (e.g. 0/3); GMP requires
  // canonical form for correct comparisons.
  for (auto& c : coords_) c.canonicalize();
}

FieldElement FieldElement::imaginary_unit() {
  std::vector<Rational> c(2, Rational(0));
  c[1] = 1;
  return FieldElement(FieldTower::gaussian(), std::move(c));
}

bool FieldElement::is_zero() const { return all_zero(coords_); }

bool FieldElement::is_rational() const {
  for (size_t k = 1; k < coords_.size(); ++k)
    if (coords_[k] != 0) return false;
  return true;
}

Rational FieldElement::as_rational() const {
  if (!is_rational()) throw std::logic_error("element is not rational");
  return coords_[0];
}

FieldElement coerce(const FieldElement& e, const TowerPtr& target) {
  if (e.tower() == target) return e;
  if (e.tower()->same_structure(*target) && e.tower()->dim() == target->dim())
    return FieldElement::raw(target, e.coords());
  if (!FieldTower::embeds(*e.tower(), *target)) throw IncompatibleTowers();
  const bool lift = !e.tower()->has_i() && target->has_i();
  std::vector<Rational> c(target->dim(), Rational(0));
  for (size_t m = 0; m < e.coords().size(); ++m)
    c[lift ? (m << 1) : m] = e.coords()[m];
  return FieldElement::raw(target, std::move(c));
}

TowerPtr join_towers(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return a;
  if (FieldTower::embeds(*a, *b)) return b;
  if (FieldTower::embeds(*b, *a)) return a;
  throw IncompatibleTowers();
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x = -x;
  return raw(tower_, std::move(c));
}

FieldElement& FieldElement::operator+=(const FieldElement& v) {
  if (tower_ == v.tower_) {
    add_into(coords_, v.coords_);
    return *this;
  }
  *this = *this + v;
  return *this;
}

FieldElement FieldElement::operator+(const FieldElement& v) const {
  if (tower_ == v.tower_) {
    std::vector<Rational> c(coords_);
    add_into(c, v.coords_);
    return raw(tower_, std::move(c));
  }
  TowerPtr t = join_towers(tower_, v.tower_);
  FieldElement a = coerce(*this, t), b = coerce(v, t);
  std::vector<Rational> c(std::move(a.coords_));
  add_into(c, b.coords_);
  return raw(t, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& v) const {
  if (tower_ == v.tower_) {
    std::vector<Rational> c(coords_);
    for (size_t k = 0; k < c.size(); ++k) c[k] -= v.coords_[k];
    return raw(tower_, std::move(c));
  }
  return *this + (-v);
}

FieldElement FieldElement::operator*(const FieldElement& v) const {
  if (tower_ == v.tower_) {
    const size_t levels = tower_->levels();
    if (levels == 0) return raw(tower_, {coords_[0] * v.coords_[0]});
    if (levels == 1) {
      // One quadratic generator g: (a0 + a1*g)(b0 + b1*g).
      std::vector<Rational> c(2);
      c[0] = coords_[0] * v.coords_[0];
      c[1] = coords_[0] * v.coords_[1] + coords_[1] * v.coords_[0];
      Rational cross = coords_[1] * v.coords_[1];
      if (tower_->has_i())
        c[0] -= cross;
      else
        c[0] += tower_->radicand(0)[0] * cross;
      return raw(tower_, std::move(c));
    }
    return raw(tower_, mul_rec(*tower_, coords_, v.coords_, levels));
  }
  TowerPtr t = join_towers(tower_, v.tower_);
  FieldElement a = coerce(*this, t), b = coerce(v, t);
  return raw(t, mul_rec(*t, a.coords_, b.coords_, t->levels()));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return raw(tower_, inv_rec(*tower_, coords_, tower_->levels()));
}

FieldElement FieldElement::operator/(const FieldElement& v) const { return *this * v.inverse(); }

FieldElement FieldElement::pow(unsigned long e) const {
  FieldElement r = coerce(FieldElement::one(), tower_), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool FieldElement::operator==(const FieldElement& v) const {
  if (tower_ == v.tower_) return coords_ == v.coords_;
  TowerPtr t;
  try {
    t = join_towers(tower_, v.tower_);
  } catch (const IncompatibleTowers&) {
    return false;
  }
  return coerce(*this, t).coords_ == coerce(v, t).coords_;
}

double FieldElement::approx_real() const {
  const auto& T = *tower_;
  if (T.has_i()) {
    for (size_t m = 0; m < coords_.size(); ++m)
      if ((m & 1) && coords_[m] != 0)
        throw std::logic_error("approx_real on a non-real element");
  }
  std::vector<double> gen(T.generator_count());
  for (size_t k = 0; k < gen.size(); ++k) {
    // Radicand coords live over the prefix basis; evaluate directly.
    const auto& rc = T.radicand(k);
    double val = 0.0;
    for (size_t m = 0; m < rc.size(); ++m) {
      if (rc[m] == 0) continue;
      double basis = 1.0;
      size_t bits = m >> (T.has_i() ? 1 : 0);
      for (size_t j = 0; j < k; ++j)
        if (bits & (size_t{1} << j)) basis *= gen[j];
      val += rc[m].get_d() * basis;
    }
    gen[k] = std::sqrt(val);
  }
  double total = 0.0;
  for (size_t m = 0; m < coords_.size(); ++m) {
    if (coords_[m] == 0) continue;
    double basis = 1.0;
    size_t bits = m >> (T.has_i() ? 1 : 0);
    for (size_t j = 0; j < gen.size(); ++j)
      if (bits & (size_t{1} << j)) basis *= gen[j];
    total += coords_[m].get_d() * basis;
  }
  return total;
}

int FieldElement::sign_real() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coords_[0]);
  double v = approx_real();
  if (v > 0) return 1;
  if (v < 0) return -1;
  throw std::logic_error("sign_real: numeric sign inconclusive");
}

namespace {

std::string render_element(const FieldTower& T, const V& coords);

std::string basis_monomial(const FieldTower& T, size_t mask) {
  std::string s;
  if (T.has_i() && (mask & 1)) s = "i";
  size_t bits = mask >> (T.has_i() ? 1 : 0);
  for (size_t k = 0; bits; ++k, bits >>= 1) {
    if (!(bits & 1)) continue;
    const auto& rc = T.radicand(k);
    // Rebuild the prefix tower just for rendering the radicand.
    FieldTower prefix(T.has_i(), false);
    TowerPtr p = std::make_shared<FieldTower>(prefix);
    for (size_t j = 0; j < k; ++j) {
      std::vector<Rational> rj = T.radicand(j);
      p = FieldTower::extended(p, std::move(rj));
    }
    std::string inner = render_element(*p, rc);
    if (!s.empty()) s += "*";
    s += "sqrt(" + inner + ")";
  }
  return s;
}

std::string render_element(const FieldTower& T, const V& coords) {
  std::string out;
  bool first = true;
  for (size_t m = 0; m < coords.size(); ++m) {
    if (coords[m] == 0) continue;
    Rational c = coords[m];
    bool neg = c < 0;
    if (neg) c = -c;
    std::string mono = basis_monomial(T, m);
    std::string term;
    if (mono.empty())
      term = rational_str(c);
    else if (c == 1)
      term = mono;
    else
      term = rational_str(c) + "*" + mono;
    if (first) {
      out = (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return first ? "0" : out;
}

}  // namespace

std::string FieldElement::to_string() const { return render_element(*tower_, coords_); }

std::optional<FieldElement> try_field_sqrt(const FieldElement& d) {
  auto z = sqrt_rec(*d.tower(), d.coords(), d.tower()->levels());
  if (!z) return std::nullopt;
  // Canonical branch: first nonzero coordinate positive.
  for (auto& c : *z) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& x : *z) x = -x;
    break;
  }
  return FieldElement(d.tower(), std::move(*z));
}

FieldElement field_sqrt(const FieldElement& d) {
  if (d.is_zero()) throw ZeroRadicand();
  if (auto z = try_field_sqrt(d)) return *z;
  TowerPtr ext = FieldTower::extended(d.tower(), d.coords());
  std::vector<Rational> c(ext->dim(), Rational(0));
  c[d.tower()->dim()] = 1;  // the new top generator
  return FieldElement(ext, std::move(c));
}

}  // namespace kellerlab
