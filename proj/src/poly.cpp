#include "kellerlab/poly.hpp"

#include <sstream>

#include "kellerlab/errors.hpp"

namespace kellerlab {

Poly Poly::constant(FieldElement c) {
  Poly p;
  p.set(0, 0, std::move(c));
  return p;
}

Poly Poly::variable_x() { return monomial(1, 0, FieldElement::one()); }
Poly Poly::variable_y() { return monomial(0, 1, FieldElement::one()); }

Poly Poly::monomial(unsigned i, unsigned j, FieldElement c) {
  Poly p;
  p.set(i, j, std::move(c));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.total() == 0;
}

FieldElement Poly::constant_term() const { return coefficient(0, 0); }

FieldElement Poly::coefficient(unsigned i, unsigned j) const {
  auto it = terms_.find(Monomial{i, j});
  return it == terms_.end() ? FieldElement::zero() : it->second;
}

void Poly::set(unsigned i, unsigned j, FieldElement c) {
  Monomial m{i, j};
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = std::move(c);
}

Degree Poly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return static_cast<long>(terms_.begin()->first.total());
}

Degree Poly::weighted_degree(int w1, int w2) const {
  if (terms_.empty()) return std::nullopt;
  long best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    long d = static_cast<long>(w1) * m.x + static_cast<long>(w2) * m.y;
    if (first || d > best) best = d, first = false;
  }
  return best;
}

long Poly::degree_or(long fallback) const {
  auto d = total_degree();
  return d ? *d : fallback;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.begin()->first;
}

const FieldElement& Poly::leading_coefficient() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.begin()->second;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& v) const {
  Poly r = *this;
  for (const auto& [m, c] : v.terms_) {
    auto [it, fresh] = r.terms_.try_emplace(m, c);
    if (fresh) continue;
    it->second += c;
    if (it->second.is_zero()) r.terms_.erase(it);
  }
  return r;
}

Poly Poly::operator-(const Poly& v) const { return *this + (-v); }

Poly Poly::operator*(const Poly& v) const {
  Poly r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : v.terms_) {
      Monomial m{ma.x + mb.x, ma.y + mb.y};
      auto [it, fresh] = r.terms_.try_emplace(m);
      if (fresh)
        it->second = ca * cb;
      else
        it->second += ca * cb;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

Poly Poly::operator*(const FieldElement& s) const {
  if (s.is_zero()) return Poly();
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool Poly::operator==(const Poly& v) const {
  if (terms_.size() != v.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = v.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first.x != b->first.x || a->first.y != b->first.y) return false;
    if (a->second != b->second) return false;
  }
  return true;
}

Poly Poly::derivative_x() const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.x > 0) r.set(m.x - 1, m.y, c * FieldElement(static_cast<long>(m.x)));
  return r;
}

Poly Poly::derivative_y() const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.y > 0) r.set(m.x, m.y - 1, c * FieldElement(static_cast<long>(m.y)));
  return r;
}

Poly jacobian(const Poly& p, const Poly& q) {
  return p.derivative_x() * q.derivative_y() - p.derivative_y() * q.derivative_x();
}

std::vector<std::pair<long, Poly>> Poly::graded_parts(int w1, int w2) const {
  std::map<long, Poly> parts;
  for (const auto& [m, c] : terms_) {
    long d = static_cast<long>(w1) * m.x + static_cast<long>(w2) * m.y;
    parts[d].set(m.x, m.y, c);
  }
  return {parts.begin(), parts.end()};
}

Poly Poly::leading_form(int w1, int w2) const {
  auto parts = graded_parts(w1, w2);
  if (parts.empty()) return Poly();
  return parts.back().second;
}

Parity Poly::parity_profile(int w1, int w2) const {
  if (terms_.empty()) throw ZeroPolynomial();
  bool even = true, odd = true;
  for (const auto& [m, c] : terms_) {
    long d = static_cast<long>(w1) * m.x + static_cast<long>(w2) * m.y;
    (d % 2 == 0 ? odd : even) = false;
  }
  if (even) return Parity::AllEven;
  if (odd) return Parity::AllOdd;
  return Parity::Mixed;
}

Poly Poly::substituted(const Poly& px, const Poly& py) const {
  // Sparse Horner scheme: group terms by x-exponent, evaluate each group as a
  // Horner chain in py, then fold the groups as a Horner chain in px. This
  // keeps the number of big-polynomial products proportional to the degree
  // rather than to the square of the term count.
  std::map<unsigned, std::map<unsigned, FieldElement>> by_x;
  for (const auto& [m, c] : terms_) by_x[m.x][m.y] = c;

  auto horner_y = [&py](const std::map<unsigned, FieldElement>& rows) {
    Poly acc;
    unsigned prev = 0;
    bool first = true;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      if (!first) acc = acc * py.pow(prev - it->first);
      acc = acc + Poly::constant(it->second);
      prev = it->first;
      first = false;
    }
    if (!first && prev > 0) acc = acc * py.pow(prev);
    return acc;
  };

  Poly r;
  unsigned prev = 0;
  bool first = true;
  for (auto it = by_x.rbegin(); it != by_x.rend(); ++it) {
    if (!first) r = r * px.pow(prev - it->first);
    r = r + horner_y(it->second);
    prev = it->first;
    first = false;
  }
  if (!first && prev > 0) r = r * px.pow(prev);
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.to_string();
    bool neg = false;
    if (c.is_rational() && c.rational_part() < 0) {
      neg = true;
      cs = (-c).to_string();
    }
    std::string mono;
    if (m.x > 0) mono = (m.x == 1) ? "x" : "x^" + std::to_string(m.x);
    if (m.y > 0) {
      if (!mono.empty()) mono += "*";
      mono += (m.y == 1) ? "y" : "y^" + std::to_string(m.y);
    }
    // Multi-term coefficients need parentheses to round-trip.
    bool composite = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    std::string term;
    if (mono.empty())
      term = composite ? "(" + cs + ")" : cs;
    else if (!composite && cs == "1")
      term = mono;
    else
      term = (composite ? "(" + cs + ")" : cs) + "*" + mono;
    if (first) {
      os << (neg ? "-" : "") << term;
      first = false;
    } else {
      os << (neg ? " - " : " + ") << term;
    }
  }
  return os.str();
}

}  // namespace kellerlab
