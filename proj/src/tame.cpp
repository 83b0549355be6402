#include "kellerlab/tame.hpp"

#include <algorithm>

#include "kellerlab/errors.hpp"

namespace kellerlab {
namespace {

bool univariate_in_y(const Poly& h) {
  for (const auto& [m, c] : h.terms())
    if (m.x != 0) return false;
  return true;
}

bool univariate_in_x(const Poly& h) {
  for (const auto& [m, c] : h.terms())
    if (m.y != 0) return false;
  return true;
}

}  // namespace

Factor::Factor(AffineFactor a) : kind_(std::move(a)) {
  if (std::get<AffineFactor>(kind_).det().is_zero())
    throw NotInvertible();
}

Factor::Factor(ElementaryX e) : kind_(std::move(e)) {
  const auto& el = std::get<ElementaryX>(kind_);
  if (el.scale.is_zero()) throw NotInvertible();
  if (!univariate_in_y(el.h)) throw std::logic_error("ElementaryX h must be univariate in y");
}

Factor::Factor(ElementaryY e) : kind_(std::move(e)) {
  const auto& el = std::get<ElementaryY>(kind_);
  if (el.scale.is_zero()) throw NotInvertible();
  if (!univariate_in_x(el.h)) throw std::logic_error("ElementaryY h must be univariate in x");
}

Factor Factor::exchange() {
  AffineFactor a;
  a.m[0][0] = FieldElement::zero();
  a.m[0][1] = FieldElement::one();
  a.m[1][0] = FieldElement::one();
  a.m[1][1] = FieldElement::zero();
  a.t = {FieldElement::zero(), FieldElement::zero()};
  return Factor(std::move(a));
}

Endo Factor::to_endo() const {
  return std::visit(
      [](const auto& k) -> Endo {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, AffineFactor>) {
          Poly x = Poly::variable_x(), y = Poly::variable_y();
          return Endo{x * k.m[0][0] + y * k.m[0][1] + Poly::constant(k.t[0]),
                      x * k.m[1][0] + y * k.m[1][1] + Poly::constant(k.t[1])};
        } else if constexpr (std::is_same_v<T, ElementaryX>) {
          return Endo{Poly::variable_x() * k.scale + k.h, Poly::variable_y()};
        } else {
          return Endo{Poly::variable_x(), Poly::variable_y() * k.scale + k.h};
        }
      },
      kind_);
}

Factor Factor::inverted() const {
  return std::visit(
      [](const auto& k) -> Factor {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, AffineFactor>) {
          FieldElement d = k.det();
          AffineFactor inv;
          inv.m[0][0] = k.m[1][1] / d;
          inv.m[0][1] = -k.m[0][1] / d;
          inv.m[1][0] = -k.m[1][0] / d;
          inv.m[1][1] = k.m[0][0] / d;
          inv.t[0] = -(inv.m[0][0] * k.t[0] + inv.m[0][1] * k.t[1]);
          inv.t[1] = -(inv.m[1][0] * k.t[0] + inv.m[1][1] * k.t[1]);
          return Factor(std::move(inv));
        } else if constexpr (std::is_same_v<T, ElementaryX>) {
          FieldElement s = k.scale.inverse();
          return Factor(ElementaryX{-(k.h * s), s});
        } else {
          FieldElement s = k.scale.inverse();
          return Factor(ElementaryY{-(k.h * s), s});
        }
      },
      kind_);
}

Endo recompose(const TameCertificate& c) {
  Endo acc = Endo::identity();
  bool first = true;
  for (const auto& fac : c.factors) {
    acc = first ? fac.to_endo() : compose(acc, fac.to_endo());
    first = false;
  }
  return acc;
}

bool verify(const TameCertificate& c) { return recompose(c) == c.subject; }

DecomposeResult decompose(const Endo& f) {
  DecomposeResult out;
  if (!is_keller(f)) {
    out.status = DecomposeStatus::NotKeller;
    return out;
  }
  const long input_deg = std::max(f.p.degree_or(0), f.q.degree_or(0));
  const long cap = 10 * std::max<long>(1, input_deg);

  Endo cur = f;
  std::vector<Factor> stripped;  // right factors E_1 ... E_m, cur_i = cur_{i-1} * E_i
  for (;;) {
    long dp = cur.p.degree_or(-1);
    long dq = cur.q.degree_or(-1);
    if (std::max(dp, dq) > cap)
      throw ResourceLimit("degree exceeded 10x the input degree during reduction");
    if (dp <= 1 && dq <= 1) break;
    if (dq > dp) {
      Factor ex = Factor::exchange();
      cur = compose(cur, ex.to_endo());
      stripped.push_back(ex);
      std::swap(dp, dq);
    }
    // dq >= 1: a constant image would force a zero Jacobian.
    if (dq < 1 || dp % dq != 0) {
      out.status = DecomposeStatus::NotReducible;
      out.stuck = cur;
      return out;
    }
    const unsigned k = static_cast<unsigned>(dp / dq);
    Poly lfu = cur.p.leading_form(1, 1);
    Poly lfv = cur.q.leading_form(1, 1);
    Poly vk = lfv.pow(k);
    FieldElement c = lfu.leading_coefficient() / vk.leading_coefficient();
    if (lfu != vk * c) {
      out.status = DecomposeStatus::NotReducible;
      out.stuck = cur;
      return out;
    }
    Factor e = (k == 1)
                   ? Factor(AffineFactor{{{{FieldElement::one(), -c},
                                           {FieldElement::zero(), FieldElement::one()}}},
                                         {FieldElement::zero(), FieldElement::zero()}})
                   : Factor(ElementaryX{Poly::monomial(0, k, -c), FieldElement::one()});
    cur = compose(cur, e.to_endo());
    stripped.push_back(e);
    if (cur.p.degree_or(-1) >= dp) {
      // Leading forms cancelled but degree did not drop; cannot happen for a
      // genuine reduction step.
      out.status = DecomposeStatus::NotReducible;
      out.stuck = cur;
      return out;
    }
  }

  // cur is affine now; read off the final factor.
  AffineFactor a;
  a.m[0][0] = cur.p.coefficient(1, 0);
  a.m[0][1] = cur.p.coefficient(0, 1);
  a.m[1][0] = cur.q.coefficient(1, 0);
  a.m[1][1] = cur.q.coefficient(0, 1);
  a.t[0] = cur.p.coefficient(0, 0);
  a.t[1] = cur.q.coefficient(0, 0);

  TameCertificate cert;
  cert.subject = f;
  cert.factors.emplace_back(std::move(a));
  for (auto it = stripped.rbegin(); it != stripped.rend(); ++it)
    cert.factors.push_back(it->inverted());
  out.status = DecomposeStatus::Ok;
  out.certificate = std::move(cert);
  return out;
}

Endo invert(const TameCertificate& c) {
  if (!verify(c)) throw CorruptCertificate();
  Endo inv = Endo::identity();
  bool first = true;
  for (auto it = c.factors.rbegin(); it != c.factors.rend(); ++it) {
    Endo fe = it->inverted().to_endo();
    inv = first ? fe : compose(inv, fe);
    first = false;
  }
  // Identity checks, folded one factor at a time. The recomposition check
  // above established subject = F1...Fk exactly, so by associativity these
  // folds equal compose(inv, subject) and compose(subject, inv); folding
  // against single factors cancels eagerly and keeps every intermediate no
  // bigger than inv, instead of paying for one composition of two
  // full-degree maps.
  const Endo id = Endo::identity();
  Endo left = inv;
  for (const auto& fac : c.factors) left = compose(left, fac.to_endo());
  Endo right = inv;
  for (auto it = c.factors.rbegin(); it != c.factors.rend(); ++it)
    right = compose(it->to_endo(), right);
  if (left != id || right != id) throw CorruptCertificate();
  return inv;
}

}  // namespace kellerlab
