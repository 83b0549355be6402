#include "kellerlab/engines.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <tuple>
#include <unordered_set>

#include "kellerlab/errors.hpp"

namespace kellerlab {
namespace {

const FieldElement kOne = FieldElement::one();
const FieldElement kZero = FieldElement::zero();

Endo linear_endo(const FieldElement& m00, const FieldElement& m01, const FieldElement& t0,
                 const FieldElement& m10, const FieldElement& m11, const FieldElement& t1) {
  Poly x = Poly::variable_x(), y = Poly::variable_y();
  return Endo{x * m00 + y * m01 + Poly::constant(t0),
              x * m10 + y * m11 + Poly::constant(t1)};
}

TranscriptStep make_step(Endo g, std::string label) {
  auto d = decompose(g);
  if (!d.ok()) throw std::logic_error("symmetrization move is not tame: " + g.to_string());
  return TranscriptStep{std::move(g), std::move(*d.certificate), std::move(label)};
}

// Coerce into a tower containing i (needed for the sqrt moves of II(2) and
// Case III over the complex numbers).
FieldElement with_i(const FieldElement& v) {
  if (v.tower()->has_i()) return v;
  return coerce(v, join_towers(v.tower(), FieldTower::gaussian()));
}

struct QuadState {
  Poly p;
  std::vector<TranscriptStep> steps;
  bool real_mode = false;

  void push(Endo g, const std::string& label) {
    p = apply(g, p);
    steps.push_back(make_step(std::move(g), label));
  }
};

struct QuadCoeffs {
  FieldElement a, b, c, d, e, r;
};

QuadCoeffs read_quadratic(const Poly& p) {
  return QuadCoeffs{p.coefficient(2, 0), p.coefficient(1, 1), p.coefficient(0, 2),
                    p.coefficient(1, 0), p.coefficient(0, 1), p.coefficient(0, 0)};
}

// III(1)-form completion: p = s*x^2 + s*y^2 + D*x + E*y + r with s = +/-1.
// One translation makes it exchange-symmetric.
void complete_squares(QuadState& st, const std::string& label) {
  QuadCoeffs k = read_quadratic(st.p);
  FieldElement two(2);
  FieldElement hx = -(k.d / (two * k.a));
  FieldElement hy = -(k.e / (two * k.c));
  if (!hx.is_zero() || !hy.is_zero())
    st.push(linear_endo(kOne, kZero, hx, kZero, kOne, hy), label + ":translate");
}

// Case II(1): p = a*x^2 + d*x + e*y + r, a != 0. Returns the case label tail
// and the target involution name.
std::pair<std::string, std::string> handle_case_ii1(QuadState& st) {
  QuadCoeffs k = read_quadratic(st.p);
  if (k.d.is_zero() && k.e.is_zero()) return {"II(1).d=e=0", "beta"};
  if (k.e.is_zero()) return {"II(1).e=0", "beta"};
  if (k.d.is_zero()) return {"II(1).d=0", "gamma"};
  // g1 = (e*x, d*y), then g2 = (x, -x+y) removes the x-linear term.
  st.push(linear_endo(k.e, kZero, kZero, kZero, k.d, kZero), "II(1):scale");
  st.push(linear_endo(kOne, kZero, kZero, -kOne, kOne, kZero), "II(1):shear");
  return {"II(1).d,e!=0", "gamma"};
}

}  // namespace

Degree1Result degree1_reduce(const Endo& f) {
  if (!is_keller(f)) throw NotKeller();
  Endo work = f;
  bool exchanged = false;
  if (work.p.degree_or(-1) != 1) {
    if (work.q.degree_or(-1) != 1)
      throw DegreeMismatch("degree1_reduce: neither image has degree 1");
    work = compose(work, Endo::exchange());
    exchanged = true;
  }
  const FieldElement a = work.p.coefficient(1, 0);
  const FieldElement b = work.p.coefficient(0, 1);
  const FieldElement e = work.p.coefficient(0, 0);
  Endo g;
  if (!a.is_zero() && !b.is_zero()) {
    // g(x) = (1/a)(x - y), g(y) = (1/b) y
    g = linear_endo(a.inverse(), -a.inverse(), kZero, kZero, b.inverse(), kZero);
  } else if (!a.is_zero()) {
    g = linear_endo(a.inverse(), kZero, kZero, kZero, kOne, kZero);
  } else {
    // p = b*y + e; exchange-and-scale so that (gf)(x) = x + e.
    g = linear_endo(kZero, kOne, kZero, b.inverse(), kZero, kZero);
  }
  Endo gf = compose(g, work);
  // (gf)(x) = x + e, so Jac(gf) = d((gf)(y))/dy must be the Keller constant.
  Poly dq = gf.q.derivative_y();
  if (!dq.is_constant() || dq.is_zero())
    throw std::logic_error("degree1_reduce: (gf)(y) is not a*y + H(x)");
  const FieldElement scale = dq.constant_term();
  Poly hx = gf.q - Poly::variable_y() * scale;  // H(x)
  // Inverse of gf: x -> x - e, y -> (y - H(x - e)) / scale.
  Poly xme = Poly::variable_x() - Poly::constant(e);
  Endo gf_inv{xme, (Poly::variable_y() - hx.substituted(xme, Poly::zero())) * scale.inverse()};
  const Endo id = Endo::identity();
  if (compose(gf_inv, gf) != id || compose(gf, gf_inv) != id)
    throw std::logic_error("degree1_reduce: inverse check failed");
  // f = g^-1 (gf) [exchange absorbed on the right], so f^-1 = (gf)^-1 g,
  // possibly preceded by the self-inverse exchange.
  Endo inv = compose(gf_inv, g);
  if (exchanged) inv = compose(Endo::exchange(), inv);
  if (compose(inv, f) != id || compose(f, inv) != id)
    throw std::logic_error("degree1_reduce: full inverse check failed");
  return Degree1Result{std::move(inv), std::move(g), std::move(gf)};
}

WangResult wang_special(const Endo& f) {
  if (!is_keller(f)) throw NotKeller();
  if (f.p.degree_or(0) > 2 || f.q.degree_or(0) > 2)
    throw DegreeMismatch("wang_special: an image exceeds degree 2");
  Poly p2 = Poly(), q2 = Poly();
  for (const auto& [deg, part] : f.p.graded_parts(1, 1))
    if (deg == 2) p2 = part;
  for (const auto& [deg, part] : f.q.graded_parts(1, 1))
    if (deg == 2) q2 = part;

  // mu = 0 (or lambda = 0): one image already has degree <= 1.
  if (q2.is_zero()) return WangResult{degree1_reduce(f).inverse, std::nullopt, "mu=0"};
  if (p2.is_zero()) return WangResult{degree1_reduce(f).inverse, std::nullopt, "deg_p<=1"};

  if (!jacobian(p2, q2).is_zero())
    throw std::logic_error("wang_special: Jac(p2,q2) != 0 contradicts the Keller property");
  // p2 and q2 are proportional multiples of a common form R~.
  FieldElement ratio = p2.leading_coefficient() / q2.leading_coefficient();
  if (p2 != q2 * ratio)
    throw std::logic_error("wang_special: quadratic parts are not proportional");
  // g = (x - (lambda/mu) y, y); (fg)(x) = p - ratio*q has degree <= 1.
  Endo g = linear_endo(kOne, -ratio, kZero, kZero, kOne, kZero);
  Endo fg = compose(f, g);
  Degree1Result inner = degree1_reduce(fg);
  // f = (fg) g^-1, hence f^-1 = g (fg)^-1.
  Endo inv = compose(g, inner.inverse);
  const Endo id = Endo::identity();
  if (compose(inv, f) != id || compose(f, inv) != id)
    throw std::logic_error("wang_special: inverse check failed");
  return WangResult{std::move(inv), std::move(g), "quadratic-cancel"};
}

SymmetrizationTranscript symmetrize_cases(const Poly& p, bool real_mode) {
  const long deg_p = p.degree_or(-1);
  if (deg_p > 2) throw DegreeMismatch("symmetrize_cases: deg p > 2, use symmetrize_search");
  if (deg_p < 1) throw DegreeMismatch("symmetrize_cases: p must be non-constant");

  QuadState st{p, {}, real_mode};
  std::string case_label;
  std::string target_name = "alpha";

  if (deg_p == 1) {
    QuadCoeffs k = read_quadratic(st.p);  // a,b from the linear part
    const FieldElement a = k.d, b = k.e;  // p = a*x + b*y + c
    if (b.is_zero()) {
      case_label = "First.b=0";
      target_name = "beta";
    } else if (a.is_zero()) {
      case_label = "First.a=0";
      target_name = "gamma";
    } else {
      st.push(linear_endo(b, kZero, kZero, kZero, a, kZero), "First:scale");
      case_label = "First.ab!=0";
      target_name = "alpha";
    }
  } else {
    QuadCoeffs k = read_quadratic(st.p);
    if (k.a.is_zero() && k.c.is_zero()) {
      // Case I: p = b*x*y + d*x + e*y + r, b != 0.
      if (k.d.is_zero() && k.e.is_zero()) {
        case_label = "I(1)";
      } else if (k.e.is_zero()) {
        st.push(linear_endo(kOne, kZero, kZero, kZero, k.b.inverse(), -(k.d / k.b)),
                "I(2):normalize-y");
        case_label = "I(2)";
      } else if (k.d.is_zero()) {
        st.push(linear_endo(k.b.inverse(), kZero, -(k.e / k.b), kZero, kOne, kZero),
                "I(3):normalize-x");
        case_label = "I(3)";
      } else {
        st.push(linear_endo(k.e, kZero, kZero, kZero, k.d, kZero), "I(4):scale");
        case_label = "I(4)";
      }
      target_name = "alpha";
    } else if (k.a.is_zero() || k.c.is_zero()) {
      // Case II, normalized to c = 0, a != 0 by the exchange when needed.
      if (k.a.is_zero()) {
        st.push(Endo::exchange(), "II:wlog-exchange");
        k = read_quadratic(st.p);
      }
      if (k.b.is_zero()) {
        auto [label, target] = handle_case_ii1(st);
        case_label = label;
        target_name = target;
      } else {
        if (real_mode)
          throw RealModeViolation("II(2) needs the imaginary unit; no real recipe");
        // g1 = (x/sqrt(a) - i*y/sqrt(a), 2*sqrt(a)*i*y/b)
        FieldElement sa = field_sqrt(with_i(k.a));
        FieldElement i = FieldElement::imaginary_unit();
        FieldElement inv_sa = sa.inverse();
        st.push(linear_endo(inv_sa, -(i * inv_sa), kZero, kZero,
                            FieldElement(2) * sa * i / k.b, kZero),
                "II(2):isotropic-rotate");
        complete_squares(st, "II(2)");
        case_label = "II(2)";
        target_name = "alpha";
      }
    } else {
      // Case III: both a and c nonzero.
      bool negate = false;
      if (real_mode) {
        const int signs = k.a.sign_real() * k.c.sign_real();
        if (signs < 0)
          throw RealModeViolation(
              "Case III over the reals needs a and c of the same sign");
        negate = k.a.sign_real() < 0;  // the -p adjustment, absorbed in scaling
      }
      FieldElement ra = negate ? -k.a : k.a;
      FieldElement rc = negate ? -k.c : k.c;
      if (!real_mode) {
        ra = with_i(ra);
        rc = with_i(rc);
      }
      FieldElement sa = field_sqrt(ra);
      // Chain the second radical on top of the first extension, so sa and sc
      // live in one tower instead of two incomparable siblings.
      FieldElement sc = field_sqrt(coerce(rc, sa.tower()));
      st.push(linear_endo(sa.inverse(), kZero, kZero, kZero, sc.inverse(), kZero),
              "III:normalize-quadratic");
      QuadCoeffs k1 = read_quadratic(st.p);  // s*x^2 + B*x*y + s*y^2 + ...
      const FieldElement sigma = k1.a;       // +1, or -1 in the negated real case
      if (k1.b.is_zero()) {
        complete_squares(st, "III(1)");
        case_label = "III(1)";
        target_name = "alpha";
      } else {
        const FieldElement bprime = k1.b / sigma;
        const FieldElement t = kOne - bprime * bprime / FieldElement(4);
        if (!t.is_zero()) {
          FieldElement ti = real_mode ? t : with_i(t);
          if (real_mode && ti.sign_real() < 0)
            throw RealModeViolation("III(2) over the reals with indefinite form (t < 0)");
          FieldElement stq = field_sqrt(ti);
          st.push(linear_endo(kOne, -(bprime / (FieldElement(2) * stq)), kZero, kZero,
                              stq.inverse(), kZero),
                  "III(2):diagonalize");
          complete_squares(st, "III(2).tnz");
          case_label = "III(2).tnz";
          target_name = "alpha";
        } else if (bprime == FieldElement(2)) {
          st.push(linear_endo(kOne, kOne, kZero, kZero, -kOne, kZero), "III(2).t0:collapse");
          auto [label, target] = handle_case_ii1(st);
          case_label = "III(2).t0.B+2";
          target_name = target;
          (void)label;
        } else {
          // bprime == -2 by t = 0
          st.push(linear_endo(kOne, kOne, kZero, kZero, kOne, kZero), "III(2).t0:collapse");
          auto [label, target] = handle_case_ii1(st);
          case_label = "III(2).t0.B-2";
          target_name = target;
          (void)label;
        }
      }
    }
  }

  SymmetrizationTranscript out;
  out.steps = std::move(st.steps);
  out.target = builtin_involution(target_name);
  out.witness = st.p;
  out.case_label = case_label;
  out.type = symmetry_type(out.witness, out.target);
  if (out.type != SymmetryType::Symmetric)
    throw std::logic_error("symmetrize_cases: witness is not symmetric under " + target_name +
                           " (case " + case_label + ")");
  return out;
}

SymmetrizationTranscript symmetrize_deg2(const Endo& f, bool real_mode) {
  if (!is_keller(f)) throw NotKeller();
  SymmetrizationTranscript out = symmetrize_cases(f.p, real_mode);
  // Transcript invariant: (prod g_i f)(x) == witness.
  Endo acc = f;
  for (const auto& step : out.steps) acc = compose(step.g, acc);
  if (acc.p != out.witness)
    throw std::logic_error("symmetrize_deg2: transcript does not reproduce the witness");
  return out;
}

Endo invert_via_symmetry(const Endo& f) {
  if (!is_keller(f)) throw NotKeller();
  bool established = false;
  if (f.p.degree_or(0) <= 2) {
    symmetrize_deg2(f);
    established = true;
  } else if (f.q.degree_or(0) <= 2) {
    symmetrize_deg2(compose(f, Endo::exchange()));
    established = true;
  } else {
    established = parity_classify(f).applicable();
  }
  if (!established)
    throw DegreeMismatch("invert_via_symmetry: neither the degree nor the parity route applies");
  auto d = decompose(f);
  if (!d.ok())
    throw std::logic_error(
        "invert_via_symmetry: symmetrization certifies invertibility but reduction got stuck");
  return invert(*d.certificate);
}

ParityReport parity_classify(const Endo& f) {
  if (!is_keller(f)) throw NotKeller();
  ParityReport out;
  switch (f.p.parity_profile(0, 1)) {
    case Parity::AllEven:
      out.axis01 = ParityAxisResult{"beta", SymmetryType::Symmetric};
      break;
    case Parity::AllOdd:
      out.axis01 = ParityAxisResult{"beta", SymmetryType::Skew};
      break;
    case Parity::Mixed:
      break;
  }
  switch (f.p.parity_profile(1, 0)) {
    case Parity::AllEven:
      out.axis10 = ParityAxisResult{"gamma", SymmetryType::Symmetric};
      break;
    case Parity::AllOdd:
      out.axis10 = ParityAxisResult{"gamma", SymmetryType::Skew};
      break;
    case Parity::Mixed:
      break;
  }
  return out;
}

namespace {

struct Goal {
  std::string involution;
  SymmetryType type;
};

std::optional<Goal> search_goal(const Poly& A) {
  for (const char* name : {"alpha", "beta", "gamma", "a"}) {
    SymmetryType t = symmetry_type(A, builtin_involution(name));
    if (t != SymmetryType::Neither) return Goal{name, t};
  }
  return std::nullopt;
}

std::vector<Endo> search_moves(unsigned degree_cap, unsigned height_cap) {
  std::vector<Endo> moves;
  const long h = static_cast<long>(height_cap);
  // Elementary moves x -> x + h(y) (and the y-mirror), integer coefficients.
  std::vector<std::vector<long>> tuples;
  // Enumerate coefficient vectors (c_0..c_deg) with |c_k| <= h, c_deg != 0.
  for (unsigned deg = 1; deg <= degree_cap; ++deg) {
    std::vector<long> idx(deg + 1, -h);
    for (;;) {
      if (idx[deg] != 0) tuples.push_back(idx);
      size_t k = 0;
      while (k <= deg && ++idx[k] > h) idx[k++] = -h;
      if (k > deg) break;
    }
  }
  // Simplest moves first so the found sequence is the canonical one.
  std::stable_sort(tuples.begin(), tuples.end(),
                   [](const std::vector<long>& a, const std::vector<long>& b) {
                     auto weight = [](const std::vector<long>& v) {
                       long nonzero = 0, mass = 0;
                       for (long c : v) {
                         if (c != 0) ++nonzero;
                         mass += std::labs(c);
                       }
                       return std::tuple<long, long, size_t>(nonzero, mass, v.size());
                     };
                     return weight(a) < weight(b);
                   });
  for (const auto& coeffs : tuples) {
    Poly hy, hx;
    for (size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      hy.set(0, static_cast<unsigned>(k), FieldElement(coeffs[k]));
      hx.set(static_cast<unsigned>(k), 0, FieldElement(coeffs[k]));
    }
    moves.push_back(Endo{Poly::variable_x() + hy, Poly::variable_y()});
    moves.push_back(Endo{Poly::variable_x(), Poly::variable_y() + hx});
  }
  // Affine moves with entries of bounded height.
  for (long m00 = -h; m00 <= h; ++m00)
    for (long m01 = -h; m01 <= h; ++m01)
      for (long m10 = -h; m10 <= h; ++m10)
        for (long m11 = -h; m11 <= h; ++m11) {
          if (m00 * m11 - m01 * m10 == 0) continue;
          for (long t0 = -h; t0 <= h; ++t0)
            for (long t1 = -h; t1 <= h; ++t1)
              moves.push_back(linear_endo(FieldElement(m00), FieldElement(m01),
                                          FieldElement(t0), FieldElement(m10),
                                          FieldElement(m11), FieldElement(t1)));
        }
  return moves;
}

}  // namespace

SearchResult symmetrize_search(const Poly& A, unsigned depth, unsigned degree_cap,
                               unsigned height_cap, size_t state_cap) {
  SearchResult out;
  if (auto g = search_goal(A)) {
    out.found = true;
    out.witness = A;
    out.involution = g->involution;
    out.type = g->type;
    return out;
  }
  const std::vector<Endo> moves = search_moves(degree_cap, height_cap);

  struct Node {
    Poly image;
    std::vector<size_t> path;
  };
  std::deque<Node> frontier{{A, {}}};
  std::unordered_set<std::string> seen{A.to_string()};
  for (unsigned level = 1; level <= depth; ++level) {
    std::deque<Node> next;
    for (const auto& node : frontier) {
      for (size_t mi = 0; mi < moves.size(); ++mi) {
        Poly image = apply(moves[mi], node.image);
        std::string key = image.to_string();
        if (!seen.insert(std::move(key)).second) continue;
        ++out.states_explored;
        if (out.states_explored > state_cap)
          throw ResourceLimit("symmetrize_search exceeded the state cap");
        auto path = node.path;
        path.push_back(mi);
        if (auto g = search_goal(image)) {
          out.found = true;
          out.witness = std::move(image);
          out.involution = g->involution;
          out.type = g->type;
          for (size_t k : path) out.moves.push_back(moves[k]);
          return out;
        }
        next.push_back(Node{std::move(image), std::move(path)});
      }
    }
    frontier = std::move(next);
  }
  return out;  // NotFound
}

DruzkowskiResult druzkowski2(const Poly& l1, const Poly& l2) {
  for (const Poly* l : {&l1, &l2})
    for (const auto& [m, c] : l->terms())
      if (m.total() != 1)
        throw std::invalid_argument("druzkowski2 expects linear forms in x and y");
  DruzkowskiResult out;
  out.map = Endo{Poly::variable_x() + l1.pow(3), Poly::variable_y() + l2.pow(3)};
  out.jacobian = jacobian_of(out.map);
  out.accepted = (out.jacobian == Poly::constant(1));
  if (!out.accepted) return out;
  auto d = decompose(out.map);
  if (!d.ok())
    throw std::logic_error("druzkowski2: constant-Jacobian cubic-linear map failed to reduce");
  out.inverse = invert(*d.certificate);
  return out;
}

}  // namespace kellerlab
