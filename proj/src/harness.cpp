#include "kellerlab/harness.hpp"

#include <algorithm>

#include "kellerlab/errors.hpp"

namespace kellerlab {
namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

SplitRng::SplitRng(const GenSpec& spec) : engine_(spec.seed ^ fnv1a(spec.label)) {}

uint64_t SplitRng::next() { return engine_(); }

long SplitRng::int_in(long lo, long hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(next() % span);
}

long SplitRng::nonzero_int_in(long lo, long hi) {
  for (;;) {
    long v = int_in(lo, hi);
    if (v != 0) return v;
  }
}

namespace {

FieldElement random_coeff(SplitRng& rng, const GenSpec& spec, bool nonzero) {
  const long h = static_cast<long>(spec.coeff_height);
  if (spec.field_mode == FieldMode::Gaussian) {
    for (;;) {
      FieldElement re(rng.int_in(-h, h)), im(rng.int_in(-h, h));
      FieldElement v = re + im * FieldElement::imaginary_unit();
      if (!nonzero || !v.is_zero()) return v;
    }
  }
  long v = nonzero ? rng.nonzero_int_in(-h, h) : rng.int_in(-h, h);
  return FieldElement(v);
}

Factor random_affine(SplitRng& rng, const GenSpec& spec) {
  for (;;) {
    AffineFactor a;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) a.m[r][c] = random_coeff(rng, spec, false);
    a.t[0] = random_coeff(rng, spec, false);
    a.t[1] = random_coeff(rng, spec, false);
    if (!a.det().is_zero()) return Factor(std::move(a));
  }
}

Poly random_univariate(SplitRng& rng, const GenSpec& spec, bool in_y,
                       unsigned max_degree) {
  // Degree uniform in [1, min(max_elem_degree, max_degree)], nonzero leading
  // coefficient.
  const unsigned cap = std::max(1u, std::min(spec.max_elem_degree, max_degree));
  const unsigned deg = static_cast<unsigned>(rng.int_in(1, cap));
  Poly h;
  for (unsigned k = 0; k <= deg; ++k) {
    FieldElement c = random_coeff(rng, spec, k == deg);
    if (c.is_zero()) continue;
    h.set(in_y ? 0 : k, in_y ? k : 0, std::move(c));
  }
  return h;
}

Factor random_factor(SplitRng& rng, const GenSpec& spec, unsigned max_degree) {
  switch (rng.int_in(0, 2)) {
    case 0:
      return random_affine(rng, spec);
    case 1:
      return Factor(ElementaryX{random_univariate(rng, spec, true, max_degree),
                                random_coeff(rng, spec, true)});
    default:
      return Factor(ElementaryY{random_univariate(rng, spec, false, max_degree),
                                random_coeff(rng, spec, true)});
  }
}

}  // namespace

TameSample random_tame(const GenSpec& spec) {
  if (spec.factor_count < 1) throw std::invalid_argument("factor_count must be >= 1");
  SplitRng rng(spec);
  TameCertificate cert;
  Endo acc = Endo::identity();
  const unsigned budget = std::max(1u, spec.degree_budget);
  for (unsigned k = 0; k < spec.factor_count; ++k) {
    const unsigned cur =
        static_cast<unsigned>(std::max({acc.p.degree_or(1), acc.q.degree_or(1), 1l}));
    Factor f = random_factor(rng, spec, budget / std::min(cur, budget));
    acc = (k == 0) ? f.to_endo() : compose(acc, f.to_endo());
    cert.factors.push_back(std::move(f));
  }
  cert.subject = acc;
  return TameSample{acc, std::move(cert)};
}

TameSample random_keller_with_quadratic_x(const GenSpec& spec) {
  for (unsigned attempt = 0; attempt < 10000; ++attempt) {
    GenSpec sub = spec;
    sub.label = spec.label + "/qx" + std::to_string(attempt);
    TameSample s = random_tame(sub);
    if (s.endo.p.degree_or(0) <= 2) return s;
  }
  throw ResourceLimit("no tame map with deg p <= 2 after 10000 rejections");
}

Involution random_involution(const GenSpec& spec, const std::string& base) {
  Involution b = builtin_involution(base);
  TameSample u = random_tame(spec);
  Endo u_inv = invert(u.certificate);
  Endo s = compose(u_inv, compose(b.endo, u.endo));
  if (!is_involution(s))
    throw std::logic_error("conjugate of an involution failed the order-2 check");
  return Involution{s, b.cls, ""};
}

}  // namespace kellerlab
