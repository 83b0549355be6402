#ifndef KELLERLAB_HARNESS_HPP
#define KELLERLAB_HARNESS_HPP

#include <cstdint>
#include <random>
#include <string>

#include "kellerlab/involution.hpp"
#include "kellerlab/tame.hpp"

namespace kellerlab {

enum class FieldMode { Rational, Gaussian, RealRadical };

/// Deterministic generation spec: identical GenSpec, identical output.
struct GenSpec {
  uint64_t seed = 0;
  unsigned factor_count = 3;
  unsigned max_elem_degree = 3;
  unsigned coeff_height = 3;
  FieldMode field_mode = FieldMode::Rational;
  // Stream label; distinct labels draw from independent streams so suites
  // do not perturb each other's sequences.
  std::string label = "default";
  // Cap on the composed map's total degree: elementary factor degrees are
  // drawn within the remaining budget, so factor products stay desk-scale
  // instead of exploding multiplicatively.
  unsigned degree_budget = 32;
};

/// mt19937_64 split by (seed, label); bounded draws avoid
/// distribution-object portability concerns.
class SplitRng {
 public:
  explicit SplitRng(const GenSpec& spec);
  uint64_t next();
  long int_in(long lo, long hi);             // inclusive
  long nonzero_int_in(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

struct TameSample {
  Endo endo;
  TameCertificate certificate;  // by construction
};

TameSample random_tame(const GenSpec& spec);

/// Rejection-samples random_tame until deg p <= 2; throws ResourceLimit
/// after 10000 rejections.
TameSample random_keller_with_quadratic_x(const GenSpec& spec);

Involution random_involution(const GenSpec& spec, const std::string& base);

}  // namespace kellerlab

#endif
