#ifndef KELLERLAB_POLY_HPP
#define KELLERLAB_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kellerlab/field_tower.hpp"

namespace kellerlab {

struct Monomial {
  unsigned x = 0;
  unsigned y = 0;
  unsigned total() const { return x + y; }
};

/// Graded lex with x > y: higher total degree first, ties broken by the
/// higher x-exponent. begin() of a Poly's term map is the leading term.
struct GradedLexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.x > b.x;
  }
};

/// Degree of the zero polynomial is a distinguished minus-infinity value,
/// modeled as an empty optional.
using Degree = std::optional<long>;

enum class Parity { AllEven, AllOdd, Mixed };

/// Sparse bivariate polynomial over field-tower coefficients. Canonical
/// form: no zero coefficients stored. Immutable value semantics.
class Poly {
 public:
  using Terms = std::map<Monomial, FieldElement, GradedLexDesc>;

  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly constant(FieldElement c);
  static Poly constant(long n) { return constant(FieldElement(n)); }
  static Poly variable_x();
  static Poly variable_y();
  static Poly monomial(unsigned i, unsigned j, FieldElement c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElement constant_term() const;
  FieldElement coefficient(unsigned i, unsigned j) const;

  Degree total_degree() const;
  Degree weighted_degree(int w1, int w2) const;
  long degree_or(long fallback) const;

  const Monomial& leading_monomial() const;  // graded lex, throws on zero
  const FieldElement& leading_coefficient() const;

  Poly operator-() const;
  Poly operator+(const Poly& v) const;
  Poly operator-(const Poly& v) const;
  Poly operator*(const Poly& v) const;
  Poly operator*(const FieldElement& s) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& v) const;
  bool operator!=(const Poly& v) const { return !(*this == v); }

  Poly derivative_x() const;
  Poly derivative_y() const;

  /// Decomposition into (w1,w2)-homogeneous components, ascending degree.
  std::vector<std::pair<long, Poly>> graded_parts(int w1, int w2) const;
  Poly leading_form(int w1, int w2) const;

  /// Parity of the (w1,w2)-weighted degree over all monomials; axis must be
  /// (0,1) or (1,0). Throws ZeroPolynomial on zero input.
  Parity parity_profile(int w1, int w2) const;

  /// Substitute x -> px, y -> py.
  Poly substituted(const Poly& px, const Poly& py) const;

  std::string to_string() const;

  // Canonical form maintenance; drops zero coefficients.
  void set(unsigned i, unsigned j, FieldElement c);

 private:
  Terms terms_;
};

Poly jacobian(const Poly& p, const Poly& q);

inline Poly operator*(const FieldElement& s, const Poly& p) { return p * s; }

}  // namespace kellerlab

#endif
