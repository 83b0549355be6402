#ifndef KELLERLAB_TAME_HPP
#define KELLERLAB_TAME_HPP

#include <array>
#include <variant>
#include <vector>

#include "kellerlab/endo.hpp"

namespace kellerlab {

/// x -> m00*x + m01*y + t0, y -> m10*x + m11*y + t1, with det != 0.
struct AffineFactor {
  std::array<std::array<FieldElement, 2>, 2> m;
  std::array<FieldElement, 2> t;

  FieldElement det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

/// x -> scale*x + h(y), y -> y; h univariate in y, scale != 0.
struct ElementaryX {
  Poly h;
  FieldElement scale;
};

/// x -> x, y -> scale*y + h(x).
struct ElementaryY {
  Poly h;
  FieldElement scale;
};

class Factor {
 public:
  using Kind = std::variant<AffineFactor, ElementaryX, ElementaryY>;

  explicit Factor(AffineFactor a);
  explicit Factor(ElementaryX e);
  explicit Factor(ElementaryY e);

  static Factor affine(AffineFactor a) { return Factor(std::move(a)); }
  static Factor exchange();

  const Kind& kind() const { return kind_; }
  bool is_affine() const { return std::holds_alternative<AffineFactor>(kind_); }

  Endo to_endo() const;
  Factor inverted() const;  // same kind, explicit inverse

 private:
  Kind kind_;
};

/// Ordered factor list whose left-to-right compose-product equals the
/// subject: subject == compose(F1, compose(F2, ... Fn)).
struct TameCertificate {
  std::vector<Factor> factors;
  Endo subject;
};

enum class DecomposeStatus { Ok, NotKeller, NotReducible };

struct DecomposeResult {
  DecomposeStatus status = DecomposeStatus::NotKeller;
  std::optional<TameCertificate> certificate;
  // The stuck pair, attached when status == NotReducible; such a Keller map
  // would be a Jacobian-Conjecture counterexample candidate.
  std::optional<Endo> stuck;

  bool ok() const { return status == DecomposeStatus::Ok; }
};

/// Degree reduction per the Jung-van der Kulk structure: strip elementary
/// factors while the larger image's leading form is a constant multiple of a
/// power of the smaller one's, then finish with one affine factor.
DecomposeResult decompose(const Endo& f);

Endo recompose(const TameCertificate& c);

bool verify(const TameCertificate& c);

/// Inverse endomorphism from a certificate; both composition orders are
/// checked against the identity. Throws CorruptCertificate.
Endo invert(const TameCertificate& c);

}  // namespace kellerlab

#endif
