#ifndef KELLERLAB_ENDO_HPP
#define KELLERLAB_ENDO_HPP

#include <optional>
#include <string>

#include "kellerlab/poly.hpp"

namespace kellerlab {

/// Ring endomorphism of k[x,y], given by the images p = f(x), q = f(y).
///
/// Composition follows the gf convention: (gf)(x) = g(f(x)), realized by
/// substituting g's images into f's image polynomials. Hence
/// apply(compose(g,f), r) == apply(g, apply(f, r)).
struct Endo {
  Poly p;
  Poly q;

  static Endo identity();
  static Endo exchange();  // x -> y, y -> x

  bool operator==(const Endo& other) const { return p == other.p && q == other.q; }
  bool operator!=(const Endo& other) const { return !(*this == other); }

  std::string to_string() const;
};

/// Substitutes x -> f.p, y -> f.q in r.
Poly apply(const Endo& f, const Poly& r);

Endo compose(const Endo& g, const Endo& f);

Poly jacobian_of(const Endo& f);

/// True iff jacobian_of(f) is a nonzero constant.
bool is_keller(const Endo& f);

/// The constant Jacobian of a Keller map; throws NotKeller otherwise.
FieldElement keller_constant(const Endo& f);

/// Least n <= max with f^n = id, or nullopt.
std::optional<unsigned> order(const Endo& f, unsigned max);

bool is_involution(const Endo& f);

}  // namespace kellerlab

#endif
