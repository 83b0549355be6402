#include "kellerlab/endo.hpp"

#include "kellerlab/errors.hpp"

namespace kellerlab {

Endo Endo::identity() { return Endo{Poly::variable_x(), Poly::variable_y()}; }

Endo Endo::exchange() { return Endo{Poly::variable_y(), Poly::variable_x()}; }

std::string Endo::to_string() const {
  return "f: x -> " + p.to_string() + "; y -> " + q.to_string();
}

Poly apply(const Endo& f, const Poly& r) { return r.substituted(f.p, f.q); }

Endo compose(const Endo& g, const Endo& f) { return Endo{apply(g, f.p), apply(g, f.q)}; }

Poly jacobian_of(const Endo& f) { return jacobian(f.p, f.q); }

bool is_keller(const Endo& f) {
  Poly j = jacobian_of(f);
  return j.is_constant() && !j.is_zero();
}

FieldElement keller_constant(const Endo& f) {
  Poly j = jacobian_of(f);
  if (!j.is_constant() || j.is_zero()) throw NotKeller();
  return j.constant_term();
}

std::optional<unsigned> order(const Endo& f, unsigned max) {
  Endo acc = f;
  const Endo id = Endo::identity();
  for (unsigned n = 1; n <= max; ++n) {
    if (acc == id) return n;
    if (n < max) acc = compose(f, acc);
  }
  return std::nullopt;
}

bool is_involution(const Endo& f) {
  if (f == Endo::identity()) return false;
  return compose(f, f) == Endo::identity();
}

}  // namespace kellerlab
