#ifndef KELLERLAB_TESTS_HELPERS_HPP
#define KELLERLAB_TESTS_HELPERS_HPP

#include "kellerlab/endo.hpp"
#include "kellerlab/parse.hpp"

namespace kellerlab::testing {

inline Poly P(const std::string& src) { return parse_poly(src); }

inline Endo E(const std::string& p, const std::string& q) { return Endo{P(p), P(q)}; }

inline FieldElement C(const std::string& src) { return P(src).constant_term(); }

}  // namespace kellerlab::testing

#endif
