#ifndef KELLERLAB_ENGINES_HPP
#define KELLERLAB_ENGINES_HPP

#include <optional>
#include <string>
#include <vector>

#include "kellerlab/cmw.hpp"
#include "kellerlab/involution.hpp"
#include "kellerlab/tame.hpp"

namespace kellerlab {

struct TranscriptStep {
  Endo g;
  TameCertificate certificate;
  std::string label;
};

/// Output of the degree-<=2 symmetrization pipeline: left moves g_1..g_l,
/// a target involution of class Cminus1, and the symmetric image of x.
/// Invariant: (g_l ... g_1 f)(x) == witness and
/// symmetry_type(witness, target) == type.
struct SymmetrizationTranscript {
  std::vector<TranscriptStep> steps;
  Involution target;
  Poly witness;
  SymmetryType type = SymmetryType::Symmetric;
  std::string case_label;
};

struct Degree1Result {
  Endo inverse;
  Endo normalizer;   // g with (gf)(x) = x + e
  Endo normalized;   // gf = (x + e, a*y + H(x))
};

/// Normalizes p = ax+by+e to x+e and solves for the explicit inverse.
/// When deg q == 1 instead, the exchange is pre-composed internally.
/// Throws NotKeller, DegreeMismatch.
Degree1Result degree1_reduce(const Endo& f);

struct WangResult {
  Endo inverse;
  // The right move g = (x - (lambda/mu) y, y) when the quadratic parts had
  // to be cancelled; empty on the degree-1 short-circuits.
  std::optional<Endo> right_move;
  std::string branch;
};

/// Wang's theorem at n=2: deg p <= 2 and deg q <= 2.
WangResult wang_special(const Endo& f);

/// The symmetrization decision tree for deg p <= 2 (callers pre-compose the
/// exchange to use q). real_mode restricts radicands to reals and applies
/// the sign adjustments of Case III(1)'s remark.
SymmetrizationTranscript symmetrize_deg2(const Endo& f, bool real_mode = false);

/// The case tree applied to a bare image polynomial of degree in [1,2]; the
/// moves only use p's coefficients, so no Keller mate is needed. Used by the
/// sub-case totality fuzzer; symmetrize_deg2 adds the Keller checks on top.
SymmetrizationTranscript symmetrize_cases(const Poly& p, bool real_mode = false);

/// Invertibility via the symmetrization / parity route, inverse via tame
/// decomposition, cross-checked against the identity.
Endo invert_via_symmetry(const Endo& f);

struct ParityAxisResult {
  std::string involution;  // "beta" for axis (0,1), "gamma" for (1,0)
  SymmetryType type;       // Symmetric (all even) or Skew (all odd)
};

/// Parity-profile classifier; an absent axis entry means Mixed parity there.
struct ParityReport {
  std::optional<ParityAxisResult> axis01;
  std::optional<ParityAxisResult> axis10;
  bool applicable() const { return axis01.has_value() || axis10.has_value(); }
};

ParityReport parity_classify(const Endo& f);

struct SearchResult {
  bool found = false;
  std::vector<Endo> moves;  // g_1..g_l, applied left-to-right
  Poly witness;
  std::string involution;
  SymmetryType type = SymmetryType::Symmetric;
  size_t states_explored = 0;
};

/// Bounded breadth-first search for a symmetrizing move sequence:
/// left generator moves with integer coefficients of bounded height.
SearchResult symmetrize_search(const Poly& A, unsigned depth, unsigned degree_cap,
                               unsigned height_cap, size_t state_cap = 200000);

struct DruzkowskiResult {
  bool accepted = false;
  Endo map;
  Poly jacobian;
  std::optional<Endo> inverse;
};

/// d = (x + l1(x,y)^3, y + l2(x,y)^3); accepted iff the Jacobian is
/// constantly 1, in which case the verified inverse is attached.
DruzkowskiResult druzkowski2(const Poly& l1, const Poly& l2);

}  // namespace kellerlab

#endif
