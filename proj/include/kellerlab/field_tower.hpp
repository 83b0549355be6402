#ifndef KELLERLAB_FIELD_TOWER_HPP
#define KELLERLAB_FIELD_TOWER_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kellerlab/errors.hpp"

namespace kellerlab {

using Rational = mpq_class;

/// A tower Q(i)(sqrt(d_1), ..., sqrt(d_m)) of successive quadratic
/// extensions. Coordinates of elements are indexed by bitmask over the
/// multiplicative basis: bit 0 is i (when present), bit (has_i + k) is the
/// k-th adjoined square root. Each radicand is stored as a coordinate vector
/// over the basis of the level below it and is guaranteed, at adjunction
/// time, to have no square root there.
class FieldTower {
 public:
  static constexpr size_t kMaxGenerators = 6;

  FieldTower(bool has_i, bool real_only) : has_i_(has_i), real_only_(real_only) {
    if (has_i && real_only) throw RealModeViolation("real tower cannot contain i");
  }

  bool has_i() const { return has_i_; }
  bool real_only() const { return real_only_; }
  size_t generator_count() const { return radicands_.size(); }
  size_t levels() const { return radicands_.size() + (has_i_ ? 1 : 0); }
  size_t dim() const { return size_t{1} << levels(); }

  // Coordinates of radicand k over the basis of level (has_i + k).
  const std::vector<Rational>& radicand(size_t k) const { return radicands_[k]; }

  // Square of the element adjoined at a given level, as coordinates over the
  // basis below that level. Level 0 with has_i is i itself (square -1).
  std::vector<Rational> level_square(size_t level) const;

  static std::shared_ptr<const FieldTower> rationals();
  static std::shared_ptr<const FieldTower> gaussian();
  static std::shared_ptr<const FieldTower> reals();

  static std::shared_ptr<const FieldTower> extended(
      const std::shared_ptr<const FieldTower>& base, std::vector<Rational> radicand);

  // True when every element of a coerces losslessly into b.
  static bool embeds(const FieldTower& a, const FieldTower& b);

  bool same_structure(const FieldTower& other) const;

 private:
  bool has_i_;
  bool real_only_;
  std::vector<std::vector<Rational>> radicands_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

/// Exact element of a field tower: shared tower plus canonical coordinates.
/// Values are immutable; arithmetic joins the operand towers (one must embed
/// in the other) and returns canonical-form results.
class FieldElement {
 public:
  FieldElement();  // zero over Q
  explicit FieldElement(const Rational& r);
  explicit FieldElement(long n);
  FieldElement(TowerPtr tower, std::vector<Rational> coords);

  static FieldElement zero() { return FieldElement(); }
  static FieldElement one() { return FieldElement(Rational(1)); }
  static FieldElement imaginary_unit();

  const TowerPtr& tower() const { return tower_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const { return coords_[0]; }
  // Throws if the element has non-rational coordinates.
  Rational as_rational() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& v);
  FieldElement operator+(const FieldElement& v) const;
  FieldElement operator-(const FieldElement& v) const;
  FieldElement operator*(const FieldElement& v) const;
  FieldElement operator/(const FieldElement& v) const;
  FieldElement inverse() const;
  FieldElement pow(unsigned long e) const;

  bool operator==(const FieldElement& v) const;
  bool operator!=(const FieldElement& v) const { return !(*this == v); }

  // Approximate real/imaginary value; used only for sign decisions in
  // real-radical mode where all radicands are positive.
  double approx_real() const;

  // Sign of a real-tower element (exact zero test first, then numeric).
  int sign_real() const;

  std::string to_string() const;

 private:
  struct Raw {};  // internal: coords already canonical, skip normalization
  FieldElement(Raw, TowerPtr tower, std::vector<Rational> coords)
      : tower_(std::move(tower)), coords_(std::move(coords)) {}
  static FieldElement raw(TowerPtr tower, std::vector<Rational> coords) {
    return FieldElement(Raw{}, std::move(tower), std::move(coords));
  }
  friend FieldElement coerce(const FieldElement& e, const TowerPtr& target);

  TowerPtr tower_;
  std::vector<Rational> coords_;
};

/// Returns z in (a possibly extended tower of) d's tower with z*z == d.
/// If the root already exists no extension happens; otherwise the tower
/// gains one generator and z is its canonical (positive-branch) root.
FieldElement field_sqrt(const FieldElement& d);

/// Root search without extension; nullopt when d has no square root in its
/// own tower.
std::optional<FieldElement> try_field_sqrt(const FieldElement& d);

/// Coerce an element into a tower its own tower embeds in.
FieldElement coerce(const FieldElement& e, const TowerPtr& target);

/// The smaller of the two towers that contains both (prefix embedding).
TowerPtr join_towers(const TowerPtr& a, const TowerPtr& b);

}  // namespace kellerlab

#endif
