#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "urysohn/distance_value.hpp"
#include "urysohn/ext_nat.hpp"
#include "urysohn/finite_monoid.hpp"
#include "urysohn/parametric_monoid.hpp"

namespace urysohn {

  // A distance monoid: a validated finite table or one of the parametric
  // families. Cheap to copy; the representation is shared and immutable.
  class DistanceMonoid {
   public:
    explicit DistanceMonoid(FiniteMonoid m);
    explicit DistanceMonoid(ParametricMonoid p);

    bool is_table() const noexcept {
      return std::holds_alternative<FiniteMonoid>(*_rep);
    }

    // Throws Error(UnsupportedFamily) for parametric families.
    FiniteMonoid const& table() const;

    // nullptr for finite tables.
    ParametricMonoid const* family() const noexcept {
      return std::get_if<ParametricMonoid>(_rep.get());
    }

    bool has_max() const noexcept;
    // Finitely many elements, so that searches over values terminate.
    bool is_finite() const noexcept;
    bool is_trivial() const noexcept;

    DistanceValue zero() const;
    // The maximum element, or INF for families without one.
    DistanceValue top() const;

    bool contains(DistanceValue const& v) const;
    // Throws Error(MixedCarriers) unless v belongs to this monoid.
    void require(DistanceValue const& v) const;

    // All elements in increasing order; throws UnsupportedFamily if infinite.
    std::vector<DistanceValue> elements() const;
    std::vector<DistanceValue> positive_elements() const;

    std::string   format(DistanceValue const& v) const;
    DistanceValue parse(std::string_view text) const;

    // Family tag, or "finite:<size>" for tables.
    std::string describe() const;

    bool operator==(DistanceMonoid const& that) const;

   private:
    std::shared_ptr<std::variant<FiniteMonoid, ParametricMonoid> const> _rep;
  };

  using Value = DistanceValue;

  int   compare(DistanceMonoid const& m, Value const& a, Value const& b);
  bool  leq(DistanceMonoid const& m, Value const& a, Value const& b);
  bool  lt(DistanceMonoid const& m, Value const& a, Value const& b);
  Value max_of(DistanceMonoid const& m, Value const& a, Value const& b);
  Value min_of(DistanceMonoid const& m, Value const& a, Value const& b);

  Value  oplus(DistanceMonoid const& m, Value const& a, Value const& b);
  Value  nfold(DistanceMonoid const& m, Value const& a, std::uint64_t k);
  Value  abs_diff(DistanceMonoid const& m, Value const& a, Value const& b);
  Value  one_third(DistanceMonoid const& m, Value const& a);
  ExtNat ceil_div(DistanceMonoid const& m, Value const& r, Value const& s);

  // Throws UnsupportedFamily when the class is infinite.
  std::vector<Value> arch_class(DistanceMonoid const& m, Value const& t);
  ExtNat             arch_local(DistanceMonoid const& m, Value const& t);
  ExtNat             arch(DistanceMonoid const& m);

  std::vector<Value> eq_set(DistanceMonoid const& m);
  std::vector<Value> eq_lt_set(DistanceMonoid const& m);

  bool is_ultrametric(DistanceMonoid const& m);
  bool is_metrically_trivial(DistanceMonoid const& m);
  bool is_archimedean(DistanceMonoid const& m);
  bool is_simple_monoid(DistanceMonoid const& m);
  bool is_well_ordered(DistanceMonoid const& m);
  bool is_eq_well_ordered(DistanceMonoid const& m);

  // The finite sub-monoid {0, 1/D, 2/D, ..., cap} of a family (cap defaults
  // to the family maximum), labelled by its rationals. Throws GridNotClosed
  // if the grid is not closed under the family's addition or misses cap.
  FiniteMonoid grid_restrict(ParametricMonoid const& family, std::uint64_t denominator,
                             std::optional<Rational> cap = std::nullopt);

}  // namespace urysohn
