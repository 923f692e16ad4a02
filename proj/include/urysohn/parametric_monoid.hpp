#pragma once

#include <cstdint>
#include <string>

#include "urysohn/distance_value.hpp"

namespace urysohn {

  // The whitelisted countable families, each with closed-form arithmetic.
  enum class Family {
    TruncatedIntegers,     // {0, ..., n}, addition truncated at n (R_n)
    TruncatedRationals,    // Q ∩ [0, q], addition truncated at q (Q_1 for q = 1)
    NonnegativeIntegers,   // (N, +)
    NonnegativeRationals,  // (Q>=0, +)
    MaxChain               // {0, ..., k} with max
  };

  class ParametricMonoid {
   public:
    static ParametricMonoid truncated_integers(std::uint64_t n);
    static ParametricMonoid truncated_rationals(Rational cap);
    static ParametricMonoid nonnegative_integers();
    static ParametricMonoid nonnegative_rationals();
    static ParametricMonoid max_chain(std::uint64_t k);

    Family family() const noexcept {
      return _family;
    }

    // n, q or k for the bounded families; 0 for N and Q.
    Rational const& bound() const noexcept {
      return _bound;
    }

    bool has_max() const noexcept {
      return _family != Family::NonnegativeIntegers && _family != Family::NonnegativeRationals;
    }

    // Values must be integers (R_n, N, max-chains).
    bool integral() const noexcept {
      return _family != Family::TruncatedRationals && _family != Family::NonnegativeRationals;
    }

    bool is_additive() const noexcept {
      return _family != Family::MaxChain;
    }

    // Finitely many elements (R_n and max-chains).
    bool is_finite() const noexcept {
      return _family == Family::TruncatedIntegers || _family == Family::MaxChain;
    }

    bool contains(DistanceValue const& v) const;

    // CLI-style tag: R:3, Q1, TQ:2/3, N, Q, MAX:4.
    std::string tag() const;

    bool operator==(ParametricMonoid const&) const = default;

   private:
    ParametricMonoid(Family f, Rational bound) : _family(f), _bound(bound) {}

    Family   _family;
    Rational _bound;
  };

}  // namespace urysohn
