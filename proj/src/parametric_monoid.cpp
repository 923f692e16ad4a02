#include "urysohn/parametric_monoid.hpp"

#include "urysohn/errors.hpp"

namespace urysohn {

  ParametricMonoid ParametricMonoid::truncated_integers(std::uint64_t n) {
    return {Family::TruncatedIntegers, Rational(static_cast<std::int64_t>(n))};
  }

  ParametricMonoid ParametricMonoid::truncated_rationals(Rational cap) {
    if (cap <= Rational(0)) {
      throw Error(ErrorCode::MalformedInput, "truncation cap must be positive");
    }
    return {Family::TruncatedRationals, cap};
  }

  ParametricMonoid ParametricMonoid::nonnegative_integers() {
    return {Family::NonnegativeIntegers, Rational(0)};
  }

  ParametricMonoid ParametricMonoid::nonnegative_rationals() {
    return {Family::NonnegativeRationals, Rational(0)};
  }

  ParametricMonoid ParametricMonoid::max_chain(std::uint64_t k) {
    return {Family::MaxChain, Rational(static_cast<std::int64_t>(k))};
  }

  bool ParametricMonoid::contains(DistanceValue const& v) const {
    if (v.is_element()) {
      return false;
    }
    if (v.is_infinity()) {
      return !has_max();
    }
    Rational const& q = v.value();
    if (q < Rational(0) || (integral() && q.denominator() != 1)) {
      return false;
    }
    return !has_max() || q <= _bound;
  }

  std::string ParametricMonoid::tag() const {
    switch (_family) {
      case Family::TruncatedIntegers:
        return "R:" + format_rational(_bound);
      case Family::TruncatedRationals:
        return _bound == Rational(1) ? std::string("Q1") : "TQ:" + format_rational(_bound);
      case Family::NonnegativeIntegers:
        return "N";
      case Family::NonnegativeRationals:
        return "Q";
      case Family::MaxChain:
        return "MAX:" + format_rational(_bound);
    }
    return "?";
  }

}  // namespace urysohn
