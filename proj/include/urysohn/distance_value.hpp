#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace urysohn {

  using Rational = boost::rational<std::int64_t>;

  // Parses "3", "2/3", "-1" (rejected later by carriers), throws
  // Error(MalformedInput) on anything else.
  Rational    parse_rational(std::string_view text);
  std::string format_rational(Rational const& q);

  // A distance: an element of a finite monoid (by rank), an exact rational
  // for the parametric families, or the formal top element INF (sup R* for
  // families without a maximum). Values carry no reference to their monoid;
  // the monoid passed alongside decides whether a value belongs to it.
  class DistanceValue {
   public:
    enum class Kind : std::uint8_t { Element, Rational, Infinity };

    constexpr DistanceValue() noexcept = default;

    static DistanceValue element(std::size_t index) noexcept {
      DistanceValue v;
      v._kind  = Kind::Element;
      v._index = index;
      return v;
    }

    static DistanceValue rational(Rational q) noexcept {
      DistanceValue v;
      v._kind = Kind::Rational;
      v._q    = q;
      return v;
    }

    static DistanceValue infinity() noexcept {
      DistanceValue v;
      v._kind = Kind::Infinity;
      return v;
    }

    Kind kind() const noexcept {
      return _kind;
    }
    bool is_element() const noexcept {
      return _kind == Kind::Element;
    }
    bool is_rational() const noexcept {
      return _kind == Kind::Rational;
    }
    bool is_infinity() const noexcept {
      return _kind == Kind::Infinity;
    }

    std::size_t index() const noexcept {
      return _index;
    }
    Rational const& value() const noexcept {
      return _q;
    }

    bool operator==(DistanceValue const& that) const noexcept {
      if (_kind != that._kind) {
        return false;
      }
      switch (_kind) {
        case Kind::Element:
          return _index == that._index;
        case Kind::Rational:
          return _q == that._q;
        case Kind::Infinity:
          return true;
      }
      return false;
    }

    // Raw rendering without a monoid (element indices print as "#i").
    std::string debug_string() const;

   private:
    Kind        _kind  = Kind::Element;
    std::size_t _index = 0;
    Rational    _q{0};
  };

}  // namespace urysohn
