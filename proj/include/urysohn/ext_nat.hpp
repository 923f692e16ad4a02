#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace urysohn {

  // A natural number or omega. Used for ceilings, archimedean complexity and
  // ranks, all of which may be infinite for the countable families.
  class ExtNat {
   public:
    constexpr ExtNat() noexcept = default;
    constexpr ExtNat(std::uint64_t n) noexcept : _value(n) {}  // NOLINT

    static constexpr ExtNat omega() noexcept {
      ExtNat x;
      x._value.reset();
      return x;
    }

    constexpr bool is_omega() const noexcept {
      return !_value.has_value();
    }

    constexpr bool is_finite() const noexcept {
      return _value.has_value();
    }

    // Precondition: is_finite().
    constexpr std::uint64_t value() const {
      return *_value;
    }

    constexpr bool operator==(ExtNat const&) const noexcept = default;

    constexpr std::strong_ordering operator<=>(ExtNat const& that) const noexcept {
      if (is_omega() || that.is_omega()) {
        return is_omega() <=> that.is_omega();
      }
      return *_value <=> *that._value;
    }

    std::string to_string() const {
      return is_omega() ? std::string("omega") : std::to_string(*_value);
    }

   private:
    std::optional<std::uint64_t> _value{0};
  };

}  // namespace urysohn
