#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace urysohn {

  enum class ErrorCode {
    MalformedInput,
    BadIdentity,
    NotCommutative,
    NotMonotone,
    NotAssociative,
    MixedCarriers,
    GridNotClosed,
    UnsupportedFamily,
    Asymmetric,
    NonzeroDiagonal,
    ZeroOffDiagonal,
    TriangleViolation,
    CollisionWithExistingPoint,
    EmptyBase,
    MonoidNotSimple,
    NotSupersimple,
    EmptyBC,
    ChainNotSorted,
    SimplicityHolds,
    NotIndiscerniblePattern,
    TheoremViolated,
    Internal
  };

  std::string_view to_string(ErrorCode code) noexcept;

  // Input errors map to CLI exit code 2; TheoremViolated and Internal to 3.
  bool is_input_error(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what, std::vector<std::size_t> witness = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code),
          _witness(std::move(witness)) {}

    ErrorCode code() const noexcept {
      return _code;
    }

    // Indices (cells, points, ...) naming where the violation was found.
    std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    ErrorCode                _code;
    std::vector<std::size_t> _witness;
  };

}  // namespace urysohn
