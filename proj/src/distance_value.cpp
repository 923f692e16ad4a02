#include "urysohn/distance_value.hpp"

#include <charconv>

#include "urysohn/errors.hpp"

namespace urysohn {

  namespace {
    std::int64_t parse_int(std::string_view text, std::string_view whole) {
      std::int64_t v   = 0;
      auto         res = std::from_chars(text.data(), text.data() + text.size(), v);
      if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw Error(ErrorCode::MalformedInput, "not a rational: '" + std::string(whole) + "'");
      }
      return v;
    }
  }  // namespace

  Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_int(text, text));
    }
    std::int64_t num = parse_int(text.substr(0, slash), text);
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den <= 0) {
      throw Error(ErrorCode::MalformedInput, "bad denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }

  std::string format_rational(Rational const& q) {
    if (q.denominator() == 1) {
      return std::to_string(q.numerator());
    }
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
  }

  std::string DistanceValue::debug_string() const {
    switch (_kind) {
      case Kind::Element:
        return "#" + std::to_string(_index);
      case Kind::Rational:
        return format_rational(_q);
      case Kind::Infinity:
        return "inf";
    }
    return "?";
  }

}  // namespace urysohn
