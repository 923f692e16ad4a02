#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "urysohn/monoid.hpp"

namespace urysohn {

  enum class Tri { False, True, Unknown };

  // The classification of the Urysohn theory over a monoid. Every field is
  // computed from the monoid by its characterization; `citations` names the
  // characterization used.
  struct TheoryProfile {
    explicit TheoryProfile(DistanceMonoid m) : monoid(std::move(m)) {}

    DistanceMonoid             monoid;
    bool                       is_urysohn         = true;
    bool                       stable             = false;
    bool                       simple             = false;
    bool                       supersimple        = false;
    std::optional<std::uint64_t> su_rank;
    bool                       superstable        = false;
    bool                       omega_stable       = false;
    ExtNat                     so_rank;
    bool                       nfsop              = true;
    bool                       metrically_trivial = false;
    bool                       wei                = false;
    bool                       ei                 = false;
    Tri                        heq_nonempty       = Tri::Unknown;
    ExtNat                     arch;
    std::vector<Value>         eq;
    std::vector<Value>         eq_lt;
    std::map<std::string, std::string> citations;
  };

  // Throws TheoremViolated if the computed fields contradict each other
  // (e.g. stable but strong order rank above 1).
  TheoryProfile classify(DistanceMonoid const& m);

  // Order type of eq<(R); throws NotSupersimple.
  std::uint64_t su_rank(DistanceMonoid const& m);

  struct Explanation {
    std::string field;
    std::string value;
    std::string citation;
    std::string witness;  // empty when the citation says it all
  };

  // Throws MalformedInput for unknown field names.
  Explanation explain(TheoryProfile const& p, std::string_view field);

  std::vector<std::string> const& profile_fields();

  nlohmann::ordered_json profile_to_json(TheoryProfile const& p);
  std::string            profile_to_text(TheoryProfile const& p);

}  // namespace urysohn
