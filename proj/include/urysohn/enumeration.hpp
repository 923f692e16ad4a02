#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "urysohn/finite_monoid.hpp"
#include "urysohn/theory_profile.hpp"

namespace urysohn {

  // Every distance monoid with n nonzero elements, once each, in
  // lexicographic order of the row-major table. Elements are labelled by
  // rank. Subtrees below each choice of the first row run on up to `jobs`
  // threads; the output does not depend on `jobs`.
  std::vector<FiniteMonoid> enumerate_monoids(std::size_t n, std::size_t jobs = 1);

  struct CensusRow {
    FiniteMonoid  monoid;
    TheoryProfile profile;
  };

  struct Census {
    std::size_t                        n = 0;
    std::vector<CensusRow>             rows;
    std::map<std::string, std::size_t> by_arch;
    // "stable", "simple" (but not stable) or "nsop" (neither).
    std::map<std::string, std::size_t> by_class;
  };

  Census census(std::size_t n, std::size_t jobs = 1);

  // One line per table: rows separated by ';', entries by spaces.
  std::string            table_string(FiniteMonoid const& m);
  std::string            census_csv(Census const& c);
  nlohmann::ordered_json census_json(Census const& c);

  struct VerifyReport {
    std::string claim;
    std::size_t checked = 0;
  };

  // Exactly one table has arch 1, namely max on {0..n}, and exactly one has
  // arch n, namely truncated addition. Throws TheoremViolated.
  VerifyReport verify_unique(std::size_t n, std::vector<FiniteMonoid> const& all);
  // Every table has an archimedean class of size at least arch. Throws
  // TheoremViolated.
  VerifyReport verify_classsize(std::size_t n, std::vector<FiniteMonoid> const& all);

}  // namespace urysohn
