#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "urysohn/metric_space.hpp"

namespace urysohn {

  using PointSet = std::vector<Point>;

  // inf over C of d(b1,c) + d(c,b2); max R (INF without one) for empty C.
  Value dmax(RMetricSpace const& s, Point b1, Point b2, PointSet const& C);
  // max(sup over C of |d(b1,c) - d(c,b2)|, d(b1,b2)/3).
  Value dmin(RMetricSpace const& s, Point b1, Point b2, PointSet const& C);

  // d(a,C) = min over C, max R for empty C.
  Value dist_to_set(RMetricSpace const& s, Point a, PointSet const& C);

  enum class Equality { Dmax, Dmin };

  struct ForkingCertificate {
    Point    b1;
    Point    b2;
    Equality failed;
    Value    over_ac;
    Value    over_c;
  };

  struct ForkingReport {
    bool                              independent = true;
    std::optional<ForkingCertificate> certificate;
    std::size_t                       pairs_checked = 0;
  };

  // Independent iff dmax and dmin of every pair from B agree over AC and
  // over C. The certificate names the first failing pair (b1 <= b2).
  ForkingReport forks(RMetricSpace const& s, PointSet const& A, PointSet const& B, PointSet const& C);

  bool rel_dist(RMetricSpace const& s, PointSet const& A, PointSet const& B, PointSet const& C);
  bool rel_otimes(RMetricSpace const& s, PointSet const& A, PointSet const& B, PointSet const& C);
  bool rel_dmax(RMetricSpace const& s, PointSet const& A, PointSet const& B, PointSet const& C);

  // 2d(a,BC) = 2d(a,C) for all a in A. Throws MonoidNotSimple.
  bool simple_criterion(RMetricSpace const& s, PointSet const& A, PointSet const& B, PointSet const& C);

  // inf over b in BC of d(a,b) + dmin(b_star,b/C). Throws EmptyBC.
  Value u_value(RMetricSpace const& s, Point a, PointSet const& B, PointSet const& C, Point b_star);

  // Distances of a C-indiscernible sequence of pairs (b1^l, b2^l), l < k:
  // d11 = d(b1^l,b1^k), d22 = d(b2^l,b2^k), d12 = d(b1^l,b2^k),
  // d21 = d(b2^l,b1^k).
  struct PairPattern {
    Value d11;
    Value d22;
    Value d12;
    Value d21;

    bool operator==(PairPattern const&) const = default;
  };

  // Pseudometric on `copies` pairs plus C built from the pattern.
  Matrix pair_pattern_matrix(RMetricSpace const& s, Point b1, Point b2, PointSet const& C, PairPattern const& p,
                             std::size_t copies = 3);

  // First pattern (d11, d22, d21 in increasing order) with d12 = alpha whose
  // matrix satisfies the triangle inequality. Needs a finite monoid.
  std::optional<PairPattern> pair_sequence_search(RMetricSpace const& s, Point b1, Point b2, PointSet const& C,
                                                  Value const& alpha, std::size_t copies = 3);

  nlohmann::ordered_json forking_to_json(RMetricSpace const& s, ForkingReport const& r);

}  // namespace urysohn
