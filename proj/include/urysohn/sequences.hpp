#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "urysohn/metric_space.hpp"

namespace urysohn {

  // Two-type data of an indiscernible sequence of l-tuples:
  // eps[i][j] = d(a^0_i, a^1_j), within[i][j] = d(a^0_i, a^0_j).
  struct DiagonalSpec {
    DistanceMonoid                       monoid;
    Matrix                               eps;
    std::optional<Matrix>                within;
    std::optional<std::vector<std::size_t>> np;

    std::size_t length() const noexcept {
      return eps.size();
    }
  };

  struct CyclicResult {
    bool                     cyclic = true;
    // i_1..i_n with eps[i_n][i_1] > eps[i_1][i_2] + ... + eps[i_{n-1}][i_n];
    // for n = 1 the single coordinate that moves.
    std::vector<std::size_t> chain;
  };

  // n >= 2: min-plus matrix powers of eps. n = 1: the sequence is constant.
  CyclicResult cyclic_check(DiagonalSpec const& spec, std::size_t n);

  // Positions where two tuples of points differ.
  std::vector<std::size_t> np_indices(std::vector<Point> const& t0, std::vector<Point> const& t1);

  // A finite stretch of an indiscernible sequence: tuples of points of a space.
  struct PointSequence {
    RMetricSpace                    space;
    std::vector<std::vector<Point>> tuples;
  };

  struct SoSequence {
    PointSequence      sequence;
    DiagonalSpec       spec;
    // (d(a^0_1,a^1_2), ..., d(a^0_{n-1},a^1_n), d(a^0_n,a^1_1)).
    std::vector<Value> wrap;
  };

  // The sequence with d(a^k_i, a^l_j) = a_j + ... + a_i when k < l, i >= j
  // (or k = l, i > j) and a_{i+1} + ... + a_j when k < l, i < j, over
  // `copies` tuples. Points at distance zero are identified. Throws
  // ChainNotSorted.
  SoSequence build_so_sequence(DistanceMonoid const& m, std::vector<Value> const& chain, std::size_t copies);

  // Spec of tuples 0 and 1 of a sequence, with NP and the within matrix.
  DiagonalSpec extract_spec(PointSequence const& seq);

  // a_n <= a_1 + ... + a_{n-1}.
  bool diag_transitive(DistanceMonoid const& m, std::vector<Value> const& tuple);

  // Nondecreasing r_1..r_n with r_2 + ... + r_n < r_1 + ... + r_n.
  std::optional<std::vector<Value>> arch_witness(DistanceMonoid const& m, std::size_t n);

  struct OrderWitness {
    RMetricSpace space;
    // r < r + r, so that d(x_1,y_2) <= r orders the pairs.
    bool order_property = false;
  };

  // Pairs (a^l_1, a^l_2), l < length, with d(a^k_1, a^l_2) = r + r for
  // l < k and every other nonzero distance r.
  OrderWitness witness_order_property(DistanceMonoid const& m, Value const& r, std::size_t length);

  enum class NonsimpleVariant { FourPoint, FivePoint };

  // Needs r <= s and r + s < 2r + s; throws SimplicityHolds otherwise.
  // Labels a b1 b2 c (four points) or a b1 b2 c1 c2 (five points).
  RMetricSpace witness_nonsimple(DistanceMonoid const& m, Value const& r, Value const& s, NonsimpleVariant variant);

  struct Tp2Witness {
    RMetricSpace space;
    // a^{i,j}_t is point (i*k + j)*2 + (t-1).
    std::size_t k = 0;
    // Every path through the rows gives a Katětov map r, s.
    bool paths_katetov = true;
    // Two cells of one row cannot share a realization.
    bool rows_inconsistent = true;
  };

  // k x k grid of pairs; k in 1..6. Throws SimplicityHolds.
  Tp2Witness witness_tp2(DistanceMonoid const& m, Value const& r, Value const& s, std::size_t k);

  // Checks that consecutive tuples realize one two-type (throws
  // NotIndiscerniblePattern) and that the sequence is (|NP| + 1)-cyclic.
  bool check_np_bound(PointSequence const& seq);

  // monoid: <tag | path>
  // length: l
  // <l x l matrix of eps labels>
  DiagonalSpec parse_diagonal_spec(std::string_view text, std::filesystem::path const& base_dir = {});

  nlohmann::ordered_json spec_to_json(DiagonalSpec const& spec);

}  // namespace urysohn
