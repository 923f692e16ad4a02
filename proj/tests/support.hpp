#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "urysohn/monoid.hpp"

namespace urysohn::testing {

  inline FiniteMonoid make_S() {
    return make_from_reals({0, 1, 2, 5, 6, 7});
  }

  inline std::vector<Rational> ints(std::initializer_list<int> xs) {
    std::vector<Rational> out;
    for (int x : xs) {
      out.emplace_back(x);
    }
    return out;
  }

  // Brute force over every nondecreasing chain r_0 <= ... <= r_n.
  inline bool arch_holds_brute(FiniteMonoid const& m, std::size_t n) {
    std::vector<Elem> chain(n + 1, 0);
    while (true) {
      Elem tail = 0;
      for (std::size_t i = 1; i <= n; ++i) {
        tail = m.op(tail, chain[i]);
      }
      if (m.op(chain[0], tail) != tail) {
        return false;
      }
      std::size_t pos = n + 1;
      while (pos > 0 && chain[pos - 1] == m.top()) {
        --pos;
      }
      if (pos == 0) {
        return true;
      }
      Elem v = chain[pos - 1] + 1;
      for (std::size_t i = pos - 1; i <= n; ++i) {
        chain[i] = v;
      }
    }
  }

  inline std::size_t arch_brute(FiniteMonoid const& m) {
    for (std::size_t n = 0;; ++n) {
      if (arch_holds_brute(m, n)) {
        return n;
      }
    }
  }

  // Finite monoids from truncated sums over random subsets of {0..12};
  // subsets whose truncated sum is not associative are skipped.
  inline std::vector<FiniteMonoid> random_real_monoids(std::size_t count, std::uint64_t seed) {
    std::mt19937_64            rng(seed);
    std::vector<FiniteMonoid>  out;
    std::bernoulli_distribution coin(0.4);
    while (out.size() < count) {
      std::vector<Rational> xs{0};
      for (int v = 1; v <= 12; ++v) {
        if (coin(rng)) {
          xs.emplace_back(v);
        }
      }
      try {
        out.push_back(make_from_reals(xs));
      } catch (Error const&) {
      }
    }
    return out;
  }

}  // namespace urysohn::testing

#include "urysohn/metric_space.hpp"

namespace urysohn::testing {

  inline std::vector<std::string> point_labels(std::size_t n, std::string const& prefix = "x") {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(prefix + std::to_string(i));
    }
    return out;
  }

  // Every valid n-point space over a finite monoid, by brute force over the
  // upper triangle with the triangle filter applied at the end.
  inline std::vector<RMetricSpace> all_spaces(DistanceMonoid const& m, std::size_t n) {
    auto                                     pos = m.positive_elements();
    std::vector<std::pair<Point, Point>>     cells;
    for (Point i = 0; i < n; ++i) {
      for (Point j = i + 1; j < n; ++j) {
        cells.emplace_back(i, j);
      }
    }
    std::vector<RMetricSpace> out;
    if (pos.empty() && n > 1) {
      return out;
    }
    std::vector<std::size_t> digit(cells.size(), 0);
    while (true) {
      Matrix d(n, std::vector<Value>(n, m.zero()));
      for (std::size_t c = 0; c < cells.size(); ++c) {
        d[cells[c].first][cells[c].second] = pos[digit[c]];
        d[cells[c].second][cells[c].first] = pos[digit[c]];
      }
      if (!find_triangle_violation(m, d)) {
        out.push_back(validate_space(m, point_labels(n), std::move(d)));
      }
      std::size_t c = 0;
      while (c < cells.size() && ++digit[c] == pos.size()) {
        digit[c] = 0;
        ++c;
      }
      if (c == cells.size()) {
        break;
      }
    }
    return out;
  }

  inline DistanceMonoid table(FiniteMonoid m) {
    return DistanceMonoid(std::move(m));
  }

  // Element i of a table, or the integer i in a family.
  inline Value val(DistanceMonoid const& m, std::size_t i) {
    return m.is_table() ? Value::element(i) : Value::rational(static_cast<std::int64_t>(i));
  }

  inline RMetricSpace make_space(DistanceMonoid const& m, std::vector<std::vector<std::size_t>> const& rows) {
    Matrix d;
    for (auto const& r : rows) {
      std::vector<Value> row;
      for (auto x : r) {
        row.push_back(val(m, x));
      }
      d.push_back(row);
    }
    return validate_space(m, point_labels(rows.size()), std::move(d));
  }

  // Every subset of {0..n-1}, by bitmask.
  inline std::vector<std::vector<Point>> all_subsets(std::size_t n) {
    std::vector<std::vector<Point>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Point> s;
      for (Point i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          s.push_back(i);
        }
      }
      out.push_back(s);
    }
    return out;
  }

  inline ErrorCode error_code(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  }

}  // namespace urysohn::testing
