#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "urysohn/independence.hpp"

using namespace urysohn;
using namespace urysohn::testing;

namespace {

  DistanceMonoid R(std::size_t n) {
    return table(make_Rn(n));
  }

  // Largest distance between realizations of tp(b1/C) and tp(b2/C): the
  // biggest v for which b1', b2' at distance v over C is a pseudometric.
  Value dmax_oracle(RMetricSpace const& s, Point b1, Point b2, PointSet const& C) {
    auto const&       m = s.monoid();
    std::size_t const n = 2 + C.size();
    Matrix            d(n, std::vector<Value>(n, m.zero()));
    for (std::size_t i = 0; i < C.size(); ++i) {
      d[0][2 + i] = d[2 + i][0] = s.d(b1, C[i]);
      d[1][2 + i] = d[2 + i][1] = s.d(b2, C[i]);
      for (std::size_t j = 0; j < C.size(); ++j) {
        d[2 + i][2 + j] = s.d(C[i], C[j]);
      }
    }
    std::optional<Value> best;
    for (auto const& v : m.elements()) {
      d[0][1] = d[1][0] = v;
      if (!find_triangle_violation(m, d)) {
        best = v;
      }
    }
    REQUIRE(best);
    return *best;
  }

  Value third_oracle(DistanceMonoid const& m, Value const& a) {
    for (auto const& x : m.elements()) {
      if (leq(m, a, oplus(m, x, oplus(m, x, x)))) {
        return x;
      }
    }
    return m.top();
  }

  Value diff_oracle(DistanceMonoid const& m, Value const& a, Value const& b) {
    for (auto const& x : m.elements()) {
      if (leq(m, a, oplus(m, b, x)) && leq(m, b, oplus(m, a, x))) {
        return x;
      }
    }
    return m.top();
  }

  Value dmin_oracle(RMetricSpace const& s, Point b1, Point b2, PointSet const& C) {
    auto const& m   = s.monoid();
    Value       out = third_oracle(m, s.d(b1, b2));
    for (auto c : C) {
      auto x = diff_oracle(m, s.d(b1, c), s.d(c, b2));
      if (lt(m, out, x)) {
        out = x;
      }
    }
    return out;
  }

  bool intersection_in(PointSet const& A, PointSet const& B, PointSet const& C) {
    return std::all_of(A.begin(), A.end(), [&](Point a) {
      return std::count(B.begin(), B.end(), a) == 0 || std::count(C.begin(), C.end(), a) > 0;
    });
  }

  PointSet unite(PointSet a, PointSet const& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
  }

  // The configuration from the non-simplicity argument with r = s = 1:
  // points a, b1, b2, c.
  RMetricSpace four_point_R3() {
    return make_space(R(3), {{0, 1, 1, 1}, {1, 0, 2, 2}, {1, 2, 0, 1}, {1, 2, 1, 0}});
  }

  std::vector<DistanceMonoid> simple_monoids() {
    std::vector<DistanceMonoid> out{R(1), R(2), table(make_maxchain(2)), table(make_maxchain(3))};
    for (auto& m : random_real_monoids(40, 11)) {
      if (m.size() == 4 && is_simple_monoid(m) && !is_ultrametric(m) && out.size() < 6) {
        out.push_back(table(m));
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("dmax and dmin on small examples") {
  auto const m = R(3);
  auto const s = make_space(m, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK(dmax(s, 0, 2, {}) == val(m, 3));
  CHECK(dmax(s, 0, 2, {1}) == val(m, 2));
  auto const t = make_space(m, {{0, 2, 1}, {2, 0, 3}, {1, 3, 0}});
  CHECK(dmax(t, 0, 1, {2}) == val(m, 3));
  CHECK(dmin(t, 0, 1, {2}) == val(m, 2));
  CHECK(dmin(t, 0, 0, {1, 2}) == val(m, 0));

  auto const m2 = R(2);
  auto const u  = make_space(m2, {{0, 1}, {1, 0}});
  CHECK(dmin(u, 0, 1, {}) == val(m2, 1));
  CHECK(dist_to_set(u, 0, {}) == val(m2, 2));

  auto const w = four_point_R3();
  CHECK(dmax(w, 1, 2, {0, 3}) == val(m, 2));
  CHECK(dmax(w, 1, 2, {3}) == val(m, 3));
}

TEST_CASE("dmax and dmin agree with brute-force oracles") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const m = R(n);
    for (std::size_t k = 1; k <= 4; ++k) {
      for (auto const& s : all_spaces(m, k)) {
        for (auto const& C : all_subsets(k)) {
          for (Point b1 = 0; b1 < k; ++b1) {
            for (Point b2 = 0; b2 < k; ++b2) {
              REQUIRE(dmax(s, b1, b2, C) == dmax_oracle(s, b1, b2, C));
              REQUIRE(dmin(s, b1, b2, C) == dmin_oracle(s, b1, b2, C));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("forking verdicts and certificates") {
  auto const m = R(3);
  auto const w = four_point_R3();

  auto const r = forks(w, {0}, {1, 2}, {3});
  CHECK_FALSE(r.independent);
  REQUIRE(r.certificate);
  CHECK(r.certificate->b1 == 1);
  CHECK(r.certificate->b2 == 1);
  CHECK(r.certificate->failed == Equality::Dmax);
  CHECK(r.certificate->over_ac == val(m, 2));
  CHECK(r.certificate->over_c == val(m, 3));

  auto const back = forks(w, {1, 2}, {0}, {3});
  CHECK(back.independent);
  CHECK(back.pairs_checked == 1);
  CHECK_FALSE(back.certificate);

  CHECK(forks(w, {0, 1}, {2, 3}, {2, 3}).independent);

  auto const j = forking_to_json(w, r);
  CHECK(j["verdict"] == "forks");
  CHECK(j["certificate"]["b1"] == "x1");
  CHECK(j["certificate"]["equality"] == "dmax");
  CHECK(j["certificate"]["over_AC"] == "2");
  CHECK(j["certificate"]["over_C"] == "3");

  auto const m2 = R(2);
  auto const u  = make_space(m2, {{0, 1}, {1, 0}});
  CHECK(forks(u, {0}, {1}, {}).independent);
  CHECK_FALSE(forks(u, {0}, {0}, {}).independent);

  CHECK(error_code([&] { forks(u, {5}, {1}, {}); }) == ErrorCode::MalformedInput);
}

TEST_CASE("certificates recompute to their verdict") {
  std::mt19937_64 rng(5);
  auto const      m      = R(3);
  auto const      spaces = all_spaces(m, 4);
  auto const      subs   = all_subsets(4);
  for (int iter = 0; iter < 3000; ++iter) {
    auto const& s = spaces[rng() % spaces.size()];
    auto const& A = subs[rng() % subs.size()];
    auto const& B = subs[rng() % subs.size()];
    auto const& C = subs[rng() % subs.size()];
    auto const  r = forks(s, A, B, C);
    if (r.independent) {
      CHECK(r.pairs_checked == B.size() * (B.size() + 1) / 2);
      continue;
    }
    auto const& c  = *r.certificate;
    auto const  ac = unite(A, C);
    if (c.failed == Equality::Dmax) {
      CHECK(c.over_ac == dmax_oracle(s, c.b1, c.b2, ac));
      CHECK(c.over_c == dmax_oracle(s, c.b1, c.b2, C));
    } else {
      CHECK(c.over_ac == dmin_oracle(s, c.b1, c.b2, ac));
      CHECK(c.over_c == dmin_oracle(s, c.b1, c.b2, C));
    }
    CHECK(c.over_ac != c.over_c);
  }
}

TEST_CASE("auxiliary relations") {
  auto const m2 = R(2);
  auto const s  = make_space(m2, {{0, 2, 1}, {2, 0, 1}, {1, 1, 0}});
  CHECK(rel_dist(s, {0}, {1}, {2}));
  CHECK(simple_criterion(s, {0}, {1}, {}));
  CHECK(simple_criterion(s, {2}, {0}, {2}));
  CHECK_FALSE(simple_criterion(s, {0}, {0}, {}));

  auto const w = four_point_R3();
  CHECK(error_code([&] { simple_criterion(w, {0}, {1}, {}); }) == ErrorCode::MonoidNotSimple);

  auto const a   = validate_space(R(3), {"c", "a"}, {{val(R(3), 0), val(R(3), 1)}, {val(R(3), 1), val(R(3), 0)}});
  auto const b   = validate_space(R(3), {"c", "b"}, {{val(R(3), 0), val(R(3), 2)}, {val(R(3), 2), val(R(3), 0)}});
  auto const amg = free_amalgam(a, b);
  CHECK(rel_otimes(amg, {amg.at("a")}, {amg.at("b")}, {amg.at("c")}));
}

TEST_CASE("u_value") {
  auto const m = R(3);
  auto const w = four_point_R3();
  CHECK(error_code([&] { u_value(w, 0, {}, {}, 1); }) == ErrorCode::EmptyBC);
  for (Point a = 0; a < 4; ++a) {
    for (Point b = 0; b < 4; ++b) {
      CHECK(leq(m, u_value(w, a, {b}, {}, b), w.d(a, b)));
      for (Point star = 0; star < 4; ++star) {
        CHECK(u_value(w, a, {b}, {}, star) == oplus(m, w.d(a, b), one_third(m, w.d(star, b))));
      }
    }
  }
}

TEST_CASE("pair_sequence_search examples") {
  auto const m = R(3);
  auto const t = make_space(m, {{0, 2, 1}, {2, 0, 3}, {1, 3, 0}});
  auto const p = pair_sequence_search(t, 0, 1, {2}, t.d(0, 1));
  REQUIRE(p);
  CHECK(error_code([&] { pair_sequence_search(t, 0, 1, {2}, Value::element(9)); }) == ErrorCode::MixedCarriers);
  auto const s = make_space(m, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK_FALSE(pair_sequence_search(s, 0, 2, {1}, val(m, 3)));
  CHECK(pair_sequence_search(s, 0, 2, {1}, val(m, 1)));
  auto const const_pattern = PairPattern{val(m, 0), val(m, 0), t.d(0, 1), t.d(0, 1)};
  CHECK_FALSE(find_triangle_violation(m, pair_pattern_matrix(t, 0, 1, {2}, const_pattern)));
}

// Up to relabelling, every (b1, b2, C) with |C| <= 2 inside a space of at
// most four points is a space whose points are exactly b1, b2 and C.
TEST_CASE("pair_sequence_search succeeds exactly on [dmin, dmax]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const m = R(n);
    for (std::size_t k = 1; k <= 4; ++k) {
      for (auto const& s : all_spaces(m, k)) {
        std::vector<std::pair<Point, PointSet>> configs;
        if (k >= 2) {
          PointSet C;
          for (Point i = 2; i < k; ++i) {
            C.push_back(i);
          }
          configs.emplace_back(1, C);
        }
        if (k <= 3) {
          PointSet C;
          for (Point i = 1; i < k; ++i) {
            C.push_back(i);
          }
          configs.emplace_back(0, C);
        }
        for (auto const& [b2, C] : configs) {
          auto const lo = dmin(s, 0, b2, C), hi = dmax(s, 0, b2, C);
          for (auto const& alpha : m.elements()) {
            bool const expect = leq(m, lo, alpha) && leq(m, alpha, hi);
            REQUIRE(pair_sequence_search(s, 0, b2, C, alpha).has_value() == expect);
          }
        }
      }
    }
  }
}

TEST_CASE("dmax and dmin inequalities") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const m = R(n);
    for (auto const& s : all_spaces(m, 4)) {
      for (auto const& C : all_subsets(4)) {
        for (Point x = 0; x < 4; ++x) {
          for (Point y = 0; y < 4; ++y) {
            for (Point z = 0; z < 4; ++z) {
              REQUIRE(leq(m, dmax(s, x, z, C), oplus(m, dmax(s, x, y, C), dmin(s, y, z, C))));
              REQUIRE(leq(m, dmin(s, x, z, C), oplus(m, dmin(s, x, y, C), dmin(s, y, z, C))));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("implications between independence relations") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const m    = R(n);
    auto const subs = all_subsets(4);
    for (auto const& s : all_spaces(m, 4)) {
      for (auto const& A : subs) {
        for (auto const& B : subs) {
          for (auto const& C : subs) {
            bool const f = forks(s, A, B, C).independent;
            if (f) {
              REQUIRE(rel_dmax(s, A, B, C));
            }
            if (rel_otimes(s, A, B, C)) {
              REQUIRE(rel_dist(s, A, B, C));
              REQUIRE(f);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("ultrametric monoids: forking is distance independence") {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto const m = table(make_maxchain(k));
    REQUIRE(is_ultrametric(m));
    for (std::size_t pts = 1; pts <= 4; ++pts) {
      auto const subs = all_subsets(pts);
      for (auto const& s : all_spaces(m, pts)) {
        for (auto const& A : subs) {
          for (auto const& B : subs) {
            for (auto const& C : subs) {
              bool const f = forks(s, A, B, C).independent;
              REQUIRE(f == rel_dist(s, A, B, C));
              REQUIRE(f == rel_otimes(s, A, B, C));
            }
          }
        }
      }
    }
    // Five points: singleton and pair A, B against every C.
    auto const subs5 = all_subsets(5);
    std::mt19937_64 rng(k);
    auto const      spaces = all_spaces(m, 5);
    for (int iter = 0; iter < 4000; ++iter) {
      auto const& s = spaces[rng() % spaces.size()];
      auto const& A = subs5[rng() % subs5.size()];
      auto const& B = subs5[rng() % subs5.size()];
      auto const& C = subs5[rng() % subs5.size()];
      bool const  f = forks(s, A, B, C).independent;
      REQUIRE(f == rel_dist(s, A, B, C));
      REQUIRE(f == rel_otimes(s, A, B, C));
    }
  }
}

TEST_CASE("simple monoids: forking is dmax independence and the doubling criterion") {
  for (auto const& m : simple_monoids()) {
    for (std::size_t pts = 3; pts <= 4; ++pts) {
      auto const subsets = all_subsets(pts);
      for (auto const& s : all_spaces(m, pts)) {
        for (auto const& A : subsets) {
          for (auto const& B : subsets) {
            for (auto const& C : subsets) {
              bool const f = forks(s, A, B, C).independent;
              REQUIRE(f == rel_dmax(s, A, B, C));
              REQUIRE(f == simple_criterion(s, A, B, C));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("non-simple monoid: forking is not symmetric") {
  auto const w = four_point_R3();
  CHECK_FALSE(forks(w, {0}, {1, 2}, {3}).independent);
  CHECK(forks(w, {1, 2}, {0}, {3}).independent);
  CHECK_FALSE(rel_dmax(w, {0}, {1, 2}, {3}));
}

TEST_CASE("metrically trivial monoids: forking is intersection in the base") {
  for (auto const& m : {R(1), R(2), table(make_maxchain(1))}) {
    REQUIRE(is_metrically_trivial(m));
    auto const subs = all_subsets(4);
    for (auto const& s : all_spaces(m, 4)) {
      for (auto const& A : subs) {
        for (auto const& B : subs) {
          for (auto const& C : subs) {
            REQUIRE(forks(s, A, B, C).independent == intersection_in(A, B, C));
          }
        }
      }
    }
  }
}

TEST_CASE("u_value brackets on independent instances") {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const m = R(n);
    for (std::size_t pts = 2; pts <= 5; ++pts) {
      auto const spaces = all_spaces(m, pts);
      auto const subs   = all_subsets(pts);
      for (int iter = 0; iter < 300; ++iter) {
        auto const& s    = spaces[rng() % spaces.size()];
        auto const& B    = subs[rng() % subs.size()];
        auto const& C    = subs[rng() % subs.size()];
        Point const star = rng() % pts;
        auto const  bc   = unite(B, C);
        if (bc.empty()) {
          continue;
        }
        for (Point a = 0; a < pts; ++a) {
          if (!forks(s, {a}, B, C).independent) {
            continue;
          }
          auto const u = u_value(s, a, B, C, star);
          REQUIRE(leq(m, dmin(s, a, star, bc), u));
          REQUIRE(leq(m, u, dmax(s, a, star, bc)));
        }
        for (Point a1 = 0; a1 < pts; ++a1) {
          for (Point a2 = 0; a2 < pts; ++a2) {
            if (!forks(s, {a1, a2}, B, C).independent) {
              continue;
            }
            auto const u1 = u_value(s, a1, B, C, star), u2 = u_value(s, a2, B, C, star);
            REQUIRE(leq(m, abs_diff(m, u1, u2), s.d(a1, a2)));
            REQUIRE(leq(m, s.d(a1, a2), oplus(m, u1, u2)));
          }
        }
      }
    }
  }
}
