#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "urysohn/monoid_io.hpp"

using namespace urysohn;
using namespace urysohn::testing;

namespace {

  Value v(DistanceMonoid const& m, std::size_t i) {
    return m.is_table() ? Value::element(i) : Value::rational(static_cast<std::int64_t>(i));
  }

  Matrix matrix_of(DistanceMonoid const& m, std::vector<std::vector<std::size_t>> const& rows) {
    Matrix d;
    for (auto const& r : rows) {
      std::vector<Value> row;
      for (auto x : r) {
        row.push_back(v(m, x));
      }
      d.push_back(row);
    }
    return d;
  }

  RMetricSpace space(DistanceMonoid const& m, std::vector<std::string> labels,
                     std::vector<std::vector<std::size_t>> const& rows) {
    return validate_space(m, std::move(labels), matrix_of(m, rows));
  }

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  }

  // Level-2 extension axioms of the random graph on the distance-1 edges:
  // for disjoint U, V with |U| + |V| <= 2 some z outside U and V is joined
  // to all of U and none of V.
  bool random_graph_level2(RMetricSpace const& s) {
    std::size_t const n    = s.size();
    auto              edge = [&](Point a, Point b) { return s.d(a, b) == Value::element(1); };
    auto witness = [&](std::vector<Point> const& U, std::vector<Point> const& V) {
      for (Point z = 0; z < n; ++z) {
        if (std::count(U.begin(), U.end(), z) || std::count(V.begin(), V.end(), z)) {
          continue;
        }
        bool ok = std::all_of(U.begin(), U.end(), [&](Point u) { return edge(z, u); })
                  && std::none_of(V.begin(), V.end(), [&](Point w) { return edge(z, w); });
        if (ok) {
          return true;
        }
      }
      return false;
    };
    for (Point a = 0; a < n; ++a) {
      if (!witness({a}, {}) || !witness({}, {a})) {
        return false;
      }
      for (Point b = a + 1; b < n; ++b) {
        if (!witness({a, b}, {}) || !witness({}, {a, b}) || !witness({a}, {b}) || !witness({b}, {a})) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("validate_space") {
  auto R3 = table(make_Rn(3));
  auto X  = space(R3, {"a", "b1", "b2", "c1", "c2"},
                  {{0, 1, 3, 2, 2}, {1, 0, 2, 1, 1}, {3, 2, 0, 1, 1}, {2, 1, 1, 0, 2}, {2, 1, 1, 2, 0}});
  CHECK(X.size() == 5);
  CHECK(code_of([&] { space(R3, {"a", "b"}, {{0, 0}, {0, 0}}); }) == ErrorCode::ZeroOffDiagonal);
  CHECK(code_of([&] { space(R3, {"a", "b"}, {{0, 1}, {2, 0}}); }) == ErrorCode::Asymmetric);
  CHECK(code_of([&] { space(R3, {"a", "b"}, {{1, 1}, {1, 0}}); }) == ErrorCode::NonzeroDiagonal);
  CHECK(code_of([&] { space(R3, {"a", "a"}, {{0, 1}, {1, 0}}); }) == ErrorCode::MalformedInput);
  try {
    space(R3, {"x", "y", "z"}, {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
    FAIL("expected TriangleViolation");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::TriangleViolation);
    CHECK(e.witness() == std::vector<std::size_t>{0, 1, 2});
  }
  auto R2 = table(make_Rn(2));
  CHECK(space(R2, {"x", "y", "z"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}).size() == 3);
  CHECK(code_of([&] { validate_space(R2, {"x", "y"}, {{R2.zero(), Value::rational(1)}, {Value::rational(1), R2.zero()}}); })
        == ErrorCode::MixedCarriers);
}

TEST_CASE("is_katetov and extend") {
  auto R2 = table(make_Rn(2));
  auto R3 = table(make_Rn(3));
  auto p  = space(R2, {"p"}, {{0}});
  CHECK(is_katetov(p, {{0}, {v(R2, 1)}}));
  CHECK(is_katetov(p, {{0}, {v(R2, 2)}}));
  CHECK_FALSE(is_katetov(p, {{0}, {v(R2, 0)}}));
  auto uv2 = space(R2, {"u", "v"}, {{0, 2}, {2, 0}});
  CHECK(is_katetov(uv2, {{0, 1}, {v(R2, 1), v(R2, 1)}}));
  auto uv3 = space(R3, {"u", "v"}, {{0, 3}, {3, 0}});
  CHECK_FALSE(is_katetov(uv3, {{0, 1}, {v(R3, 1), v(R3, 1)}}));

  auto two = extend(p, {{0}, {v(R2, 1)}}, "q");
  CHECK(two.size() == 2);
  CHECK(two.d(0, 1) == v(R2, 1));
  auto path = extend(uv2, {{0}, {v(R2, 1)}}, "p");
  CHECK(path.d(2, 1) == v(R2, 2));
  CHECK(code_of([&] { extend(uv3, {{0, 1}, {v(R3, 1), v(R3, 1)}}, "p"); }) == ErrorCode::TriangleViolation);
  CHECK(code_of([&] { extend(p, {{0}, {v(R2, 1)}}, "p"); }) == ErrorCode::MalformedInput);
  auto far = extend(uv2, {{}, {}}, "w");
  CHECK(far.d(2, 0) == v(R2, 2));
  CHECK(far.d(2, 1) == v(R2, 2));

  DistanceMonoid N(ParametricMonoid::nonnegative_integers());
  auto           nline = space(N, {"a"}, {{0}});
  CHECK(extend(nline, {{0}, {v(N, 5)}}, "b").d(0, 1) == v(N, 5));
  CHECK(code_of([&] { extend(nline, {{}, {}}, "b"); }) == ErrorCode::EmptyBase);
}

TEST_CASE("free_amalgam") {
  auto R2 = table(make_Rn(2));
  auto a  = space(R2, {"a"}, {{0}});
  auto b  = space(R2, {"b"}, {{0}});
  auto ab = free_amalgam(a, b);
  CHECK(ab.d(0, 1) == v(R2, 2));

  auto ac  = space(R2, {"a", "c"}, {{0, 1}, {1, 0}});
  auto bc  = space(R2, {"c", "b"}, {{0, 1}, {1, 0}});
  auto acb = free_amalgam(ac, bc);
  CHECK(acb.labels() == std::vector<std::string>{"a", "c", "b"});
  CHECK(acb.d(0, 2) == v(R2, 2));
  CHECK(free_amalgam(ac, ac) == ac);

  auto bad = space(R2, {"a", "c"}, {{0, 2}, {2, 0}});
  CHECK(code_of([&] { free_amalgam(ac, bad); }) == ErrorCode::MalformedInput);
  auto R3 = table(make_Rn(3));
  CHECK(code_of([&] { free_amalgam(ac, space(R3, {"z"}, {{0}})); }) == ErrorCode::MixedCarriers);
  DistanceMonoid N(ParametricMonoid::nonnegative_integers());
  CHECK(code_of([&] { free_amalgam(space(N, {"a"}, {{0}}), space(N, {"b"}, {{0}})); }) == ErrorCode::EmptyBase);
}

TEST_CASE("enumerate_katetov") {
  auto R2 = table(make_Rn(2));
  auto R1 = table(make_Rn(1));
  auto p  = space(R2, {"p"}, {{0}});
  auto fs = enumerate_katetov(p, {0});
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].values == std::vector<Value>{v(R2, 1)});
  CHECK(fs[1].values == std::vector<Value>{v(R2, 2)});
  CHECK(enumerate_katetov(space(R1, {"u", "v"}, {{0, 1}, {1, 0}}), {0, 1}).size() == 1);
  auto empty = enumerate_katetov(p, {});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].domain.empty());

  // Oracle: every positive assignment filtered by is_katetov.
  for (auto const& m : {table(make_Rn(3)), table(make_S()), table(make_maxchain(3))}) {
    for (auto const& s : all_spaces(m, 3)) {
      std::vector<KatetovMap> brute;
      auto                    pos = m.positive_elements();
      for (auto const& x : pos) {
        for (auto const& y : pos) {
          for (auto const& z : pos) {
            KatetovMap f{{0, 1, 2}, {x, y, z}};
            if (is_katetov(s, f)) {
              brute.push_back(f);
            }
          }
        }
      }
      CHECK(enumerate_katetov(s, {0, 1, 2}) == brute);
    }
  }
  DistanceMonoid Q1(ParametricMonoid::truncated_rationals(1));
  CHECK(code_of([&] { enumerate_katetov(space(Q1, {"p"}, {{0}}), {0}); }) == ErrorCode::UnsupportedFamily);
}

TEST_CASE("check_extension_property") {
  auto R2   = table(make_Rn(2));
  auto R1   = table(make_Rn(1));
  auto miss = check_extension_property(space(R2, {"p"}, {{0}}), 1);
  REQUIRE(miss.has_value());
  CHECK(miss->domain == std::vector<Point>{0});
  CHECK(miss->values == std::vector<Value>{v(R2, 1)});
  CHECK_FALSE(check_extension_property(space(R1, {"a", "b", "c"}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), 2));
  CHECK(check_extension_property(space(R1, {"a", "b"}, {{0, 1}, {1, 0}}), 2).has_value());
}

TEST_CASE("fraisse_grow") {
  auto r1 = fraisse_grow(table(make_Rn(1)), 1, 50, 0);
  CHECK(r1.saturated);
  CHECK(r1.space.size() >= 2);

  auto triv = fraisse_grow(table(make_Rn(0)), 2, 50, 0);
  CHECK(triv.saturated);
  CHECK(triv.space.size() == 1);

  auto r2 = fraisse_grow(table(make_Rn(2)), 2, 200, 0);
  CHECK(r2.saturated);
  CHECK_FALSE(check_extension_property(r2.space, 2));
  CHECK(random_graph_level2(r2.space));

  auto again = fraisse_grow(table(make_Rn(2)), 2, 200, 0);
  CHECK(again.space == r2.space);

  auto small = fraisse_grow(table(make_Rn(2)), 2, 5, 0);
  CHECK_FALSE(small.saturated);
  CHECK(small.space.size() == 5);
  CHECK(small.unrealized == count_unrealized(small.space, 2));
  CHECK(small.unrealized > 0);

  CHECK(code_of([&] { fraisse_grow(DistanceMonoid(ParametricMonoid::nonnegative_integers()), 1, 10, 0); })
        == ErrorCode::UnsupportedFamily);
}

TEST_CASE("Lcg protocol") {
  Lcg g(0);
  CHECK(g.next() == 1442695040888963407ULL);
  CHECK(g.next() == 1442695040888963407ULL * 6364136223846793005ULL + 1442695040888963407ULL);
  Lcg                   h(42);
  std::vector<int>      xs{0, 1, 2, 3, 4, 5, 6, 7};
  h.shuffle(xs);
  std::vector<int> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("space text and json") {
  auto R2 = table(make_Rn(2));
  auto s  = space(R2, {"a", "b", "c"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK(parse_space_text(format_space_text(s)) == s);
  DistanceMonoid Q1(ParametricMonoid::truncated_rationals(1));
  auto           t = parse_space_text("monoid: Q1\npoints: a b\n0 1/2\n1/2 0\n");
  CHECK(t.d(0, 1) == Value::rational(Rational(1, 2)));
  CHECK(parse_space_text(format_space_text(t)) == t);
  auto j = space_to_json(s);
  CHECK(j["points"].size() == 3);
  CHECK(j["distances"][0][2] == "2");
  CHECK(code_of([&] { parse_space_text("monoid: R:2\npoints: a b\n0 1\n"); }) == ErrorCode::MalformedInput);
}

TEST_CASE("property: random extend chains always revalidate") {
  std::mt19937_64 rng(5);
  std::size_t     extends = 0;
  for (auto const& m : {table(make_Rn(3)), table(make_S()), table(make_maxchain(3)), table(make_Rn(5))}) {
    for (int chain = 0; chain < 500; ++chain) {
      auto s = space(m, {"x0"}, {{0}});
      for (int step = 0; step < 5; ++step) {
        std::vector<Point> dom;
        for (Point p = 0; p < s.size(); ++p) {
          if (rng() % 2) {
            dom.push_back(p);
          }
        }
        auto maps = enumerate_katetov(s, dom);
        REQUIRE_FALSE(maps.empty());
        auto f = maps[rng() % maps.size()];
        s      = extend(s, f, "x" + std::to_string(s.size()));
        CHECK_FALSE(find_triangle_violation(m, s.matrix()));
        CHECK(realizer(s, f).has_value());
        for (std::size_t i = 0; i < f.domain.size(); ++i) {
          CHECK(s.d(s.size() - 1, f.domain[i]) == f.values[i]);
        }
        ++extends;
      }
    }
  }
  CHECK(extends == 10000);
}

// Cross distance of the amalgam of {a} + C and {b} + C is the largest value
// that keeps the glued space valid, and both sides embed isometrically.
TEST_CASE("property: amalgam maximality against all completions") {
  for (auto const& m : {table(make_Rn(2)), table(make_Rn(3)), table(make_S()), table(make_maxchain(3)),
                        table(make_from_reals(ints({0, 1, 3, 4})))}) {
    for (std::size_t c = 0; c <= 2; ++c) {
      for (auto const& base : all_spaces(m, c + 2)) {
        // points 0..c-1 form C, c is a, c+1 is b; use base only for a-side
        // and b-side distances to C and within C.
        std::vector<std::string> ca;
        std::vector<std::string> cb;
        Matrix                   da(c + 1, std::vector<Value>(c + 1));
        Matrix                   db(c + 1, std::vector<Value>(c + 1));
        for (std::size_t i = 0; i <= c; ++i) {
          std::size_t ia = i < c ? i : c;
          std::size_t ib = i < c ? i : c + 1;
          ca.push_back(i < c ? "c" + std::to_string(i) : "a");
          cb.push_back(i < c ? "c" + std::to_string(i) : "b");
          for (std::size_t j = 0; j <= c; ++j) {
            std::size_t ja = j < c ? j : c;
            std::size_t jb = j < c ? j : c + 1;
            da[i][j]       = base.d(ia, ja);
            db[i][j]       = base.d(ib, jb);
          }
        }
        auto A   = validate_space(m, ca, da);
        auto B   = validate_space(m, cb, db);
        auto AB  = free_amalgam(A, B);
        auto pa  = AB.at("a");
        auto pb  = AB.at("b");
        for (std::size_t i = 0; i <= c; ++i) {
          for (std::size_t j = 0; j <= c; ++j) {
            CHECK(AB.d(AB.at(ca[i]), AB.at(ca[j])) == A.d(i, j));
            CHECK(AB.d(AB.at(cb[i]), AB.at(cb[j])) == B.d(i, j));
          }
        }
        std::optional<Value> best;
        for (auto const& x : m.positive_elements()) {
          Matrix d = AB.matrix();
          d[pa][pb] = x;
          d[pb][pa] = x;
          if (!find_triangle_violation(m, d)) {
            best = x;
          }
        }
        REQUIRE(best.has_value());
        CHECK(*best == AB.d(pa, pb));
      }
    }
  }
}

TEST_CASE("property: balls are equivalence classes over ultrametric monoids") {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto m = table(make_maxchain(k));
    auto g = fraisse_grow(m, 2, 60, k);
    auto s = g.space;
    for (auto const& r : m.elements()) {
      for (Point x = 0; x < s.size(); ++x) {
        for (Point y = 0; y < s.size(); ++y) {
          for (Point z = 0; z < s.size(); ++z) {
            if (leq(m, s.d(x, y), r) && leq(m, s.d(y, z), r)) {
              CHECK(leq(m, s.d(x, z), r));
            }
          }
        }
      }
    }
  }
}
