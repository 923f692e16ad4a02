#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "urysohn/monoid.hpp"

namespace urysohn {

  using Point  = std::size_t;
  using Matrix = std::vector<std::vector<Value>>;

  // A finite R-metric space with labelled points. Only exists validated.
  class RMetricSpace {
   public:
    DistanceMonoid const& monoid() const noexcept {
      return _monoid;
    }
    std::size_t size() const noexcept {
      return _labels.size();
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string const& label(Point p) const {
      return _labels.at(p);
    }
    std::optional<Point> find(std::string_view label) const;
    // Throws MalformedInput for unknown labels.
    Point              at(std::string_view label) const;
    std::vector<Point> at(std::vector<std::string> const& labels) const;

    Value const& d(Point a, Point b) const {
      return _d[a][b];
    }
    Matrix const& matrix() const noexcept {
      return _d;
    }

    bool operator==(RMetricSpace const&) const = default;

   private:
    friend struct SpaceAccess;

    RMetricSpace(DistanceMonoid m, std::vector<std::string> labels, Matrix d)
        : _monoid(std::move(m)), _labels(std::move(labels)), _d(std::move(d)) {}

    DistanceMonoid           _monoid;
    std::vector<std::string> _labels;
    Matrix                   _d;
  };

  // First (x, y, z) in lexicographic order with d(x,z) > d(x,y) + d(y,z).
  std::optional<std::array<Point, 3>> find_triangle_violation(DistanceMonoid const& m, Matrix const& d);

  // Checks shape, zero diagonal, symmetry, positivity off the diagonal,
  // carrier membership and the triangle inequality, in that order.
  RMetricSpace validate_space(DistanceMonoid m, std::vector<std::string> labels, Matrix d);

  // Prescribed distances from a new point to the points of `domain`.
  struct KatetovMap {
    std::vector<Point> domain;
    std::vector<Value> values;

    bool operator==(KatetovMap const&) const = default;
  };

  // |f(u) - f(v)| <= d(u,v) <= f(u) + f(v) on the domain, all f positive.
  bool is_katetov(RMetricSpace const& s, KatetovMap const& f);

  // Adds a point p with d(p,u) = f(u) on the domain and
  // d(p,x) = min_u f(u) + d(u,x) elsewhere (max R for an empty domain).
  RMetricSpace extend(RMetricSpace const& s, KatetovMap const& f, std::string label);

  // Glues a and b along the points whose labels they share, which must span
  // isometric subspaces. Cross distances are min_c d(x,c) + d(c,y).
  RMetricSpace free_amalgam(RMetricSpace const& a, RMetricSpace const& b);

  // All Katětov maps over `domain`, values in lexicographic order (first
  // coordinate most significant). Needs a finite monoid.
  std::vector<KatetovMap> enumerate_katetov(RMetricSpace const& s, std::vector<Point> const& domain);

  // Some point outside the domain at exactly the prescribed distances.
  std::optional<Point> realizer(RMetricSpace const& s, KatetovMap const& f);

  // First (domain, map) with |domain| <= k that no point realizes, domains
  // ordered by size and then lexicographically.
  std::optional<KatetovMap> check_extension_property(RMetricSpace const& s, std::size_t k);
  std::size_t               count_unrealized(RMetricSpace const& s, std::size_t k);

  // 64-bit linear congruential generator (Knuth's MMIX constants); draws
  // take the high bits: (state >> 33) % n.
  class Lcg {
   public:
    explicit Lcg(std::uint64_t seed) : _state(seed) {}
    std::uint64_t next();
    std::size_t   draw(std::size_t n);

    template <class T>
    void shuffle(std::vector<T>& xs) {
      for (std::size_t i = xs.size(); i > 1; --i) {
        std::swap(xs[i - 1], xs[draw(i)]);
      }
    }

   private:
    std::uint64_t _state;
  };

  struct GrowResult {
    RMetricSpace space;
    bool         saturated  = false;
    std::size_t  unrealized = 0;
    std::size_t  rounds     = 0;
  };

  // Starts from one point and, round by round, realizes every unrealized
  // Katětov map over at most k points (in an order shuffled by the seed)
  // with a new point whose remaining distances are drawn uniformly among
  // the values keeping its map Katětov. Stops when the extension property
  // holds or the space has `budget` points.
  GrowResult fraisse_grow(DistanceMonoid const& m, std::size_t k, std::size_t budget, std::uint64_t seed);

  //////////////////////////////////////////////////////////////////////////
  // I/O
  //////////////////////////////////////////////////////////////////////////

  // monoid: <tag | path | inline>
  // [monoid text block when inline]
  // points: a b c
  // <symmetric matrix of distance labels>
  RMetricSpace parse_space_text(std::string_view text, std::filesystem::path const& base_dir = {});
  std::string  format_space_text(RMetricSpace const& s);
  RMetricSpace load_space(std::filesystem::path const& path);

  nlohmann::ordered_json space_to_json(RMetricSpace const& s);

}  // namespace urysohn
