#include "urysohn/independence.hpp"

#include <algorithm>

#include "urysohn/errors.hpp"

namespace urysohn {

  namespace {

    PointSet set_union(PointSet a, PointSet const& b) {
      a.insert(a.end(), b.begin(), b.end());
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      return a;
    }

    PointSet sorted(PointSet a) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      return a;
    }

    void check_points(RMetricSpace const& s, PointSet const& xs) {
      for (auto p : xs) {
        if (p >= s.size()) {
          throw Error(ErrorCode::MalformedInput, "point index out of range", {p});
        }
      }
    }

  }  // namespace

  Value dmax(RMetricSpace const& s, Point b1, Point b2, PointSet const& C) {
    auto const& m   = s.monoid();
    Value       out = m.top();
    for (auto c : C) {
      out = min_of(m, out, oplus(m, s.d(b1, c), s.d(c, b2)));
    }
    return out;
  }

  Value dmin(RMetricSpace const& s, Point b1, Point b2, PointSet const& C) {
    auto const& m   = s.monoid();
    Value       out = one_third(m, s.d(b1, b2));
    for (auto c : C) {
      out = max_of(m, out, abs_diff(m, s.d(b1, c), s.d(c, b2)));
    }
    return out;
  }

  Value dist_to_set(RMetricSpace const& s, Point a, PointSet const& C) {
    auto const& m   = s.monoid();
    Value       out = m.top();
    for (auto c : C) {
      out = min_of(m, out, s.d(a, c));
    }
    return out;
  }

  ForkingReport forks(RMetricSpace const& s, PointSet const& A, PointSet const& B, PointSet const& C) {
    check_points(s, A);
    check_points(s, B);
    check_points(s, C);
    auto const    bs = sorted(B);
    auto const    ac = set_union(A, C);
    ForkingReport r;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (std::size_t j = i; j < bs.size(); ++j) {
        ++r.pairs_checked;
        auto const b1 = bs[i], b2 = bs[j];
        auto       x = dmax(s, b1, b2, ac), y = dmax(s, b1, b2, C);
        if (x != y) {
          r.independent = false;
          r.certificate = ForkingCertificate{b1, b2, Equality::Dmax, x, y};
          return r;
        }
        x = dmin(s, b1, b2, ac);
        y = dmin(s, b1, b2, C);
        if (x != y) {
          r.independent = false;
          r.certificate = ForkingCertificate{b1, b2, Equality::Dmin, x, y};
          return r;
        }
      }
    }
    return r;
  }

  bool rel_dist(RMetricSpace const& s, PointSet const& A, PointSet const& B, PointSet const& C) {
    auto const bc = set_union(B, C);
    return std::all_of(A.begin(), A.end(), [&](Point a) { return dist_to_set(s, a, bc) == dist_to_set(s, a, C); });
  }

  bool rel_otimes(RMetricSpace const& s, PointSet const& A, PointSet const& B, PointSet const& C) {
    for (auto a : A) {
      for (auto b : B) {
        if (s.d(a, b) != dmax(s, a, b, C)) {
          return false;
        }
      }
    }
    return true;
  }

  bool rel_dmax(RMetricSpace const& s, PointSet const& A, PointSet const& B, PointSet const& C) {
    auto const ac = set_union(A, C);
    for (auto b1 : B) {
      for (auto b2 : B) {
        if (dmax(s, b1, b2, ac) != dmax(s, b1, b2, C)) {
          return false;
        }
      }
    }
    return true;
  }

  bool simple_criterion(RMetricSpace const& s, PointSet const& A, PointSet const& B, PointSet const& C) {
    auto const& m = s.monoid();
    if (!is_simple_monoid(m)) {
      throw Error(ErrorCode::MonoidNotSimple, "the criterion needs a monoid with simple theory");
    }
    auto const bc = set_union(B, C);
    return std::all_of(A.begin(), A.end(), [&](Point a) {
      return nfold(m, dist_to_set(s, a, bc), 2) == nfold(m, dist_to_set(s, a, C), 2);
    });
  }

  Value u_value(RMetricSpace const& s, Point a, PointSet const& B, PointSet const& C, Point b_star) {
    auto const bc = set_union(B, C);
    if (bc.empty()) {
      throw Error(ErrorCode::EmptyBC, "U(a) is an infimum over BC, which is empty");
    }
    auto const& m = s.monoid();
    Value       out = m.top();
    for (auto b : bc) {
      out = min_of(m, out, oplus(m, s.d(a, b), dmin(s, b_star, b, C)));
    }
    return out;
  }

  Matrix pair_pattern_matrix(RMetricSpace const& s, Point b1, Point b2, PointSet const& C, PairPattern const& p,
                             std::size_t copies) {
    // Points 2l and 2l+1 are b1^l and b2^l; C follows.
    std::size_t const n = 2 * copies + C.size();
    Matrix            d(n, std::vector<Value>(n, s.monoid().zero()));
    Point const       base[2] = {b1, b2};
    for (std::size_t x = 0; x < 2 * copies; ++x) {
      for (std::size_t y = 0; y < 2 * copies; ++y) {
        std::size_t const lx = x / 2, ly = y / 2, kx = x % 2, ky = y % 2;
        if (lx == ly) {
          d[x][y] = s.d(base[kx], base[ky]);
        } else if (kx == ky) {
          d[x][y] = kx == 0 ? p.d11 : p.d22;
        } else {
          bool const first_is_b1 = kx == 0;
          bool const b1_earlier  = first_is_b1 ? lx < ly : ly < lx;
          d[x][y]                = b1_earlier ? p.d12 : p.d21;
        }
      }
      for (std::size_t j = 0; j < C.size(); ++j) {
        d[x][2 * copies + j] = d[2 * copies + j][x] = s.d(base[x % 2], C[j]);
      }
    }
    for (std::size_t i = 0; i < C.size(); ++i) {
      for (std::size_t j = 0; j < C.size(); ++j) {
        d[2 * copies + i][2 * copies + j] = s.d(C[i], C[j]);
      }
    }
    return d;
  }

  std::optional<PairPattern> pair_sequence_search(RMetricSpace const& s, Point b1, Point b2, PointSet const& C,
                                                  Value const& alpha, std::size_t copies) {
    auto const& m = s.monoid();
    m.require(alpha);
    auto const els = m.elements();
    for (auto const& d11 : els) {
      for (auto const& d22 : els) {
        for (auto const& d21 : els) {
          PairPattern p{d11, d22, alpha, d21};
          if (!find_triangle_violation(m, pair_pattern_matrix(s, b1, b2, C, p, copies))) {
            return p;
          }
        }
      }
    }
    return std::nullopt;
  }

  nlohmann::ordered_json forking_to_json(RMetricSpace const& s, ForkingReport const& r) {
    nlohmann::ordered_json j;
    j["verdict"]       = r.independent ? "independent" : "forks";
    j["pairs_checked"] = r.pairs_checked;
    if (r.certificate) {
      auto const& c = *r.certificate;
      j["certificate"] = {
          {"b1", s.label(c.b1)},
          {"b2", s.label(c.b2)},
          {"equality", c.failed == Equality::Dmax ? "dmax" : "dmin"},
          {"over_AC", s.monoid().format(c.over_ac)},
          {"over_C", s.monoid().format(c.over_c)},
      };
    } else {
      j["certificate"] = nullptr;
    }
    return j;
  }

}  // namespace urysohn
