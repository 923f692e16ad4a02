#include "urysohn/metric_space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "urysohn/monoid_io.hpp"

namespace urysohn {

  struct SpaceAccess {
    static RMetricSpace make(DistanceMonoid m, std::vector<std::string> labels, Matrix d) {
      return RMetricSpace(std::move(m), std::move(labels), std::move(d));
    }
  };

  namespace {
    using Rank = std::uint32_t;

    // Element ranks and rank-level tables for a finite monoid, so that the
    // saturation searches never touch rationals.
    struct RankArith {
      explicit RankArith(DistanceMonoid const& m) : elems(m.elements()), n(elems.size()), op(n * n), ad(n * n) {
        for (Rank a = 0; a < n; ++a) {
          for (Rank b = 0; b < n; ++b) {
            op[a * n + b] = rank(m, oplus(m, elems[a], elems[b]));
            ad[a * n + b] = rank(m, abs_diff(m, elems[a], elems[b]));
          }
        }
      }

      static Rank rank(DistanceMonoid const& m, Value const& v) {
        if (v.is_element()) {
          return static_cast<Rank>(v.index());
        }
        (void)m;
        return static_cast<Rank>(v.value().numerator());
      }

      Rank plus(Rank a, Rank b) const {
        return op[a * n + b];
      }
      Rank diff(Rank a, Rank b) const {
        return ad[a * n + b];
      }
      bool katetov_pair(Rank fu, Rank fv, Rank duv) const {
        return diff(fu, fv) <= duv && duv <= plus(fu, fv);
      }

      std::vector<Value> elems;
      std::size_t        n;
      std::vector<Rank>  op;
      std::vector<Rank>  ad;
    };

    std::vector<std::vector<Rank>> rank_matrix(RMetricSpace const& s) {
      std::vector<std::vector<Rank>> r(s.size(), std::vector<Rank>(s.size()));
      for (Point a = 0; a < s.size(); ++a) {
        for (Point b = 0; b < s.size(); ++b) {
          r[a][b] = RankArith::rank(s.monoid(), s.d(a, b));
        }
      }
      return r;
    }

    // Depth-first over positive rank tuples on `dom`, lexicographic.
    template <class Visit>
    void for_each_katetov(RankArith const& ar, std::vector<std::vector<Rank>> const& d, std::vector<Point> const& dom,
                          std::vector<Rank>& vals, Visit&& visit) {
      std::size_t i = vals.size();
      if (i == dom.size()) {
        visit(vals);
        return;
      }
      for (Rank v = 1; v < ar.n; ++v) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          ok = ar.katetov_pair(vals[j], v, d[dom[j]][dom[i]]);
        }
        if (ok) {
          vals.push_back(v);
          for_each_katetov(ar, d, dom, vals, visit);
          vals.pop_back();
        }
      }
    }

    std::uint64_t encode(std::vector<Rank> const& vals, std::size_t base) {
      std::uint64_t key = 0;
      for (Rank v : vals) {
        key = key * base + v;
      }
      return key;
    }

    // Calls found(dom, vals) for every unrealized map over at most k points,
    // domains by size then lexicographically, maps lexicographically; stops
    // early when found returns false.
    template <class Found>
    void scan_unrealized(RankArith const& ar, std::vector<std::vector<Rank>> const& d, std::size_t k, Found&& found) {
      std::size_t const n = d.size();
      if (n == 0) {
        found(std::vector<Point>{}, std::vector<Rank>{});
        return;
      }
      std::map<std::vector<Rank>, std::vector<std::vector<Rank>>> memo;
      for (std::size_t size = 1; size <= std::min(k, n); ++size) {
        std::vector<Point> dom(size);
        for (std::size_t i = 0; i < size; ++i) {
          dom[i] = i;
        }
        while (true) {
          std::vector<Rank> pattern;
          for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = i + 1; j < size; ++j) {
              pattern.push_back(d[dom[i]][dom[j]]);
            }
          }
          auto it = memo.find(pattern);
          if (it == memo.end()) {
            std::vector<std::vector<Rank>> maps;
            std::vector<Rank>              vals;
            for_each_katetov(ar, d, dom, vals, [&](std::vector<Rank> const& v) { maps.push_back(v); });
            it = memo.emplace(pattern, std::move(maps)).first;
          }
          std::unordered_set<std::uint64_t> realized;
          std::vector<Rank>                 row(size);
          for (Point p = 0; p < n; ++p) {
            if (std::find(dom.begin(), dom.end(), p) != dom.end()) {
              continue;
            }
            for (std::size_t i = 0; i < size; ++i) {
              row[i] = d[p][dom[i]];
            }
            realized.insert(encode(row, ar.n));
          }
          for (auto const& vals : it->second) {
            if (!realized.contains(encode(vals, ar.n)) && !found(dom, vals)) {
              return;
            }
          }
          // next combination
          std::size_t i = size;
          while (i > 0 && dom[i - 1] == n - size + i - 1) {
            --i;
          }
          if (i == 0) {
            break;
          }
          ++dom[i - 1];
          for (std::size_t j = i; j < size; ++j) {
            dom[j] = dom[j - 1] + 1;
          }
        }
      }
    }

    KatetovMap to_map(RankArith const& ar, std::vector<Point> const& dom, std::vector<Rank> const& vals) {
      KatetovMap f{dom, {}};
      for (Rank v : vals) {
        f.values.push_back(ar.elems[v]);
      }
      return f;
    }
  }  // namespace

  std::optional<Point> RMetricSpace::find(std::string_view label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<Point>(it - _labels.begin());
  }

  Point RMetricSpace::at(std::string_view label) const {
    if (auto p = find(label)) {
      return *p;
    }
    throw Error(ErrorCode::MalformedInput, "unknown point '" + std::string(label) + "'");
  }

  std::vector<Point> RMetricSpace::at(std::vector<std::string> const& labels) const {
    std::vector<Point> out;
    for (auto const& l : labels) {
      out.push_back(at(l));
    }
    return out;
  }

  std::optional<std::array<Point, 3>> find_triangle_violation(DistanceMonoid const& m, Matrix const& d) {
    std::size_t const n = d.size();
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        for (Point z = 0; z < n; ++z) {
          if (lt(m, oplus(m, d[x][y], d[y][z]), d[x][z])) {
            return std::array<Point, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  RMetricSpace validate_space(DistanceMonoid m, std::vector<std::string> labels, Matrix d) {
    std::size_t const n = d.size();
    if (labels.size() != n) {
      throw Error(ErrorCode::MalformedInput, "label count does not match matrix size");
    }
    std::set<std::string> seen;
    for (auto const& l : labels) {
      if (l.empty() || !seen.insert(l).second) {
        throw Error(ErrorCode::MalformedInput, "point labels must be nonempty and distinct: '" + l + "'");
      }
    }
    for (auto const& row : d) {
      if (row.size() != n) {
        throw Error(ErrorCode::MalformedInput, "distance matrix is not square");
      }
      for (auto const& v : row) {
        m.require(v);
      }
    }
    for (Point x = 0; x < n; ++x) {
      if (!(d[x][x] == m.zero())) {
        throw Error(ErrorCode::NonzeroDiagonal, "d(" + labels[x] + "," + labels[x] + ") != 0", {x});
      }
    }
    for (Point x = 0; x < n; ++x) {
      for (Point y = x + 1; y < n; ++y) {
        if (!(d[x][y] == d[y][x])) {
          throw Error(ErrorCode::Asymmetric, "d(" + labels[x] + "," + labels[y] + ") != d(" + labels[y] + "," + labels[x] + ")",
                      {x, y});
        }
        if (d[x][y] == m.zero()) {
          throw Error(ErrorCode::ZeroOffDiagonal, "d(" + labels[x] + "," + labels[y] + ") = 0", {x, y});
        }
      }
    }
    if (auto t = find_triangle_violation(m, d)) {
      auto [x, y, z] = *t;
      throw Error(ErrorCode::TriangleViolation,
                  "d(" + labels[x] + "," + labels[z] + ") = " + m.format(d[x][z]) + " > d(" + labels[x] + "," + labels[y]
                      + ") + d(" + labels[y] + "," + labels[z] + ") = " + m.format(oplus(m, d[x][y], d[y][z])),
                  {x, y, z});
    }
    return SpaceAccess::make(std::move(m), std::move(labels), std::move(d));
  }

  bool is_katetov(RMetricSpace const& s, KatetovMap const& f) {
    auto const& m = s.monoid();
    if (f.domain.size() != f.values.size()) {
      return false;
    }
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
      if (f.domain[i] >= s.size() || !m.contains(f.values[i]) || f.values[i] == m.zero()) {
        return false;
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (f.domain[i] == f.domain[j]) {
          return false;
        }
        Value const& duv = s.d(f.domain[i], f.domain[j]);
        if (lt(m, duv, abs_diff(m, f.values[i], f.values[j])) || lt(m, oplus(m, f.values[i], f.values[j]), duv)) {
          return false;
        }
      }
    }
    return true;
  }

  RMetricSpace extend(RMetricSpace const& s, KatetovMap const& f, std::string label) {
    auto const& m = s.monoid();
    if (!is_katetov(s, f)) {
      throw Error(ErrorCode::TriangleViolation, "map is not Katetov over the space");
    }
    if (s.find(label)) {
      throw Error(ErrorCode::MalformedInput, "point '" + label + "' already exists");
    }
    if (f.domain.empty() && !m.has_max() && s.size() > 0) {
      throw Error(ErrorCode::EmptyBase, "extension over an empty domain needs max R");
    }
    std::size_t const n = s.size();
    std::vector<Value> row(n + 1, m.zero());
    for (Point x = 0; x < n; ++x) {
      Value best = m.top();
      for (std::size_t i = 0; i < f.domain.size(); ++i) {
        best = min_of(m, best, oplus(m, f.values[i], s.d(f.domain[i], x)));
      }
      if (best == m.zero()) {
        throw Error(ErrorCode::CollisionWithExistingPoint, "new point coincides with " + s.label(x), {x});
      }
      row[x] = best;
    }
    Matrix d = s.matrix();
    for (Point x = 0; x < n; ++x) {
      d[x].push_back(row[x]);
    }
    d.push_back(row);
    // Only triangles through the new point can fail.
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        if (lt(m, oplus(m, row[x], s.d(x, y)), row[y]) || lt(m, oplus(m, row[x], row[y]), s.d(x, y))) {
          throw Error(ErrorCode::TheoremViolated, "free extension broke the triangle inequality at " + s.label(x) + ", "
                                                      + s.label(y));
        }
      }
    }
    auto labels = s.labels();
    labels.push_back(std::move(label));
    return SpaceAccess::make(m, std::move(labels), std::move(d));
  }

  RMetricSpace free_amalgam(RMetricSpace const& a, RMetricSpace const& b) {
    if (!(a.monoid() == b.monoid())) {
      throw Error(ErrorCode::MixedCarriers, "spaces over different monoids");
    }
    auto const&        m = a.monoid();
    std::vector<Point> common_a;
    std::vector<Point> common_b;
    std::vector<Point> only_b;
    for (Point y = 0; y < b.size(); ++y) {
      if (auto x = a.find(b.label(y))) {
        common_a.push_back(*x);
        common_b.push_back(y);
      } else {
        only_b.push_back(y);
      }
    }
    for (std::size_t i = 0; i < common_a.size(); ++i) {
      for (std::size_t j = 0; j < common_a.size(); ++j) {
        if (!(a.d(common_a[i], common_a[j]) == b.d(common_b[i], common_b[j]))) {
          throw Error(ErrorCode::MalformedInput, "shared points " + a.label(common_a[i]) + ", " + a.label(common_a[j])
                                                     + " are at different distances in the two spaces");
        }
      }
    }
    std::size_t const outside_a = a.size() - common_a.size();
    if (common_a.empty() && outside_a > 0 && !only_b.empty() && !m.has_max()) {
      throw Error(ErrorCode::EmptyBase, "amalgamation over an empty base needs max R");
    }
    std::size_t const n = a.size() + only_b.size();
    Matrix            d(n, std::vector<Value>(n, m.zero()));
    for (Point x = 0; x < a.size(); ++x) {
      for (Point y = 0; y < a.size(); ++y) {
        d[x][y] = a.d(x, y);
      }
    }
    // b-side distances, with b's shared points mapped onto a's.
    std::vector<Point> place(b.size());
    for (std::size_t i = 0; i < common_b.size(); ++i) {
      place[common_b[i]] = common_a[i];
    }
    for (std::size_t i = 0; i < only_b.size(); ++i) {
      place[only_b[i]] = a.size() + i;
    }
    for (Point y = 0; y < b.size(); ++y) {
      for (Point z = 0; z < b.size(); ++z) {
        d[place[y]][place[z]] = b.d(y, z);
      }
    }
    for (Point x = 0; x < a.size(); ++x) {
      if (std::find(common_a.begin(), common_a.end(), x) != common_a.end()) {
        continue;
      }
      for (Point y : only_b) {
        Value best = m.top();
        for (std::size_t i = 0; i < common_a.size(); ++i) {
          best = min_of(m, best, oplus(m, a.d(x, common_a[i]), b.d(common_b[i], y)));
        }
        d[x][place[y]] = best;
        d[place[y]][x] = best;
      }
    }
    auto labels = a.labels();
    for (Point y : only_b) {
      labels.push_back(b.label(y));
    }
    return validate_space(m, std::move(labels), std::move(d));
  }

  std::vector<KatetovMap> enumerate_katetov(RMetricSpace const& s, std::vector<Point> const& domain) {
    RankArith               ar(s.monoid());
    auto                    d = rank_matrix(s);
    std::vector<KatetovMap> out;
    std::vector<Rank>       vals;
    for_each_katetov(ar, d, domain, vals, [&](std::vector<Rank> const& v) { out.push_back(to_map(ar, domain, v)); });
    return out;
  }

  std::optional<Point> realizer(RMetricSpace const& s, KatetovMap const& f) {
    for (Point p = 0; p < s.size(); ++p) {
      if (std::find(f.domain.begin(), f.domain.end(), p) != f.domain.end()) {
        continue;
      }
      bool ok = true;
      for (std::size_t i = 0; i < f.domain.size() && ok; ++i) {
        ok = s.d(p, f.domain[i]) == f.values[i];
      }
      if (ok) {
        return p;
      }
    }
    return std::nullopt;
  }

  std::optional<KatetovMap> check_extension_property(RMetricSpace const& s, std::size_t k) {
    RankArith                 ar(s.monoid());
    std::optional<KatetovMap> missing;
    scan_unrealized(ar, rank_matrix(s), k, [&](std::vector<Point> const& dom, std::vector<Rank> const& vals) {
      missing = to_map(ar, dom, vals);
      return false;
    });
    return missing;
  }

  std::size_t count_unrealized(RMetricSpace const& s, std::size_t k) {
    RankArith   ar(s.monoid());
    std::size_t count = 0;
    scan_unrealized(ar, rank_matrix(s), k, [&](std::vector<Point> const&, std::vector<Rank> const&) {
      ++count;
      return true;
    });
    return count;
  }

  std::uint64_t Lcg::next() {
    _state = _state * 6364136223846793005ULL + 1442695040888963407ULL;
    return _state;
  }

  std::size_t Lcg::draw(std::size_t n) {
    return static_cast<std::size_t>((next() >> 33) % n);
  }

  GrowResult fraisse_grow(DistanceMonoid const& m, std::size_t k, std::size_t budget, std::uint64_t seed) {
    if (k == 0) {
      throw Error(ErrorCode::MalformedInput, "k must be at least 1");
    }
    RankArith                      ar(m);
    Lcg                            rng(seed);
    std::vector<std::vector<Rank>> d{{0}};
    std::size_t                    rounds = 0;

    auto realized = [&](std::vector<Point> const& dom, std::vector<Rank> const& vals) {
      for (Point p = 0; p < d.size(); ++p) {
        bool ok = std::find(dom.begin(), dom.end(), p) == dom.end();
        for (std::size_t i = 0; i < dom.size() && ok; ++i) {
          ok = d[p][dom[i]] == vals[i];
        }
        if (ok) {
          return true;
        }
      }
      return false;
    };

    auto add_point = [&](std::vector<Point> const& dom, std::vector<Rank> const& vals) {
      std::size_t const  n = d.size();
      std::vector<Rank>  row(n, 0);
      std::vector<char>  fixed(n, 0);
      for (std::size_t i = 0; i < dom.size(); ++i) {
        row[dom[i]]   = vals[i];
        fixed[dom[i]] = 1;
      }
      for (Point x = 0; x < n; ++x) {
        if (fixed[x]) {
          continue;
        }
        std::vector<Rank> allowed;
        for (Rank v = 1; v < ar.n; ++v) {
          bool ok = true;
          for (Point y = 0; y < n && ok; ++y) {
            if (fixed[y]) {
              ok = ar.katetov_pair(row[y], v, d[x][y]);
            }
          }
          if (ok) {
            allowed.push_back(v);
          }
        }
        if (allowed.empty()) {
          throw Error(ErrorCode::TheoremViolated, "no Katetov value for a free point");
        }
        row[x]   = allowed[rng.draw(allowed.size())];
        fixed[x] = 1;
      }
      for (Point x = 0; x < n; ++x) {
        d[x].push_back(row[x]);
      }
      row.push_back(0);
      d.push_back(std::move(row));
    };

    bool saturated = false;
    while (true) {
      std::vector<std::pair<std::vector<Point>, std::vector<Rank>>> todo;
      scan_unrealized(ar, d, k, [&](std::vector<Point> const& dom, std::vector<Rank> const& vals) {
        todo.emplace_back(dom, vals);
        return true;
      });
      if (todo.empty()) {
        saturated = true;
        break;
      }
      if (d.size() >= budget) {
        break;
      }
      ++rounds;
      rng.shuffle(todo);
      for (auto const& [dom, vals] : todo) {
        if (d.size() >= budget) {
          break;
        }
        if (!realized(dom, vals)) {
          add_point(dom, vals);
        }
      }
    }

    std::vector<std::string> labels;
    Matrix                   dm(d.size(), std::vector<Value>(d.size()));
    for (Point x = 0; x < d.size(); ++x) {
      labels.push_back("p" + std::to_string(x));
      for (Point y = 0; y < d.size(); ++y) {
        dm[x][y] = ar.elems[d[x][y]];
      }
    }
    GrowResult out{validate_space(m, std::move(labels), std::move(dm)), saturated, 0, rounds};
    if (!saturated) {
      out.unrealized = count_unrealized(out.space, k);
    }
    return out;
  }

  //////////////////////////////////////////////////////////////////////////
  // I/O
  //////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::string> split(std::string const& line) {
      std::vector<std::string> out;
      std::istringstream       in(line);
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }
  }  // namespace

  RMetricSpace parse_space_text(std::string_view text, std::filesystem::path const& base_dir) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream                    in{std::string(text)};
    std::string                           line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      auto toks = split(line);
      if (!toks.empty()) {
        lines.push_back(std::move(toks));
      }
    }
    std::size_t i = 0;
    if (lines.empty() || lines[0][0] != "monoid:" || lines[0].size() != 2) {
      throw Error(ErrorCode::MalformedInput, "space file must start with 'monoid: <tag or path>'");
    }
    std::string const           source = lines[0][1];
    std::optional<DistanceMonoid> m;
    ++i;
    if (source == "inline") {
      std::string block;
      while (i < lines.size() && lines[i][0] != "points:") {
        for (auto const& t : lines[i]) {
          block += t + " ";
        }
        block += "\n";
        ++i;
      }
      m.emplace(parse_monoid_text(block));
    } else if (is_family_tag(source)) {
      m.emplace(parse_family_tag(source));
    } else {
      std::filesystem::path p(source);
      if (p.is_relative() && !base_dir.empty()) {
        p = base_dir / p;
      }
      m.emplace(parse_monoid_text(read_file(p)));
    }
    if (i >= lines.size() || lines[i][0] != "points:") {
      throw Error(ErrorCode::MalformedInput, "missing 'points:' line");
    }
    std::vector<std::string> labels(lines[i].begin() + 1, lines[i].end());
    ++i;
    if (lines.size() - i != labels.size()) {
      throw Error(ErrorCode::MalformedInput, "expected " + std::to_string(labels.size()) + " matrix rows");
    }
    Matrix d;
    for (; i < lines.size(); ++i) {
      if (lines[i].size() != labels.size()) {
        throw Error(ErrorCode::MalformedInput, "matrix row of the wrong length");
      }
      std::vector<Value> row;
      for (auto const& t : lines[i]) {
        row.push_back(m->parse(t));
      }
      d.push_back(std::move(row));
    }
    return validate_space(*m, std::move(labels), std::move(d));
  }

  std::string format_space_text(RMetricSpace const& s) {
    auto const& m = s.monoid();
    std::string out;
    if (auto const* f = m.family()) {
      out += "monoid: " + f->tag() + "\n";
    } else {
      out += "monoid: inline\n" + format_monoid_text(m.table());
    }
    out += "points:";
    for (auto const& l : s.labels()) {
      out += " " + l;
    }
    out += "\n";
    for (Point x = 0; x < s.size(); ++x) {
      for (Point y = 0; y < s.size(); ++y) {
        out += (y ? " " : "") + m.format(s.d(x, y));
      }
      out += "\n";
    }
    return out;
  }

  RMetricSpace load_space(std::filesystem::path const& path) {
    return parse_space_text(read_file(path), path.parent_path());
  }

  nlohmann::ordered_json space_to_json(RMetricSpace const& s) {
    nlohmann::ordered_json j;
    j["monoid"] = monoid_to_json(s.monoid());
    j["points"] = s.labels();
    auto rows   = nlohmann::ordered_json::array();
    for (Point x = 0; x < s.size(); ++x) {
      auto row = nlohmann::ordered_json::array();
      for (Point y = 0; y < s.size(); ++y) {
        row.push_back(s.monoid().format(s.d(x, y)));
      }
      rows.push_back(row);
    }
    j["distances"] = rows;
    return j;
  }

}  // namespace urysohn
