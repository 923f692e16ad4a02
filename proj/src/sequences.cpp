#include "urysohn/sequences.hpp"

#include <algorithm>
#include <sstream>

#include "urysohn/errors.hpp"
#include "urysohn/monoid_io.hpp"

namespace urysohn {

  namespace {

    void require_square(DiagonalSpec const& spec) {
      for (auto const& row : spec.eps) {
        if (row.size() != spec.eps.size()) {
          throw Error(ErrorCode::MalformedInput, "eps must be a square matrix");
        }
        for (auto const& v : row) {
          spec.monoid.require(v);
        }
      }
    }

    Value sum_of(DistanceMonoid const& m, std::vector<Value> const& xs, std::size_t lo, std::size_t hi) {
      Value out = m.zero();
      for (std::size_t i = lo; i <= hi && i < xs.size(); ++i) {
        out = oplus(m, out, xs[i]);
      }
      return out;
    }

    std::vector<std::string> split(std::string const& line) {
      std::istringstream       in(line);
      std::vector<std::string> out;
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    void require_nonsimple_pair(DistanceMonoid const& m, Value const& r, Value const& s) {
      m.require(r);
      m.require(s);
      if (!leq(m, r, s) || !lt(m, oplus(m, r, s), oplus(m, oplus(m, r, r), s))) {
        throw Error(ErrorCode::SimplicityHolds,
                    "need r <= s and r + s < 2r + s, got r = " + m.format(r) + ", s = " + m.format(s));
      }
    }

  }  // namespace

  CyclicResult cyclic_check(DiagonalSpec const& spec, std::size_t n) {
    require_square(spec);
    auto const&       m   = spec.monoid;
    auto const&       eps = spec.eps;
    std::size_t const l   = eps.size();
    if (n == 0) {
      throw Error(ErrorCode::MalformedInput, "cyclicity is defined for n >= 1");
    }
    if (n == 1) {
      for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
          Value const expect = spec.within ? (*spec.within)[i][j] : (i == j ? m.zero() : eps[i][j]);
          if (eps[i][j] != expect) {
            return {false, {i}};
          }
        }
      }
      return {};
    }
    // power[k][i][j]: least eps-sum over chains i = t_0, ..., t_{k+1} = j.
    std::vector<Matrix>                                       power{eps};
    std::vector<std::vector<std::vector<std::size_t>>> parent(1);
    for (std::size_t k = 1; k + 1 < n; ++k) {
      auto const& prev = power.back();
      Matrix      next(l, std::vector<Value>(l));
      std::vector<std::vector<std::size_t>> arg(l, std::vector<std::size_t>(l, 0));
      for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
          for (std::size_t t = 0; t < l; ++t) {
            Value v = oplus(m, prev[i][t], eps[t][j]);
            if (t == 0 || lt(m, v, next[i][j])) {
              next[i][j] = v;
              arg[i][j]  = t;
            }
          }
        }
      }
      power.push_back(std::move(next));
      parent.push_back(std::move(arg));
    }
    auto const& top = power.back();
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < l; ++j) {
        if (lt(m, top[i][j], eps[j][i])) {
          std::vector<std::size_t> chain{j};
          std::size_t              cur = j;
          for (std::size_t k = power.size() - 1; k > 0; --k) {
            cur = parent[k][i][cur];
            chain.push_back(cur);
          }
          chain.push_back(i);
          std::reverse(chain.begin(), chain.end());
          return {false, chain};
        }
      }
    }
    return {};
  }

  std::vector<std::size_t> np_indices(std::vector<Point> const& t0, std::vector<Point> const& t1) {
    if (t0.size() != t1.size()) {
      throw Error(ErrorCode::MalformedInput, "tuples of different lengths");
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < t0.size(); ++i) {
      if (t0[i] != t1[i]) {
        out.push_back(i);
      }
    }
    return out;
  }

  DiagonalSpec extract_spec(PointSequence const& seq) {
    if (seq.tuples.size() < 2) {
      throw Error(ErrorCode::MalformedInput, "a sequence needs at least two tuples");
    }
    auto const&       t0 = seq.tuples[0];
    auto const&       t1 = seq.tuples[1];
    std::size_t const l  = t0.size();
    DiagonalSpec      spec{seq.space.monoid(), {}, Matrix(l, std::vector<Value>(l)), np_indices(t0, t1)};
    spec.eps.assign(l, std::vector<Value>(l));
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < l; ++j) {
        spec.eps[i][j]        = seq.space.d(t0[i], t1[j]);
        (*spec.within)[i][j] = seq.space.d(t0[i], t0[j]);
      }
    }
    return spec;
  }

  SoSequence build_so_sequence(DistanceMonoid const& m, std::vector<Value> const& chain, std::size_t copies) {
    std::size_t const n = chain.size();
    if (n == 0 || copies < 2) {
      throw Error(ErrorCode::MalformedInput, "need a nonempty chain and at least two copies");
    }
    for (std::size_t i = 0; i < n; ++i) {
      m.require(chain[i]);
      if (i > 0 && lt(m, chain[i], chain[i - 1])) {
        throw Error(ErrorCode::ChainNotSorted, "chain decreases at position " + std::to_string(i + 1), {i});
      }
    }
    std::size_t const total = n * copies;
    auto              dist  = [&](std::size_t k, std::size_t i, std::size_t l, std::size_t j) {
      if (k > l || (k == l && i < j)) {
        std::swap(k, l);
        std::swap(i, j);
      }
      if (k == l && i == j) {
        return m.zero();
      }
      if (i >= j) {
        return sum_of(m, chain, j, i);
      }
      return sum_of(m, chain, i + 1, j);
    };
    Matrix full(total, std::vector<Value>(total));
    for (std::size_t p = 0; p < total; ++p) {
      for (std::size_t q = 0; q < total; ++q) {
        full[p][q] = dist(p / n, p % n, q / n, q % n);
      }
    }
    if (auto t = find_triangle_violation(m, full)) {
      throw Error(ErrorCode::Internal, "sequence construction broke the triangle inequality",
                  {(*t)[0], (*t)[1], (*t)[2]});
    }
    std::vector<std::size_t> rep(total);
    std::vector<std::size_t> kept;
    for (std::size_t p = 0; p < total; ++p) {
      auto it = std::find_if(kept.begin(), kept.end(), [&](std::size_t q) { return full[q][p] == m.zero(); });
      if (it == kept.end()) {
        rep[p] = kept.size();
        kept.push_back(p);
      } else {
        rep[p] = static_cast<std::size_t>(it - kept.begin());
      }
    }
    std::vector<std::string> labels;
    Matrix                   d(kept.size(), std::vector<Value>(kept.size()));
    for (std::size_t x = 0; x < kept.size(); ++x) {
      labels.push_back("a" + std::to_string(kept[x] / n) + "_" + std::to_string(kept[x] % n + 1));
      for (std::size_t y = 0; y < kept.size(); ++y) {
        d[x][y] = full[kept[x]][kept[y]];
      }
    }
    PointSequence seq{validate_space(m, std::move(labels), std::move(d)), {}};
    for (std::size_t k = 0; k < copies; ++k) {
      std::vector<Point> tuple;
      for (std::size_t i = 0; i < n; ++i) {
        tuple.push_back(rep[k * n + i]);
      }
      seq.tuples.push_back(std::move(tuple));
    }
    auto               spec = extract_spec(seq);
    std::vector<Value> wrap;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      wrap.push_back(spec.eps[i][i + 1]);
    }
    wrap.push_back(spec.eps[n - 1][0]);
    return {std::move(seq), std::move(spec), std::move(wrap)};
  }

  bool diag_transitive(DistanceMonoid const& m, std::vector<Value> const& tuple) {
    if (tuple.size() < 2) {
      throw Error(ErrorCode::MalformedInput, "transitivity needs a tuple of length at least 2");
    }
    return leq(m, tuple.back(), sum_of(m, tuple, 0, tuple.size() - 2));
  }

  std::optional<std::vector<Value>> arch_witness(DistanceMonoid const& m, std::size_t n) {
    std::optional<std::vector<Value>> out;
    if (m.is_table()) {
      if (auto c = arch_chain(m.table(), n)) {
        out.emplace();
        for (auto e : *c) {
          out->push_back(Value::element(e));
        }
      }
      return out;
    }
    auto const& f = *m.family();
    if (n == 0) {
      return std::vector<Value>{};
    }
    switch (f.family()) {
      case Family::MaxChain:
        if (n == 1 && !m.is_trivial()) {
          out.emplace(1, Value::rational(Rational(1)));
        }
        break;
      case Family::TruncatedIntegers:
        if (Rational(static_cast<std::int64_t>(n)) <= f.bound()) {
          out.emplace(n, Value::rational(Rational(1)));
        }
        break;
      case Family::TruncatedRationals:
        out.emplace(n, Value::rational(f.bound() / Rational(static_cast<std::int64_t>(n))));
        break;
      case Family::NonnegativeIntegers:
      case Family::NonnegativeRationals:
        out.emplace(n, Value::rational(Rational(1)));
        break;
    }
    if (out) {
      std::vector<Value> tail(out->begin() + 1, out->end());
      if (!lt(m, sum_of(m, tail, 0, tail.size()), sum_of(m, *out, 0, n))) {
        throw Error(ErrorCode::Internal, "family chain is not an archimedean witness");
      }
    }
    return out;
  }

  OrderWitness witness_order_property(DistanceMonoid const& m, Value const& r, std::size_t length) {
    m.require(r);
    if (r == m.zero()) {
      throw Error(ErrorCode::MalformedInput, "r must be positive");
    }
    Value const              rr = oplus(m, r, r);
    std::vector<std::string> labels;
    Matrix                   d(2 * length, std::vector<Value>(2 * length, r));
    for (std::size_t l = 0; l < length; ++l) {
      labels.push_back("a" + std::to_string(l) + "_1");
      labels.push_back("a" + std::to_string(l) + "_2");
    }
    for (std::size_t p = 0; p < 2 * length; ++p) {
      d[p][p] = m.zero();
    }
    for (std::size_t k = 0; k < length; ++k) {
      for (std::size_t l = 0; l < k; ++l) {
        d[2 * k][2 * l + 1] = d[2 * l + 1][2 * k] = rr;
      }
    }
    return {validate_space(m, std::move(labels), std::move(d)), lt(m, r, rr)};
  }

  RMetricSpace witness_nonsimple(DistanceMonoid const& m, Value const& r, Value const& s, NonsimpleVariant variant) {
    require_nonsimple_pair(m, r, s);
    Value const z = m.zero(), rs = oplus(m, r, s), r2 = oplus(m, r, r), r2s = oplus(m, r2, s);
    if (variant == NonsimpleVariant::FourPoint) {
      // a b1 b2 c
      return validate_space(m, {"a", "b1", "b2", "c"},
                            {{z, r, s, r}, {r, z, rs, r2}, {s, rs, z, s}, {r, r2, s, z}});
    }
    // a b1 b2 c1 c2
    return validate_space(m, {"a", "b1", "b2", "c1", "c2"},
                          {{z, r, r2s, r2, r2},
                           {r, z, rs, r, r},
                           {r2s, rs, z, s, s},
                           {r2, r, s, z, r2},
                           {r2, r, s, r2, z}});
  }

  Tp2Witness witness_tp2(DistanceMonoid const& m, Value const& r, Value const& s, std::size_t k) {
    require_nonsimple_pair(m, r, s);
    if (k < 1 || k > 6) {
      throw Error(ErrorCode::MalformedInput, "grid size must be between 1 and 6");
    }
    Value const       rs = oplus(m, r, s), r2s = oplus(m, oplus(m, r, r), s);
    std::size_t const n  = 2 * k * k;
    auto              id = [k](std::size_t i, std::size_t j, std::size_t t) { return (i * k + j) * 2 + t; };
    std::vector<std::string> labels(n);
    Matrix                   d(n, std::vector<Value>(n, m.zero()));
    for (std::size_t p = 0; p < n; ++p) {
      std::size_t const i = p / 2 / k, j = p / 2 % k, t = p % 2;
      labels[p] = "a" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(t + 1);
      for (std::size_t q = 0; q < n; ++q) {
        std::size_t const i2 = q / 2 / k, j2 = q / 2 % k, t2 = q % 2;
        if (p == q) {
          continue;
        }
        if (t == t2) {
          d[p][q] = t == 0 ? r : s;
        } else if (i != i2 || j == j2) {
          d[p][q] = rs;
        } else {
          d[p][q] = r2s;
        }
      }
    }
    Tp2Witness w{validate_space(m, std::move(labels), std::move(d)), k};
    std::vector<std::size_t> sigma(k, 0);
    while (true) {
      KatetovMap f;
      for (std::size_t row = 0; row < k; ++row) {
        f.domain.push_back(id(row, sigma[row], 0));
        f.values.push_back(r);
        f.domain.push_back(id(row, sigma[row], 1));
        f.values.push_back(s);
      }
      if (!is_katetov(w.space, f)) {
        w.paths_katetov = false;
      }
      std::size_t pos = 0;
      while (pos < k && ++sigma[pos] == k) {
        sigma[pos++] = 0;
      }
      if (pos == k) {
        break;
      }
    }
    for (std::size_t row = 0; row < k; ++row) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (i != j && !lt(m, rs, w.space.d(id(row, i, 1), id(row, j, 0)))) {
            w.rows_inconsistent = false;
          }
        }
      }
    }
    return w;
  }

  bool check_np_bound(PointSequence const& seq) {
    auto const& ts = seq.tuples;
    if (ts.size() < 2) {
      throw Error(ErrorCode::MalformedInput, "a sequence needs at least two tuples");
    }
    std::size_t const l = ts[0].size();
    for (auto const& t : ts) {
      if (t.size() != l) {
        throw Error(ErrorCode::MalformedInput, "tuples of different lengths");
      }
      for (auto p : t) {
        if (p >= seq.space.size()) {
          throw Error(ErrorCode::MalformedInput, "point index out of range", {p});
        }
      }
    }
    auto const& s = seq.space;
    for (std::size_t a = 0; a < ts.size(); ++a) {
      for (std::size_t b = a; b < ts.size(); ++b) {
        auto const& ref = a == b ? ts[0] : ts[1];
        for (std::size_t i = 0; i < l; ++i) {
          for (std::size_t j = 0; j < l; ++j) {
            if (s.d(ts[a][i], ts[b][j]) != s.d(ts[0][i], ref[j])) {
              throw Error(ErrorCode::NotIndiscerniblePattern,
                          "tuples " + std::to_string(a) + " and " + std::to_string(b) + " differ from the pattern",
                          {a, b, i, j});
            }
          }
        }
      }
    }
    auto const spec = extract_spec(seq);
    return cyclic_check(spec, spec.np->size() + 1).cyclic;
  }

  DiagonalSpec parse_diagonal_spec(std::string_view text, std::filesystem::path const& base_dir) {
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
    if (lines.size() < 2 || lines[0].size() != 2 || lines[0][0] != "monoid:" || lines[1].size() != 2
        || lines[1][0] != "length:") {
      throw Error(ErrorCode::MalformedInput, "spec file must start with 'monoid:' and 'length:' lines");
    }
    std::string const source = lines[0][1];
    std::filesystem::path p(source);
    if (!is_family_tag(source) && p.is_relative() && !base_dir.empty()) {
      p = base_dir / p;
    }
    DistanceMonoid m = is_family_tag(source) ? parse_family_tag(source) : DistanceMonoid(parse_monoid_text(read_file(p)));
    std::size_t    l = 0;
    try {
      l = std::stoul(lines[1][1]);
    } catch (std::exception const&) {
      throw Error(ErrorCode::MalformedInput, "bad length '" + lines[1][1] + "'");
    }
    if (lines.size() != l + 2) {
      throw Error(ErrorCode::MalformedInput, "expected " + std::to_string(l) + " eps rows");
    }
    DiagonalSpec spec{m, {}, std::nullopt, std::nullopt};
    for (std::size_t i = 0; i < l; ++i) {
      if (lines[i + 2].size() != l) {
        throw Error(ErrorCode::MalformedInput, "eps row of the wrong length");
      }
      std::vector<Value> row;
      for (auto const& t : lines[i + 2]) {
        row.push_back(m.parse(t));
      }
      spec.eps.push_back(std::move(row));
    }
    return spec;
  }

  nlohmann::ordered_json spec_to_json(DiagonalSpec const& spec) {
    nlohmann::ordered_json j;
    j["monoid"] = monoid_to_json(spec.monoid);
    j["length"] = spec.length();
    auto rows   = nlohmann::ordered_json::array();
    for (auto const& r : spec.eps) {
      auto row = nlohmann::ordered_json::array();
      for (auto const& v : r) {
        row.push_back(spec.monoid.format(v));
      }
      rows.push_back(row);
    }
    j["eps"] = rows;
    if (spec.np) {
      j["np"] = *spec.np;
    } else {
      j["np"] = nullptr;
    }
    return j;
  }

}  // namespace urysohn
