#include "urysohn/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "urysohn/errors.hpp"
#include "urysohn/monoid.hpp"

namespace urysohn {

  namespace {

    struct Search {
      std::size_t                                 size;
      std::vector<std::size_t>                    t;
      std::vector<char>                           known;
      std::vector<std::pair<std::size_t, std::size_t>> cells;

      explicit Search(std::size_t n) : size(n + 1), t(size * size, 0), known(size * size, 0) {
        for (std::size_t j = 0; j < size; ++j) {
          set(0, j, j);
        }
        for (std::size_t i = 1; i < size; ++i) {
          for (std::size_t j = i; j < size; ++j) {
            cells.emplace_back(i, j);
          }
        }
      }

      void set(std::size_t i, std::size_t j, std::size_t v) {
        t[i * size + j] = t[j * size + i] = v;
        known[i * size + j] = known[j * size + i] = 1;
      }
      void unset(std::size_t i, std::size_t j) {
        known[i * size + j] = known[j * size + i] = 0;
      }
      bool has(std::size_t i, std::size_t j) const {
        return known[i * size + j];
      }
      std::size_t at(std::size_t i, std::size_t j) const {
        return t[i * size + j];
      }

      // (a+b)+c = a+(b+c) wherever both sides are already determined.
      bool associative_so_far() const {
        for (std::size_t a = 1; a < size; ++a) {
          for (std::size_t b = 1; b < size; ++b) {
            if (!has(a, b)) {
              continue;
            }
            std::size_t const x = at(a, b);
            for (std::size_t c = 1; c < size; ++c) {
              if (!has(b, c)) {
                continue;
              }
              std::size_t const y = at(b, c);
              if (has(x, c) && has(a, y) && at(x, c) != at(a, y)) {
                return false;
              }
            }
          }
        }
        return true;
      }

      std::size_t lower_bound(std::size_t i, std::size_t j) const {
        return std::max({j, at(i, j - 1), at(i - 1, j)});
      }

      // Fills cells [from, to), calling `leaf` on each consistent state.
      template <class F>
      void fill(std::size_t from, std::size_t to, F&& leaf) {
        if (from == to) {
          leaf(*this);
          return;
        }
        auto const [i, j] = cells[from];
        for (std::size_t v = lower_bound(i, j); v < size; ++v) {
          set(i, j, v);
          if (associative_so_far()) {
            fill(from + 1, to, leaf);
          }
        }
        unset(i, j);
      }
    };

    std::vector<std::string> rank_labels(std::size_t size) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < size; ++i) {
        out.push_back(std::to_string(i));
      }
      return out;
    }

  }  // namespace

  std::vector<FiniteMonoid> enumerate_monoids(std::size_t n, std::size_t jobs) {
    Search root(n);
    // The first row (cells (1,1)..(1,n)) splits the tree into subtrees.
    std::size_t const        split = std::min(n, root.cells.size());
    std::vector<Search>      prefixes;
    root.fill(0, split, [&](Search const& s) { prefixes.push_back(s); });

    std::vector<std::vector<FiniteMonoid>> parts(prefixes.size());
    std::atomic<std::size_t>               next{0};
    auto                                   worker = [&] {
      for (std::size_t p; (p = next++) < prefixes.size();) {
        Search s = prefixes[p];
        s.fill(split, s.cells.size(), [&](Search const& leaf) {
          parts[p].push_back(validate_monoid(leaf.size, leaf.t, rank_labels(leaf.size)));
        });
      }
    };
    std::size_t const        threads = std::max<std::size_t>(1, std::min(jobs, prefixes.size()));
    std::vector<std::thread> pool;
    for (std::size_t k = 1; k < threads; ++k) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
      th.join();
    }
    std::vector<FiniteMonoid> out;
    for (auto& part : parts) {
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
  }

  Census census(std::size_t n, std::size_t jobs) {
    Census c;
    c.n = n;
    for (auto& m : enumerate_monoids(n, jobs)) {
      auto p = classify(DistanceMonoid(m));
      c.by_arch[p.arch.to_string()]++;
      c.by_class[p.stable ? "stable" : p.simple ? "simple" : "nsop"]++;
      c.rows.push_back({std::move(m), std::move(p)});
    }
    return c;
  }

  std::string table_string(FiniteMonoid const& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0) {
        out += ';';
      }
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (j > 0) {
          out += ' ';
        }
        out += std::to_string(m.op(i, j));
      }
    }
    return out;
  }

  std::string census_csv(Census const& c) {
    std::ostringstream out;
    out << "index,table,arch,eq_lt_size,stable,simple,supersimple,superstable,so_rank,su_rank,metrically_trivial,wei\n";
    auto b = [](bool x) { return x ? "true" : "false"; };
    for (std::size_t k = 0; k < c.rows.size(); ++k) {
      auto const& p = c.rows[k].profile;
      out << k << ',' << table_string(c.rows[k].monoid) << ',' << p.arch.to_string() << ',' << p.eq_lt.size() << ','
          << b(p.stable) << ',' << b(p.simple) << ',' << b(p.supersimple) << ',' << b(p.superstable) << ','
          << p.so_rank.to_string() << ',' << (p.su_rank ? std::to_string(*p.su_rank) : "") << ','
          << b(p.metrically_trivial) << ',' << b(p.wei) << '\n';
    }
    return out.str();
  }

  nlohmann::ordered_json census_json(Census const& c) {
    nlohmann::ordered_json j;
    j["n"]        = c.n;
    j["count"]    = c.rows.size();
    j["by_arch"]  = c.by_arch;
    j["by_class"] = c.by_class;
    auto rows     = nlohmann::ordered_json::array();
    for (auto const& r : c.rows) {
      rows.push_back({{"table", table_string(r.monoid)}, {"profile", profile_to_json(r.profile)}});
    }
    j["rows"] = rows;
    return j;
  }

  VerifyReport verify_unique(std::size_t n, std::vector<FiniteMonoid> const& all) {
    if (n == 0) {
      throw Error(ErrorCode::MalformedInput, "uniqueness is stated for n >= 1");
    }
    std::vector<FiniteMonoid const*> ones, tops;
    for (auto const& m : all) {
      auto const a = arch(m);
      if (a == 1) {
        ones.push_back(&m);
      }
      if (a == n) {
        tops.push_back(&m);
      }
    }
    if (ones.size() != 1 || !ones[0]->same_table(make_maxchain(n))) {
      throw Error(ErrorCode::TheoremViolated,
                  std::to_string(ones.size()) + " tables of size " + std::to_string(n) + " have arch 1");
    }
    if (tops.size() != 1 || !tops[0]->same_table(make_Rn(n))) {
      throw Error(ErrorCode::TheoremViolated,
                  std::to_string(tops.size()) + " tables of size " + std::to_string(n) + " have arch " + std::to_string(n));
    }
    return {"arch 1 only for max on {0..n}; arch n only for truncated addition", all.size()};
  }

  VerifyReport verify_classsize(std::size_t n, std::vector<FiniteMonoid> const& all) {
    for (std::size_t k = 0; k < all.size(); ++k) {
      auto const& m = all[k];
      if (m.nonzero_count() != n) {
        throw Error(ErrorCode::MalformedInput, "table of the wrong size", {k});
      }
      auto const  a       = arch(m);
      std::size_t largest = 0;
      for (Elem t = 1; t < m.size(); ++t) {
        largest = std::max(largest, arch_class(m, t).size());
      }
      if (largest < a) {
        throw Error(ErrorCode::TheoremViolated,
                    "table " + table_string(m) + " has arch " + std::to_string(a) + " but largest class "
                        + std::to_string(largest),
                    {k});
      }
    }
    return {"some archimedean class has at least arch elements", all.size()};
  }

}  // namespace urysohn
