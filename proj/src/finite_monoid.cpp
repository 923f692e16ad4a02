#include "urysohn/finite_monoid.hpp"

#include <algorithm>
#include <set>

namespace urysohn {

  namespace {
    std::string cell(std::size_t i, std::size_t j) {
      return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  }  // namespace

  std::optional<Elem> FiniteMonoid::find_label(std::string_view name) const {
    auto it = std::find(_labels.begin(), _labels.end(), name);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<Elem>(it - _labels.begin());
  }

  std::optional<MonoidViolation> find_violation(std::size_t size, std::span<std::size_t const> t) {
    auto at = [&](std::size_t i, std::size_t j) { return t[i * size + j]; };

    for (std::size_t j = 0; j < size; ++j) {
      if (at(0, j) != j) {
        return MonoidViolation{ErrorCode::BadIdentity, {0, j}, "0 + r_" + std::to_string(j) + " != r_" + std::to_string(j)};
      }
      if (at(j, 0) != j) {
        return MonoidViolation{ErrorCode::BadIdentity, {j, 0}, "r_" + std::to_string(j) + " + 0 != r_" + std::to_string(j)};
      }
    }
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        if (at(i, j) != at(j, i)) {
          return MonoidViolation{ErrorCode::NotCommutative, {i, j}, "table" + cell(i, j) + " != table" + cell(j, i)};
        }
      }
    }
    // With identity and commutativity in place, nondecreasing columns give
    // translation invariance and table[i][j] >= max(i, j).
    for (std::size_t i = 0; i + 1 < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (at(i, j) > at(i + 1, j)) {
          return MonoidViolation{ErrorCode::NotMonotone,
                                 {i, i + 1, j},
                                 "table" + cell(i, j) + " = " + std::to_string(at(i, j)) + " > table"
                                     + cell(i + 1, j) + " = " + std::to_string(at(i + 1, j))};
        }
      }
    }
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t k = 0; k < size; ++k) {
          if (at(at(i, j), k) != at(i, at(j, k))) {
            return MonoidViolation{ErrorCode::NotAssociative,
                                   {i, j, k},
                                   "(r_" + std::to_string(i) + " + r_" + std::to_string(j) + ") + r_"
                                       + std::to_string(k) + " != r_" + std::to_string(i) + " + (r_"
                                       + std::to_string(j) + " + r_" + std::to_string(k) + ")"};
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteMonoid validate_monoid(std::size_t size, std::vector<Elem> table, std::vector<std::string> labels) {
    if (size == 0) {
      throw Error(ErrorCode::MalformedInput, "a monoid needs at least the element 0");
    }
    if (table.size() != size * size) {
      throw Error(ErrorCode::MalformedInput, "table is not " + std::to_string(size) + "x" + std::to_string(size));
    }
    if (labels.empty()) {
      for (std::size_t i = 0; i < size; ++i) {
        labels.push_back(std::to_string(i));
      }
    }
    if (labels.size() != size) {
      throw Error(ErrorCode::MalformedInput, "label count does not match table size");
    }
    std::set<std::string> seen;
    for (auto const& l : labels) {
      if (l.empty() || !seen.insert(l).second) {
        throw Error(ErrorCode::MalformedInput, "labels must be nonempty and distinct: '" + l + "'");
      }
    }
    for (std::size_t c = 0; c < table.size(); ++c) {
      if (table[c] >= size) {
        throw Error(ErrorCode::MalformedInput, "table entry out of range at " + cell(c / size, c % size), {c / size, c % size});
      }
    }
    if (auto v = find_violation(size, table)) {
      throw Error(v->code, v->message, v->witness);
    }
    return FiniteMonoid(size, std::move(table), std::move(labels));
  }

  FiniteMonoid validate_monoid(std::vector<std::vector<Elem>> const& rows, std::vector<std::string> labels) {
    std::size_t       n = rows.size();
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (auto const& row : rows) {
      if (row.size() != n) {
        throw Error(ErrorCode::MalformedInput, "table is not square");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return validate_monoid(n, std::move(flat), std::move(labels));
  }

  FiniteMonoid make_Rn(std::size_t n) {
    std::size_t       size = n + 1;
    std::vector<Elem> t(size * size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        t[i * size + j] = std::min(i + j, n);
      }
    }
    return validate_monoid(size, std::move(t), {});
  }

  FiniteMonoid make_maxchain(std::size_t k) {
    std::size_t       size = k + 1;
    std::vector<Elem> t(size * size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        t[i * size + j] = std::max(i, j);
      }
    }
    return validate_monoid(size, std::move(t), {});
  }

  FiniteMonoid make_from_reals(std::vector<Rational> const& values) {
    if (values.empty() || values.front() != Rational(0)) {
      throw Error(ErrorCode::MalformedInput, "value list must start at 0");
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (!(values[i - 1] < values[i])) {
        throw Error(ErrorCode::MalformedInput, "value list must be strictly increasing");
      }
    }
    std::size_t              size = values.size();
    std::vector<Elem>        t(size * size);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < size; ++i) {
      labels.push_back(format_rational(values[i]));
      for (std::size_t j = 0; j < size; ++j) {
        Rational s   = values[i] + values[j];
        auto     it  = std::upper_bound(values.begin(), values.end(), s);
        t[i * size + j] = static_cast<Elem>(it - values.begin()) - 1;
      }
    }
    return validate_monoid(size, std::move(t), std::move(labels));
  }

  Elem nfold(FiniteMonoid const& m, Elem a, std::uint64_t k) {
    if (k == 0) {
      return 0;
    }
    Elem x = a;
    for (std::uint64_t i = 1; i < k; ++i) {
      Elem next = m.op(x, a);
      if (next == x) {
        break;
      }
      x = next;
    }
    return x;
  }

  Elem abs_diff(FiniteMonoid const& m, Elem a, Elem b) {
    for (Elem x = 0; x < m.size(); ++x) {
      if (a <= m.op(b, x) && b <= m.op(a, x)) {
        return x;
      }
    }
    return m.top();
  }

  Elem one_third(FiniteMonoid const& m, Elem a) {
    for (Elem x = 0; x < m.size(); ++x) {
      if (a <= m.op(m.op(x, x), x)) {
        return x;
      }
    }
    return m.top();
  }

  ExtNat ceil_div(FiniteMonoid const& m, Elem r, Elem s) {
    Elem          v = s;
    std::uint64_t n = 1;
    while (r > v) {
      Elem next = m.op(v, s);
      if (next == v) {
        return ExtNat::omega();
      }
      v = next;
      ++n;
    }
    return n;
  }

  bool arch_below(FiniteMonoid const& m, Elem x, Elem t) {
    return ceil_div(m, x, t).is_finite();
  }

  std::vector<Elem> arch_class(FiniteMonoid const& m, Elem t) {
    std::vector<Elem> out;
    for (Elem x = 0; x < m.size(); ++x) {
      if (arch_below(m, x, t) && arch_below(m, t, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  ExtNat arch_local(FiniteMonoid const& m, Elem t) {
    auto   cls  = arch_class(m, t);
    ExtNat best = 1;
    for (Elem r : cls) {
      for (Elem s : cls) {
        best = std::max(best, ceil_div(m, r, s));
      }
    }
    return best;
  }

  std::size_t arch(FiniteMonoid const& m) {
    std::size_t const size = m.size();
    if (size == 1) {
      return 0;
    }
    // reach[r * size + s]: some nondecreasing chain of the current length
    // starts at r and sums to s.
    std::vector<char> reach(size * size, 0);
    for (Elem r = 0; r < size; ++r) {
      reach[r * size + r] = 1;
    }
    for (std::size_t n = 1; n <= size; ++n) {
      bool holds = true;
      for (Elem r = 0; r < size && holds; ++r) {
        for (Elem s = 0; s < size; ++s) {
          if (reach[r * size + s] && m.op(r, s) != s) {
            holds = false;
            break;
          }
        }
      }
      if (holds) {
        return n;
      }
      std::vector<char> next(size * size, 0);
      for (Elem r1 = 0; r1 < size; ++r1) {
        for (Elem s = 0; s < size; ++s) {
          if (!reach[r1 * size + s]) {
            continue;
          }
          for (Elem r = 0; r <= r1; ++r) {
            next[r * size + m.op(r, s)] = 1;
          }
        }
      }
      reach = std::move(next);
    }
    throw Error(ErrorCode::TheoremViolated, "archimedean complexity exceeds the number of nonzero elements");
  }

  std::vector<Elem> eq_set(FiniteMonoid const& m) {
    std::vector<Elem> out;
    for (Elem r = 0; r < m.size(); ++r) {
      if (m.op(r, r) == r) {
        out.push_back(r);
      }
    }
    return out;
  }

  std::vector<Elem> eq_lt_set(FiniteMonoid const& m) {
    auto out = eq_set(m);
    std::erase(out, m.top());
    return out;
  }

  std::optional<std::pair<Elem, Elem>> ultrametric_failure(FiniteMonoid const& m) {
    for (Elem r = 0; r < m.size(); ++r) {
      for (Elem s = r; s < m.size(); ++s) {
        if (m.op(r, s) != s) {
          return std::pair{r, s};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<Elem, Elem>> metric_triviality_failure(FiniteMonoid const& m) {
    for (Elem r = 1; r < m.size(); ++r) {
      for (Elem s = r; s < m.size(); ++s) {
        if (m.op(r, s) != m.top()) {
          return std::pair{r, s};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<Elem, Elem>> archimedean_failure(FiniteMonoid const& m) {
    for (Elem r = 1; r < m.size(); ++r) {
      for (Elem s = 1; s < m.size(); ++s) {
        if (ceil_div(m, s, r).is_omega()) {
          return std::pair{r, s};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<Elem, Elem>> simplicity_failure(FiniteMonoid const& m) {
    for (Elem r = 0; r < m.size(); ++r) {
      for (Elem s = r; s < m.size(); ++s) {
        if (m.op(m.op(r, r), s) != m.op(r, s)) {
          return std::pair{r, s};
        }
      }
    }
    return std::nullopt;
  }

  bool is_ultrametric(FiniteMonoid const& m) {
    return !ultrametric_failure(m);
  }
  bool is_metrically_trivial(FiniteMonoid const& m) {
    return !metric_triviality_failure(m);
  }
  bool is_archimedean(FiniteMonoid const& m) {
    return !archimedean_failure(m);
  }
  bool is_simple_monoid(FiniteMonoid const& m) {
    return !simplicity_failure(m);
  }

  Elem sum(FiniteMonoid const& m, std::span<Elem const> xs) {
    Elem s = 0;
    for (Elem x : xs) {
      s = m.op(s, x);
    }
    return s;
  }

  namespace {
    // Depth-first over nondecreasing chains in lexicographic order.
    bool search_chain(FiniteMonoid const& m, std::vector<Elem>& chain, std::size_t n) {
      if (chain.size() == n) {
        Elem tail = sum(m, std::span<Elem const>(chain).subspan(1));
        return tail < m.op(chain[0], tail);
      }
      Elem lo = chain.empty() ? 0 : chain.back();
      for (Elem x = lo; x < m.size(); ++x) {
        chain.push_back(x);
        if (search_chain(m, chain, n)) {
          return true;
        }
        chain.pop_back();
      }
      return false;
    }
  }  // namespace

  std::optional<std::vector<Elem>> arch_chain(FiniteMonoid const& m, std::size_t n) {
    if (n == 0) {
      return std::vector<Elem>{};
    }
    if (n > m.nonzero_count()) {
      // arch(m) <= |R^{>0}|
      return std::nullopt;
    }
    std::vector<Elem> chain;
    if (search_chain(m, chain, n)) {
      return chain;
    }
    return std::nullopt;
  }

}  // namespace urysohn
