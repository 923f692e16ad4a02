#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "urysohn/distance_value.hpp"
#include "urysohn/errors.hpp"
#include "urysohn/ext_nat.hpp"

namespace urysohn {

  // A finite distance monoid 0 = r_0 < r_1 < ... < r_n. Elements are their
  // rank in the order, so order-isomorphic monoids have equal tables and no
  // isomorphism bookkeeping is ever needed. Instances only exist validated.
  class FiniteMonoid {
   public:
    using Elem = std::size_t;

    std::size_t size() const noexcept {
      return _size;
    }
    std::size_t nonzero_count() const noexcept {
      return _size - 1;
    }
    Elem top() const noexcept {
      return _size - 1;
    }
    bool is_trivial() const noexcept {
      return _size == 1;
    }

    Elem op(Elem a, Elem b) const noexcept {
      return _table[a * _size + b];
    }

    std::span<Elem const> table() const noexcept {
      return _table;
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string const& label(Elem a) const {
      return _labels.at(a);
    }
    std::optional<Elem> find_label(std::string_view name) const;

    // Order-isomorphism: tables equal, labels ignored.
    bool same_table(FiniteMonoid const& that) const noexcept {
      return _table == that._table;
    }

    bool operator==(FiniteMonoid const&) const = default;

   private:
    friend FiniteMonoid validate_monoid(std::size_t, std::vector<Elem>, std::vector<std::string>);

    FiniteMonoid(std::size_t size, std::vector<Elem> table, std::vector<std::string> labels)
        : _size(size), _table(std::move(table)), _labels(std::move(labels)) {}

    std::size_t              _size;
    std::vector<Elem>        _table;
    std::vector<std::string> _labels;
  };

  // The first failed axiom of a candidate table, with the witnessing cells.
  struct MonoidViolation {
    ErrorCode                 code;
    std::vector<std::size_t>  witness;
    std::string               message;
  };

  // Checks, in order: identity row/column, commutativity, monotonicity of the
  // operation (table[i][j] >= max(i, j) and nondecreasing along rows), and
  // associativity. Precondition: flat row-major table of size*size in-range
  // entries.
  std::optional<MonoidViolation> find_violation(std::size_t size, std::span<std::size_t const> table);

  // Throws Error(MalformedInput) for shape problems and Error(<axiom>) with
  // the witnessing cells for the first violated axiom.
  FiniteMonoid validate_monoid(std::size_t                    size,
                               std::vector<FiniteMonoid::Elem> table,
                               std::vector<std::string>        labels);
  FiniteMonoid validate_monoid(std::vector<std::vector<FiniteMonoid::Elem>> const& rows,
                               std::vector<std::string>                          labels);

  // {0, 1, ..., n} with addition truncated at n.
  FiniteMonoid make_Rn(std::size_t n);
  // {0, 1, ..., k} with max.
  FiniteMonoid make_maxchain(std::size_t k);
  // A finite set of nonnegative rationals starting at 0 with
  // r + s := sup{x : x <= r + s}. Associativity is validated, not assumed.
  FiniteMonoid make_from_reals(std::vector<Rational> const& values);

  //////////////////////////////////////////////////////////////////////////
  // Element arithmetic
  //////////////////////////////////////////////////////////////////////////

  using Elem = FiniteMonoid::Elem;

  Elem nfold(FiniteMonoid const& m, Elem a, std::uint64_t k);
  // Least x with a <= b + x and b <= a + x.
  Elem abs_diff(FiniteMonoid const& m, Elem a, Elem b);
  // Least x with a <= 3x.
  Elem one_third(FiniteMonoid const& m, Elem a);
  // Least n >= 1 with r <= n s, or omega.
  ExtNat ceil_div(FiniteMonoid const& m, Elem r, Elem s);
  bool   arch_below(FiniteMonoid const& m, Elem x, Elem t);  // x ⪯ t
  std::vector<Elem> arch_class(FiniteMonoid const& m, Elem t);
  ExtNat            arch_local(FiniteMonoid const& m, Elem t);
  std::size_t       arch(FiniteMonoid const& m);

  std::vector<Elem> eq_set(FiniteMonoid const& m);
  std::vector<Elem> eq_lt_set(FiniteMonoid const& m);

  bool is_ultrametric(FiniteMonoid const& m);
  bool is_metrically_trivial(FiniteMonoid const& m);
  bool is_archimedean(FiniteMonoid const& m);
  // r <= s implies r + r + s = r + s.
  bool is_simple_monoid(FiniteMonoid const& m);

  // Witnesses for the negations of the predicates above, in lexicographic
  // order of the returned pair.
  std::optional<std::pair<Elem, Elem>> ultrametric_failure(FiniteMonoid const& m);
  std::optional<std::pair<Elem, Elem>> metric_triviality_failure(FiniteMonoid const& m);
  std::optional<std::pair<Elem, Elem>> archimedean_failure(FiniteMonoid const& m);
  std::optional<std::pair<Elem, Elem>> simplicity_failure(FiniteMonoid const& m);

  // Lexicographically least nondecreasing chain r_1 <= ... <= r_n with
  // r_2 + ... + r_n < r_1 + ... + r_n; nullopt exactly when arch(m) < n.
  std::optional<std::vector<Elem>> arch_chain(FiniteMonoid const& m, std::size_t n);

  // Sum of a sequence of elements (0 for the empty sequence).
  Elem sum(FiniteMonoid const& m, std::span<Elem const> xs);

}  // namespace urysohn
