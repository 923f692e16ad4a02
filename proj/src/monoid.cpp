#include "urysohn/monoid.hpp"

#include <algorithm>

namespace urysohn {

  DistanceMonoid::DistanceMonoid(FiniteMonoid m)
      : _rep(std::make_shared<std::variant<FiniteMonoid, ParametricMonoid> const>(std::move(m))) {}

  DistanceMonoid::DistanceMonoid(ParametricMonoid p)
      : _rep(std::make_shared<std::variant<FiniteMonoid, ParametricMonoid> const>(std::move(p))) {}

  FiniteMonoid const& DistanceMonoid::table() const {
    if (auto const* t = std::get_if<FiniteMonoid>(_rep.get())) {
      return *t;
    }
    throw Error(ErrorCode::UnsupportedFamily, "operation needs a finite table, got " + describe());
  }

  bool DistanceMonoid::has_max() const noexcept {
    auto const* f = family();
    return f == nullptr || f->has_max();
  }

  bool DistanceMonoid::is_finite() const noexcept {
    auto const* f = family();
    return f == nullptr || f->is_finite();
  }

  bool DistanceMonoid::is_trivial() const noexcept {
    if (auto const* f = family()) {
      return f->has_max() && f->bound() == Rational(0);
    }
    return std::get<FiniteMonoid>(*_rep).is_trivial();
  }

  DistanceValue DistanceMonoid::zero() const {
    return is_table() ? Value::element(0) : Value::rational(0);
  }

  DistanceValue DistanceMonoid::top() const {
    if (auto const* f = family()) {
      return f->has_max() ? Value::rational(f->bound()) : Value::infinity();
    }
    return Value::element(std::get<FiniteMonoid>(*_rep).top());
  }

  bool DistanceMonoid::contains(DistanceValue const& v) const {
    if (auto const* f = family()) {
      return f->contains(v);
    }
    return v.is_element() && v.index() < std::get<FiniteMonoid>(*_rep).size();
  }

  void DistanceMonoid::require(DistanceValue const& v) const {
    if (!contains(v)) {
      throw Error(ErrorCode::MixedCarriers, "value " + v.debug_string() + " does not belong to " + describe());
    }
  }

  std::vector<DistanceValue> DistanceMonoid::elements() const {
    std::vector<Value> out;
    if (auto const* f = family()) {
      if (!f->is_finite()) {
        throw Error(ErrorCode::UnsupportedFamily, describe() + " has infinitely many elements");
      }
      for (std::int64_t i = 0; i <= f->bound().numerator(); ++i) {
        out.push_back(Value::rational(i));
      }
      return out;
    }
    for (std::size_t i = 0; i < std::get<FiniteMonoid>(*_rep).size(); ++i) {
      out.push_back(Value::element(i));
    }
    return out;
  }

  std::vector<DistanceValue> DistanceMonoid::positive_elements() const {
    auto out = elements();
    out.erase(out.begin());
    return out;
  }

  std::string DistanceMonoid::format(DistanceValue const& v) const {
    require(v);
    if (is_table()) {
      return std::get<FiniteMonoid>(*_rep).label(v.index());
    }
    return v.is_infinity() ? std::string("inf") : format_rational(v.value());
  }

  DistanceValue DistanceMonoid::parse(std::string_view text) const {
    if (is_table()) {
      auto idx = std::get<FiniteMonoid>(*_rep).find_label(text);
      if (!idx) {
        throw Error(ErrorCode::MalformedInput, "unknown element label '" + std::string(text) + "'");
      }
      return Value::element(*idx);
    }
    Value v = text == "inf" ? Value::infinity() : Value::rational(parse_rational(text));
    if (!contains(v)) {
      throw Error(ErrorCode::MalformedInput, "'" + std::string(text) + "' is not an element of " + describe());
    }
    return v;
  }

  std::string DistanceMonoid::describe() const {
    if (auto const* f = family()) {
      return f->tag();
    }
    return "finite:" + std::to_string(std::get<FiniteMonoid>(*_rep).size());
  }

  bool DistanceMonoid::operator==(DistanceMonoid const& that) const {
    return _rep == that._rep || *_rep == *that._rep;
  }

  //////////////////////////////////////////////////////////////////////////
  // Arithmetic
  //////////////////////////////////////////////////////////////////////////

  namespace {
    Rational ceil_rational(Rational const& q) {
      std::int64_t n = q.numerator();
      std::int64_t d = q.denominator();
      return Rational(n / d + (n % d != 0 ? 1 : 0));
    }

    std::uint64_t ceil_ratio(Rational const& r, Rational const& s) {
      return static_cast<std::uint64_t>(ceil_rational(r / s).numerator());
    }

    // Both values checked against the carrier; returns the family or nullptr.
    ParametricMonoid const* checked(DistanceMonoid const& m, Value const& a) {
      m.require(a);
      return m.family();
    }

    ParametricMonoid const* checked(DistanceMonoid const& m, Value const& a, Value const& b) {
      m.require(a);
      m.require(b);
      return m.family();
    }

    Value truncate(ParametricMonoid const& f, Rational q) {
      if (f.has_max() && q > f.bound()) {
        return Value::rational(f.bound());
      }
      return Value::rational(q);
    }
  }  // namespace

  int compare(DistanceMonoid const& m, Value const& a, Value const& b) {
    if (checked(m, a, b) == nullptr) {
      return a.index() < b.index() ? -1 : (a.index() > b.index() ? 1 : 0);
    }
    if (a.is_infinity() || b.is_infinity()) {
      return static_cast<int>(a.is_infinity()) - static_cast<int>(b.is_infinity());
    }
    return a.value() < b.value() ? -1 : (b.value() < a.value() ? 1 : 0);
  }

  bool leq(DistanceMonoid const& m, Value const& a, Value const& b) {
    return compare(m, a, b) <= 0;
  }

  bool lt(DistanceMonoid const& m, Value const& a, Value const& b) {
    return compare(m, a, b) < 0;
  }

  Value max_of(DistanceMonoid const& m, Value const& a, Value const& b) {
    return leq(m, a, b) ? b : a;
  }

  Value min_of(DistanceMonoid const& m, Value const& a, Value const& b) {
    return leq(m, a, b) ? a : b;
  }

  Value oplus(DistanceMonoid const& m, Value const& a, Value const& b) {
    auto const* f = checked(m, a, b);
    if (f == nullptr) {
      return Value::element(m.table().op(a.index(), b.index()));
    }
    if (!f->is_additive()) {
      return max_of(m, a, b);
    }
    if (a.is_infinity() || b.is_infinity()) {
      return Value::infinity();
    }
    return truncate(*f, a.value() + b.value());
  }

  Value nfold(DistanceMonoid const& m, Value const& a, std::uint64_t k) {
    auto const* f = checked(m, a);
    if (f == nullptr) {
      return Value::element(nfold(m.table(), a.index(), k));
    }
    if (k == 0) {
      return m.zero();
    }
    if (!f->is_additive() || a.is_infinity()) {
      return a;
    }
    if (f->has_max() && a.value() > Rational(0)) {
      k = std::min(k, ceil_ratio(f->bound(), a.value()));
    }
    return truncate(*f, a.value() * Rational(static_cast<std::int64_t>(k)));
  }

  Value abs_diff(DistanceMonoid const& m, Value const& a, Value const& b) {
    auto const* f = checked(m, a, b);
    if (f == nullptr) {
      return Value::element(abs_diff(m.table(), a.index(), b.index()));
    }
    if (a == b) {
      return m.zero();
    }
    if (!f->is_additive()) {
      return max_of(m, a, b);
    }
    if (a.is_infinity() || b.is_infinity()) {
      return Value::infinity();
    }
    return Value::rational(a.value() < b.value() ? b.value() - a.value() : a.value() - b.value());
  }

  Value one_third(DistanceMonoid const& m, Value const& a) {
    auto const* f = checked(m, a);
    if (f == nullptr) {
      return Value::element(one_third(m.table(), a.index()));
    }
    if (!f->is_additive() || a.is_infinity()) {
      return a;
    }
    Rational third = a.value() / 3;
    return Value::rational(f->integral() ? ceil_rational(third) : third);
  }

  ExtNat ceil_div(DistanceMonoid const& m, Value const& r, Value const& s) {
    auto const* f = checked(m, r, s);
    if (f == nullptr) {
      return ceil_div(m.table(), r.index(), s.index());
    }
    if (leq(m, r, s)) {
      return 1;
    }
    if (!f->is_additive() || s.value() == Rational(0) || r.is_infinity()) {
      return ExtNat::omega();
    }
    return ceil_ratio(r.value(), s.value());
  }

  std::vector<Value> arch_class(DistanceMonoid const& m, Value const& t) {
    auto const* f = checked(m, t);
    if (f == nullptr) {
      std::vector<Value> out;
      for (Elem x : arch_class(m.table(), t.index())) {
        out.push_back(Value::element(x));
      }
      return out;
    }
    if (t == m.zero() || !f->is_additive()) {
      return {t};
    }
    if (!f->is_finite()) {
      throw Error(ErrorCode::UnsupportedFamily, "archimedean classes of " + f->tag() + " are infinite");
    }
    return m.positive_elements();
  }

  ExtNat arch_local(DistanceMonoid const& m, Value const& t) {
    auto const* f = checked(m, t);
    if (f == nullptr) {
      return arch_local(m.table(), t.index());
    }
    if (t == m.zero() || t.is_infinity() || !f->is_additive()) {
      return 1;
    }
    // [t] is all positive reals of the family: sup over ceil(r/s).
    if (f->family() == Family::TruncatedIntegers) {
      return static_cast<std::uint64_t>(f->bound().numerator());
    }
    return ExtNat::omega();
  }

  ExtNat arch(DistanceMonoid const& m) {
    auto const* f = m.family();
    if (f == nullptr) {
      return arch(m.table());
    }
    if (m.is_trivial()) {
      return 0;
    }
    if (!f->is_additive()) {
      return 1;
    }
    // Archimedean families: ceil(sup R / inf R^{>0}), omega when the
    // infimum is not attained or the supremum is not.
    switch (f->family()) {
      case Family::TruncatedIntegers:
        return static_cast<std::uint64_t>(f->bound().numerator());
      default:
        return ExtNat::omega();
    }
  }

  std::vector<Value> eq_set(DistanceMonoid const& m) {
    auto const* f = m.family();
    if (f == nullptr) {
      std::vector<Value> out;
      for (Elem x : eq_set(m.table())) {
        out.push_back(Value::element(x));
      }
      return out;
    }
    if (!f->is_additive()) {
      return m.elements();
    }
    if (f->has_max() && f->bound() != Rational(0)) {
      return {m.zero(), m.top()};
    }
    return {m.zero()};
  }

  std::vector<Value> eq_lt_set(DistanceMonoid const& m) {
    auto out = eq_set(m);
    if (m.has_max()) {
      std::erase(out, m.top());
    }
    return out;
  }

  bool is_ultrametric(DistanceMonoid const& m) {
    auto const* f = m.family();
    if (f == nullptr) {
      return is_ultrametric(m.table());
    }
    if (!f->is_additive()) {
      return true;
    }
    return f->family() == Family::TruncatedIntegers && f->bound() <= Rational(1);
  }

  bool is_metrically_trivial(DistanceMonoid const& m) {
    auto const* f = m.family();
    if (f == nullptr) {
      return is_metrically_trivial(m.table());
    }
    if (!f->has_max()) {
      return false;
    }
    if (!f->is_additive()) {
      return f->bound() <= Rational(1);
    }
    return f->family() == Family::TruncatedIntegers && f->bound() <= Rational(2);
  }

  bool is_archimedean(DistanceMonoid const& m) {
    auto const* f = m.family();
    if (f == nullptr) {
      return is_archimedean(m.table());
    }
    return f->is_additive() || f->bound() <= Rational(1);
  }

  bool is_simple_monoid(DistanceMonoid const& m) {
    auto const* f = m.family();
    if (f == nullptr) {
      return is_simple_monoid(m.table());
    }
    if (!f->is_additive()) {
      return true;
    }
    return f->family() == Family::TruncatedIntegers && f->bound() <= Rational(2);
  }

  bool is_well_ordered(DistanceMonoid const& m) {
    auto const* f = m.family();
    return f == nullptr || f->integral();
  }

  bool is_eq_well_ordered(DistanceMonoid const& m) {
    // eq is finite for tables and for every supported family.
    (void)m;
    return true;
  }

  FiniteMonoid grid_restrict(ParametricMonoid const& family, std::uint64_t denominator, std::optional<Rational> cap) {
    if (denominator == 0) {
      throw Error(ErrorCode::MalformedInput, "grid denominator must be positive");
    }
    if (!cap) {
      if (!family.has_max()) {
        throw Error(ErrorCode::GridNotClosed, family.tag() + " has no maximum; a cap is required");
      }
      cap = family.bound();
    }
    auto const D = static_cast<std::int64_t>(denominator);
    if (*cap < Rational(0) || (*cap * D).denominator() != 1) {
      throw Error(ErrorCode::GridNotClosed, "cap " + format_rational(*cap) + " is not on the grid");
    }
    DistanceMonoid     m(family);
    std::vector<Value> grid;
    for (std::int64_t k = 0; Rational(k, D) <= *cap; ++k) {
      Value v = Value::rational(Rational(k, D));
      if (m.contains(v)) {
        grid.push_back(v);
      }
    }
    if (grid.empty() || !(grid.back() == Value::rational(*cap))) {
      throw Error(ErrorCode::GridNotClosed, "cap " + format_rational(*cap) + " is not an element of " + family.tag());
    }
    std::size_t const        size = grid.size();
    std::vector<Elem>        table(size * size);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < size; ++i) {
      labels.push_back(format_rational(grid[i].value()));
      for (std::size_t j = 0; j < size; ++j) {
        Value s  = oplus(m, grid[i], grid[j]);
        auto  it = std::find(grid.begin(), grid.end(), s);
        if (it == grid.end()) {
          throw Error(ErrorCode::GridNotClosed,
                      labels[i] + " + " + format_rational(grid[j].value()) + " = " + m.format(s) + " leaves the grid",
                      {i, j});
        }
        table[i * size + j] = static_cast<Elem>(it - grid.begin());
      }
    }
    return validate_monoid(size, std::move(table), std::move(labels));
  }

}  // namespace urysohn
