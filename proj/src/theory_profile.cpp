#include "urysohn/theory_profile.hpp"

#include <algorithm>

namespace urysohn {

  namespace {
    std::string const kUrysohnFinite  = "every finite distance monoid is Urysohn";
    std::string const kUrysohnFamily  = "whitelisted Urysohn family";
    std::string const kStable         = "stable iff R is ultrametric";
    std::string const kSimple         = "simple iff r+r+s = r+s for all r <= s";
    std::string const kSupersimple    = "supersimple iff simple and eq(R) is well-ordered";
    std::string const kSuRank         = "SU-rank is the order type of eq<(R)";
    std::string const kSuperstable    = "superstable iff stable and R is well-ordered";
    std::string const kOmegaStable    = "omega-stable iff superstable (countable language, same criterion)";
    std::string const kSoRank         = "strong order rank equals arch(R)";
    std::string const kNfsop          = "every Urysohn theory is NFSOP";
    std::string const kMetricTrivial  = "r+s = max R for all positive r, s";
    std::string const kWei            = "weak elimination of imaginaries iff eq<(R) = {0}";
    std::string const kEi             = "no elimination of imaginaries unless R is trivial";
    std::string const kHeqFinite      = "R* = R for finite R, so heq(R) is empty";
    std::string const kHeqRationals   = "0+ lies in heq for truncated rationals and Q";
    std::string const kHeqNaturals    = "no infinitesimal idempotents in N*, heq(N) is empty";
    std::string const kHeqUnknown     = "heq(R) needs R*; not decided";
    std::string const kArch           = "least n with r0+...+rn = r1+...+rn on nondecreasing chains";
    std::string const kEq             = "eq(R) = {r : r+r = r}; eq<(R) drops max R";

    std::string list(DistanceMonoid const& m, std::vector<Value> const& vs) {
      std::string out = "{";
      for (std::size_t i = 0; i < vs.size(); ++i) {
        out += (i ? "," : "") + m.format(vs[i]);
      }
      return out + "}";
    }

    // A positive value r of a family with r < r + r; used by the family
    // witnesses below.
    Value small_positive(ParametricMonoid const& f) {
      if (f.family() == Family::TruncatedRationals) {
        return Value::rational(f.bound() / 3);
      }
      return Value::rational(1);
    }

    std::optional<std::pair<Value, Value>> ultrametric_pair(DistanceMonoid const& m) {
      if (auto const* f = m.family()) {
        if (is_ultrametric(m)) {
          return std::nullopt;
        }
        Value r = small_positive(*f);
        return std::pair{r, r};
      }
      if (auto w = ultrametric_failure(m.table())) {
        return std::pair{Value::element(w->first), Value::element(w->second)};
      }
      return std::nullopt;
    }

    std::optional<std::pair<Value, Value>> simplicity_pair(DistanceMonoid const& m) {
      if (auto const* f = m.family()) {
        if (is_simple_monoid(m)) {
          return std::nullopt;
        }
        Value r = small_positive(*f);
        return std::pair{r, r};
      }
      if (auto w = simplicity_failure(m.table())) {
        return std::pair{Value::element(w->first), Value::element(w->second)};
      }
      return std::nullopt;
    }

    std::optional<std::pair<Value, Value>> triviality_pair(DistanceMonoid const& m) {
      if (auto const* f = m.family()) {
        if (is_metrically_trivial(m)) {
          return std::nullopt;
        }
        Value r = small_positive(*f);
        return std::pair{r, r};
      }
      if (auto w = metric_triviality_failure(m.table())) {
        return std::pair{Value::element(w->first), Value::element(w->second)};
      }
      return std::nullopt;
    }

    std::string chain_text(DistanceMonoid const& m, std::vector<Value> const& chain) {
      std::string c;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        c += (i ? "<=" : "") + m.format(chain[i]);
      }
      Value tail = m.zero();
      for (std::size_t i = 1; i < chain.size(); ++i) {
        tail = oplus(m, tail, chain[i]);
      }
      Value full = oplus(m, chain[0], tail);
      return "chain " + c + ": " + m.format(tail) + " < " + m.format(full);
    }

    void check_coherence(TheoryProfile const& p) {
      auto fail = [&](std::string const& what) {
        throw Error(ErrorCode::TheoremViolated, p.monoid.describe() + ": " + what);
      };
      if (p.stable && !p.simple) {
        fail("stable but not simple");
      }
      if (p.stable != (p.so_rank <= ExtNat(1))) {
        fail("stability disagrees with strong order rank <= 1");
      }
      if (p.simple && !(p.so_rank <= ExtNat(2))) {
        fail("simple with strong order rank above 2");
      }
      if (p.supersimple && !p.simple) {
        fail("supersimple but not simple");
      }
      if (p.superstable != (p.stable && p.supersimple)) {
        fail("superstable disagrees with stable and supersimple");
      }
      if (!p.monoid.is_trivial() && p.metrically_trivial != (p.simple && p.su_rank == 1u)) {
        fail("metric triviality disagrees with simple of SU-rank 1");
      }
    }
  }  // namespace

  std::uint64_t su_rank(DistanceMonoid const& m) {
    if (!is_simple_monoid(m) || !is_eq_well_ordered(m)) {
      throw Error(ErrorCode::NotSupersimple, m.describe() + " is not supersimple");
    }
    return eq_lt_set(m).size();
  }

  TheoryProfile classify(DistanceMonoid const& m) {
    TheoryProfile p(m);
    auto const*   f = m.family();
    auto&         c = p.citations;

    p.is_urysohn     = true;
    c["is_urysohn"]  = f ? kUrysohnFamily : kUrysohnFinite;
    p.stable         = is_ultrametric(m);
    c["stable"]      = kStable;
    p.simple         = is_simple_monoid(m);
    c["simple"]      = kSimple;
    p.supersimple    = p.simple && is_eq_well_ordered(m);
    c["supersimple"] = kSupersimple;
    if (p.supersimple) {
      p.su_rank = su_rank(m);
    }
    c["su_rank"]      = kSuRank;
    p.superstable     = p.stable && is_well_ordered(m);
    c["superstable"]  = kSuperstable;
    p.omega_stable    = p.superstable;
    c["omega_stable"] = kOmegaStable;
    p.arch            = arch(m);
    c["arch"]         = kArch;
    p.so_rank         = p.arch;
    c["so_rank"]      = kSoRank;
    p.nfsop           = true;
    c["nfsop"]        = kNfsop;
    p.metrically_trivial    = is_metrically_trivial(m);
    c["metrically_trivial"] = kMetricTrivial;
    p.eq              = eq_set(m);
    p.eq_lt           = eq_lt_set(m);
    c["eq"]           = kEq;
    c["eq_lt"]        = kEq;
    p.ei              = m.is_trivial();
    c["ei"]           = kEi;
    p.wei             = p.ei || p.eq_lt == std::vector<Value>{m.zero()};
    c["wei"]          = kWei;

    if (f == nullptr || f->is_finite()) {
      p.heq_nonempty = Tri::False;
      c["heq_nonempty"] = kHeqFinite;
    } else if (f->family() == Family::TruncatedRationals || f->family() == Family::NonnegativeRationals) {
      p.heq_nonempty    = Tri::True;
      c["heq_nonempty"] = kHeqRationals;
    } else if (f->family() == Family::NonnegativeIntegers) {
      p.heq_nonempty    = Tri::False;
      c["heq_nonempty"] = kHeqNaturals;
    } else {
      p.heq_nonempty    = Tri::Unknown;
      c["heq_nonempty"] = kHeqUnknown;
    }
    check_coherence(p);
    return p;
  }

  std::vector<std::string> const& profile_fields() {
    static std::vector<std::string> const fields{
        "is_urysohn", "stable", "simple",  "supersimple", "su_rank", "superstable", "omega_stable", "so_rank",
        "nfsop",      "metrically_trivial", "wei", "ei", "heq_nonempty", "arch", "eq", "eq_lt"};
    return fields;
  }

  Explanation explain(TheoryProfile const& p, std::string_view field) {
    auto const& m    = p.monoid;
    auto        json = profile_to_json(p);
    std::string key(field);
    if (std::find(profile_fields().begin(), profile_fields().end(), key) == profile_fields().end()) {
      throw Error(ErrorCode::MalformedInput, "unknown profile field '" + key + "'");
    }
    Explanation e{key, json[key].dump(), p.citations.at(key), ""};
    if (json[key].is_string()) {
      e.value = json[key].get<std::string>();
    }

    auto pair_text = [&](std::pair<Value, Value> const& rs, Value const& lhs, Value const& rhs, std::string const& rel) {
      return "(" + m.format(rs.first) + "," + m.format(rs.second) + "): " + m.format(lhs) + " " + rel + " "
             + m.format(rhs);
    };

    if (key == "stable" || key == "superstable" || key == "omega_stable") {
      if (auto rs = ultrametric_pair(m)) {
        e.witness = pair_text(*rs, oplus(m, rs->first, rs->second), max_of(m, rs->first, rs->second), "!=");
      } else if (key != "stable" && !is_well_ordered(m)) {
        e.witness = "R has no least positive element";
      } else if (key == "stable") {
        e.witness = "ultrametric";
      }
    } else if (key == "simple" || key == "supersimple" || key == "su_rank") {
      if (auto rs = simplicity_pair(m)) {
        Value rs_sum = oplus(m, rs->first, rs->second);
        e.witness    = pair_text(*rs, rs_sum, oplus(m, rs->first, rs_sum), "<");
      } else if (key == "su_rank") {
        e.witness = "eq<(R) = " + list(m, p.eq_lt);
      }
    } else if (key == "metrically_trivial") {
      if (auto rs = triviality_pair(m)) {
        e.witness = pair_text(*rs, oplus(m, rs->first, rs->second), m.top(), "<");
      }
    } else if (key == "so_rank" || key == "arch") {
      if (p.arch.is_finite() && p.arch.value() > 0) {
        std::vector<Value> chain;
        if (m.is_table()) {
          for (Elem x : *arch_chain(m.table(), p.arch.value())) {
            chain.push_back(Value::element(x));
          }
        } else {
          chain.assign(p.arch.value(), small_positive(*m.family()));
        }
        e.witness = chain_text(m, chain);
      } else if (p.arch.is_omega()) {
        e.witness = "for every n the constant chain of a small enough positive r has r+...+r strictly increasing";
      }
    } else if (key == "wei" || key == "eq_lt") {
      e.witness = "eq<(R) = " + list(m, p.eq_lt);
    } else if (key == "eq") {
      e.witness = "eq(R) = " + list(m, p.eq);
    } else if (key == "ei") {
      e.witness = m.is_trivial() ? "single-point model" : "";
    }
    return e;
  }

  nlohmann::ordered_json profile_to_json(TheoryProfile const& p) {
    auto ext = [](ExtNat const& x) -> nlohmann::ordered_json {
      if (x.is_omega()) {
        return "omega";
      }
      return x.value();
    };
    auto values = [&](std::vector<Value> const& vs) {
      auto arr = nlohmann::ordered_json::array();
      for (auto const& v : vs) {
        arr.push_back(p.monoid.format(v));
      }
      return arr;
    };
    nlohmann::ordered_json j;
    j["monoid"]       = p.monoid.describe();
    j["is_urysohn"]   = p.is_urysohn;
    j["stable"]       = p.stable;
    j["simple"]       = p.simple;
    j["supersimple"]  = p.supersimple;
    j["su_rank"]      = p.su_rank ? nlohmann::ordered_json(*p.su_rank) : nlohmann::ordered_json(nullptr);
    j["superstable"]  = p.superstable;
    j["omega_stable"] = p.omega_stable;
    j["so_rank"]      = ext(p.so_rank);
    j["nfsop"]        = p.nfsop;
    j["metrically_trivial"] = p.metrically_trivial;
    j["wei"]          = p.wei;
    j["ei"]           = p.ei;
    j["heq_nonempty"] = p.heq_nonempty == Tri::Unknown ? nlohmann::ordered_json("unknown")
                                                       : nlohmann::ordered_json(p.heq_nonempty == Tri::True);
    j["arch"]         = ext(p.arch);
    j["eq"]           = values(p.eq);
    j["eq_lt"]        = values(p.eq_lt);
    auto cites        = nlohmann::ordered_json::object();
    for (auto const& f : profile_fields()) {
      cites[f] = p.citations.at(f);
    }
    j["citations"] = cites;
    return j;
  }

  std::string profile_to_text(TheoryProfile const& p) {
    auto        j   = profile_to_json(p);
    std::string out = "monoid: " + p.monoid.describe() + "\n";
    for (auto const& f : profile_fields()) {
      std::string v = j[f].is_string() ? j[f].get<std::string>() : j[f].dump();
      out += f + ": " + v + "  [" + p.citations.at(f) + "]\n";
    }
    return out;
  }

}  // namespace urysohn
