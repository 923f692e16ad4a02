#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <sstream>

#include "urysohn/enumeration.hpp"
#include "urysohn/errors.hpp"
#include "urysohn/independence.hpp"
#include "urysohn/metric_space.hpp"
#include "urysohn/monoid_io.hpp"
#include "urysohn/sequences.hpp"
#include "urysohn/theory_profile.hpp"

namespace urysohn::cli {

  namespace {

    using Json = nlohmann::ordered_json;

    struct Options {
      std::string              format = "text";
      std::string              out_path;
      std::uint64_t            seed = 0;
      std::size_t              jobs = 1;
      std::string              input;
      std::string              input2;
      std::string              family;
      std::vector<std::string> explain;
      std::size_t              n      = 0;
      bool                     census = false;
      std::vector<std::string> verify;
      std::size_t              k      = 2;
      std::size_t              budget = 100;
      std::vector<std::string> A, B, C;
      std::string              kind;
      std::string              r, s;
      std::size_t              length = 3;
      std::vector<std::string> chain;
      std::size_t              copies = 4;
      std::size_t              extension = 0;
    };

    bool json_mode(Options const& o) {
      return o.format == "json";
    }

    DistanceMonoid monoid_from(Options const& o) {
      if (!o.family.empty()) {
        return load_monoid(o.family);
      }
      if (!o.input.empty()) {
        return load_monoid(o.input);
      }
      throw Error(ErrorCode::MalformedInput, "give a monoid file or --family <tag>");
    }

    void emit(Options const& o, std::ostream& out, Json const& j, std::string const& text) {
      if (json_mode(o)) {
        out << j.dump(2) << '\n';
      } else {
        out << text;
      }
    }

    std::string verdict_lines(Json const& j) {
      std::string out;
      for (auto const& [key, value] : j.items()) {
        out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + '\n';
      }
      return out;
    }

    // The artifact goes to --out when given; otherwise it is part of the report.
    void emit_space(Options const& o, std::ostream& out, RMetricSpace const& s, Json const& verdicts) {
      if (!o.out_path.empty()) {
        write_file_atomic(o.out_path, format_space_text(s));
        emit(o, out, verdicts, verdict_lines(verdicts));
        return;
      }
      Json j;
      j["space"]    = space_to_json(s);
      j["verdicts"] = verdicts;
      std::string text = format_space_text(s);
      std::istringstream lines(verdict_lines(verdicts));
      for (std::string line; std::getline(lines, line);) {
        text += "# " + line + '\n';
      }
      emit(o, out, j, text);
    }

    PointSet points_of(RMetricSpace const& s, std::vector<std::string> const& labels) {
      PointSet out;
      for (auto const& l : labels) {
        if (!l.empty()) {
          out.push_back(s.at(l));
        }
      }
      return out;
    }

    int cmd_validate_monoid(Options const& o, std::ostream& out) {
      auto m = load_monoid(o.input);
      Json j;
      j["valid"]  = true;
      j["monoid"] = monoid_to_json(m);
      emit(o, out, j, "valid: " + m.describe() + '\n');
      return 0;
    }

    int cmd_classify(Options const& o, std::ostream& out) {
      auto const p = classify(monoid_from(o));
      if (o.explain.empty()) {
        emit(o, out, profile_to_json(p), profile_to_text(p));
        return 0;
      }
      Json        arr = Json::array();
      std::string text;
      for (auto const& f : o.explain) {
        auto e = explain(p, f);
        arr.push_back({{"field", e.field}, {"value", e.value}, {"citation", e.citation}, {"witness", e.witness}});
        text += e.field + " = " + e.value + "  [" + e.citation + "]";
        if (!e.witness.empty()) {
          text += "  " + e.witness;
        }
        text += '\n';
      }
      emit(o, out, arr, text);
      return 0;
    }

    int cmd_enumerate(Options const& o, std::ostream& out) {
      auto const all = enumerate_monoids(o.n, o.jobs);
      Json       verdicts;
      verdicts["n"]     = o.n;
      verdicts["count"] = all.size();
      for (auto const& v : o.verify) {
        VerifyReport r;
        if (v == "unique") {
          r = verify_unique(o.n, all);
        } else if (v == "classsize") {
          r = verify_classsize(o.n, all);
        } else {
          throw Error(ErrorCode::MalformedInput, "unknown check '" + v + "' (use unique, classsize)");
        }
        verdicts["verify"][v] = {{"holds", true}, {"claim", r.claim}, {"checked", r.checked}};
      }
      std::optional<Census> c;
      if (o.census) {
        c = census(o.n, o.jobs);
        verdicts["by_arch"]  = c->by_arch;
        verdicts["by_class"] = c->by_class;
      }
      if (!o.out_path.empty()) {
        std::filesystem::path dir(o.out_path);
        std::filesystem::create_directories(dir);
        for (std::size_t i = 0; i < all.size(); ++i) {
          char name[32];
          std::snprintf(name, sizeof name, "table_%05zu.mon", i);
          write_file_atomic(dir / name, format_monoid_text(all[i]));
        }
        if (c) {
          write_file_atomic(dir / "census.csv", census_csv(*c));
        }
        write_file_atomic(dir / "verdicts.json", verdicts.dump(2) + "\n");
      }
      std::string text = "monoids with " + std::to_string(o.n) + " nonzero elements: " + std::to_string(all.size()) + '\n';
      if (verdicts.contains("verify")) {
        for (auto const& [name, r] : verdicts["verify"].items()) {
          text += name + ": holds (" + r["claim"].get<std::string>() + ")\n";
        }
      }
      if (c) {
        if (o.out_path.empty()) {
          text += census_csv(*c);
        }
        for (auto const& [a, count] : c->by_arch) {
          text += "arch " + a + ": " + std::to_string(count) + '\n';
        }
      }
      emit(o, out, verdicts, text);
      return 0;
    }

    int cmd_space_validate(Options const& o, std::ostream& out) {
      auto const s = load_space(o.input);
      Json       j;
      j["valid"] = true;
      j["space"] = space_to_json(s);
      std::string text = "valid: " + std::to_string(s.size()) + " points over " + s.monoid().describe() + '\n';
      if (o.extension > 0) {
        auto const missing = check_extension_property(s, o.extension);
        j["extension_property"] = !missing;
        text += "extension property up to " + std::to_string(o.extension) + ": " + (missing ? "fails" : "holds") + '\n';
        emit(o, out, j, text);
        return missing ? 1 : 0;
      }
      emit(o, out, j, text);
      return 0;
    }

    int cmd_amalgamate(Options const& o, std::ostream& out) {
      auto const s = free_amalgam(load_space(o.input), load_space(o.input2));
      if (!o.out_path.empty()) {
        write_file_atomic(o.out_path, format_space_text(s));
      }
      emit(o, out, space_to_json(s), format_space_text(s));
      return 0;
    }

    int cmd_generate(Options const& o, std::ostream& out) {
      auto const g = fraisse_grow(monoid_from(o), o.k, o.budget, o.seed);
      Json       verdicts;
      verdicts["points"]     = g.space.size();
      verdicts["saturated"]  = g.saturated;
      verdicts["unrealized"] = g.unrealized;
      verdicts["rounds"]     = g.rounds;
      verdicts["seed"]       = o.seed;
      emit_space(o, out, g.space, verdicts);
      return g.saturated ? 0 : 1;
    }

    int cmd_forking(Options const& o, std::ostream& out) {
      auto const s = load_space(o.input);
      auto const r = forks(s, points_of(s, o.A), points_of(s, o.B), points_of(s, o.C));
      auto const j = forking_to_json(s, r);
      std::string text = "verdict: " + j["verdict"].get<std::string>() + '\n';
      if (r.certificate) {
        auto const& c = j["certificate"];
        text += c["equality"].get<std::string>() + "(" + c["b1"].get<std::string>() + "," + c["b2"].get<std::string>()
                + "): over AC " + c["over_AC"].get<std::string>() + ", over C " + c["over_C"].get<std::string>() + '\n';
      } else {
        text += "pairs checked: " + std::to_string(r.pairs_checked) + '\n';
      }
      emit(o, out, j, text);
      return r.independent ? 0 : 1;
    }

    int cmd_cyclic(Options const& o, std::ostream& out) {
      std::filesystem::path const p(o.input);
      auto const spec = parse_diagonal_spec(read_file(p), p.parent_path());
      auto const r    = cyclic_check(spec, o.n);
      Json       j;
      j["n"]      = o.n;
      j["cyclic"] = r.cyclic;
      j["chain"]  = r.chain;
      std::string text = std::to_string(o.n) + "-cyclic: " + (r.cyclic ? "yes" : "no") + '\n';
      if (!r.cyclic) {
        text += "chain:";
        for (auto i : r.chain) {
          text += " " + std::to_string(i);
        }
        text += '\n';
      }
      emit(o, out, j, text);
      return r.cyclic ? 0 : 1;
    }

    Value value_of(DistanceMonoid const& m, std::string const& text, char const* name) {
      if (text.empty()) {
        throw Error(ErrorCode::MalformedInput, std::string("missing --") + name);
      }
      return m.parse(text);
    }

    int cmd_witness(Options const& o, std::ostream& out) {
      auto const m = monoid_from(o);
      Json       v;
      auto       verdict = [](bool independent) { return independent ? "independent" : "forks"; };
      if (o.kind == "op") {
        auto const w      = witness_order_property(m, value_of(m, o.r, "r"), o.length);
        v["order_property"] = w.order_property;
        emit_space(o, out, w.space, v);
      } else if (o.kind == "nonsimple4") {
        auto const s = witness_nonsimple(m, value_of(m, o.r, "r"), value_of(m, o.s, "s"), NonsimpleVariant::FourPoint);
        PointSet const a{s.at("a")}, b{s.at("b1"), s.at("b2")}, c{s.at("c")};
        v["a_over_c_b1b2"] = verdict(forks(s, a, b, c).independent);
        v["b1b2_over_c_a"] = verdict(forks(s, b, a, c).independent);
        emit_space(o, out, s, v);
      } else if (o.kind == "nonsimple5") {
        auto const s = witness_nonsimple(m, value_of(m, o.r, "r"), value_of(m, o.s, "s"), NonsimpleVariant::FivePoint);
        PointSet const a{s.at("a")}, b{s.at("b1"), s.at("b2")}, c{s.at("c1"), s.at("c2")};
        v["dmax_independent"] = rel_dmax(s, a, b, c);
        v["forking"]          = verdict(forks(s, a, b, c).independent);
        emit_space(o, out, s, v);
      } else if (o.kind == "tp2") {
        auto const w          = witness_tp2(m, value_of(m, o.r, "r"), value_of(m, o.s, "s"), o.k);
        v["paths_katetov"]    = w.paths_katetov;
        v["rows_inconsistent"] = w.rows_inconsistent;
        emit_space(o, out, w.space, v);
      } else if (o.kind == "soseq") {
        std::vector<Value> chain;
        for (auto const& t : o.chain) {
          chain.push_back(m.parse(t));
        }
        auto const so = build_so_sequence(m, chain, o.copies);
        Json       wrap = Json::array();
        for (auto const& x : so.wrap) {
          wrap.push_back(m.format(x));
        }
        std::size_t const n = chain.size();
        v["wrap"]           = wrap;
        if (n >= 2) {
          v["transitive"] = diag_transitive(m, so.wrap);
        }
        v["np"]                                    = *so.spec.np;
        v[std::to_string(n) + "_cyclic"]           = cyclic_check(so.spec, n).cyclic;
        v[std::to_string(n + 1) + "_cyclic"]       = cyclic_check(so.spec, n + 1).cyclic;
        v["np_bound"]                              = check_np_bound(so.sequence);
        emit_space(o, out, so.sequence.space, v);
      } else {
        throw Error(ErrorCode::MalformedInput, "unknown witness kind '" + o.kind + "'");
      }
      return 0;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options  o;
    CLI::App app{"Distance monoids, Urysohn spaces and their theories", "urysohn"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto common = [&](CLI::App* sub, bool out_flag = true) {
      sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
      if (out_flag) {
        sub->add_option("--out", o.out_path, "write the artifact here (atomically)");
      }
    };
    std::map<CLI::App*, std::function<int()>> actions;

    auto* vm = app.add_subcommand("validate-monoid", "check a monoid file or family tag");
    vm->add_option("monoid", o.input)->required();
    common(vm, false);
    actions[vm] = [&] { return cmd_validate_monoid(o, out); };

    auto* cl = app.add_subcommand("classify", "classify the theory over a monoid");
    cl->add_option("monoid", o.input);
    cl->add_option("--family", o.family, "family tag such as R:3, MAX:2, Q1, Q, N, GRID:Q1:4");
    cl->add_option("--explain", o.explain, "explain a field (repeatable)");
    common(cl, false);
    actions[cl] = [&] { return cmd_classify(o, out); };

    auto* en = app.add_subcommand("enumerate", "enumerate finite monoids");
    en->add_option("--n", o.n, "number of nonzero elements")->required();
    en->add_flag("--census", o.census);
    en->add_option("--verify", o.verify, "unique,classsize")->delimiter(',');
    en->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    common(en);
    actions[en] = [&] { return cmd_enumerate(o, out); };

    auto* sv = app.add_subcommand("space-validate", "check a space file");
    sv->add_option("space", o.input)->required();
    sv->add_option("--extension", o.extension, "also check the extension property over this many points");
    common(sv, false);
    actions[sv] = [&] { return cmd_space_validate(o, out); };

    auto* am = app.add_subcommand("amalgamate", "free amalgam of two spaces over their shared labels");
    am->add_option("first", o.input)->required();
    am->add_option("second", o.input2)->required();
    common(am);
    actions[am] = [&] { return cmd_amalgamate(o, out); };

    auto* ge = app.add_subcommand("generate", "grow a finite approximation of the Urysohn space");
    ge->add_option("monoid", o.input);
    ge->add_option("--family", o.family);
    ge->add_option("--k", o.k, "extension property over this many points");
    ge->add_option("--budget", o.budget, "maximum number of points");
    ge->add_option("--seed", o.seed);
    common(ge);
    actions[ge] = [&] { return cmd_generate(o, out); };

    auto* fo = app.add_subcommand("forking", "decide whether A is independent from B over C");
    fo->add_option("space", o.input)->required();
    fo->add_option("--A", o.A)->delimiter(',');
    fo->add_option("--B", o.B)->delimiter(',');
    fo->add_option("--C", o.C)->delimiter(',');
    common(fo, false);
    actions[fo] = [&] { return cmd_forking(o, out); };

    auto* cy = app.add_subcommand("cyclic", "decide n-cyclicity of an indiscernible sequence");
    cy->add_option("spec", o.input)->required();
    cy->add_option("--n", o.n)->required();
    common(cy, false);
    actions[cy] = [&] { return cmd_cyclic(o, out); };

    auto* wi = app.add_subcommand("witness", "build a witness configuration");
    wi->add_option("monoid", o.input);
    wi->add_option("--family", o.family);
    wi->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"op", "nonsimple4", "nonsimple5", "tp2", "soseq"}));
    wi->add_option("--r", o.r);
    wi->add_option("--s", o.s);
    wi->add_option("--k", o.k, "grid size for tp2");
    wi->add_option("--length", o.length, "number of pairs for op");
    wi->add_option("--chain", o.chain, "nondecreasing chain for soseq")->delimiter(',');
    wi->add_option("--copies", o.copies, "tuples in the sequence for soseq");
    common(wi);
    actions[wi] = [&] { return cmd_witness(o, out); };

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    if (wi->parsed() && wi->count("--k") == 0) {
      o.k = 3;
    }

    try {
      for (auto const& [sub, action] : actions) {
        if (sub->parsed()) {
          return action();
        }
      }
      return 2;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      if (!e.witness().empty()) {
        err << "witness:";
        for (auto w : e.witness()) {
          err << ' ' << w;
        }
        err << '\n';
      }
      return is_input_error(e.code()) ? 2 : 3;
    } catch (std::filesystem::filesystem_error const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << '\n';
      return 3;
    }
  }

}  // namespace urysohn::cli
