#include "urysohn/monoid_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace urysohn {

  namespace {
    std::vector<std::string> tokens(std::string_view line) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(line)};
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    std::uint64_t parse_count(std::string_view text, std::string_view tag) {
      Rational q = parse_rational(text);
      if (q < Rational(0) || q.denominator() != 1) {
        throw Error(ErrorCode::MalformedInput, "bad parameter in family tag '" + std::string(tag) + "'");
      }
      return static_cast<std::uint64_t>(q.numerator());
    }
  }  // namespace

  FiniteMonoid parse_monoid_text(std::string_view text) {
    std::vector<std::string>              labels;
    std::vector<std::vector<std::string>> rows;
    bool                                  header = false;
    std::istringstream                    in{std::string(text)};
    std::string                           line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      auto toks = tokens(line);
      if (toks.empty()) {
        continue;
      }
      if (!header) {
        if (toks.front() != "elements:") {
          throw Error(ErrorCode::MalformedInput, "monoid file must start with 'elements:'");
        }
        labels.assign(toks.begin() + 1, toks.end());
        header = true;
        continue;
      }
      rows.push_back(std::move(toks));
    }
    if (!header || labels.empty()) {
      throw Error(ErrorCode::MalformedInput, "no elements declared");
    }
    std::size_t n = labels.size();
    if (rows.size() != n) {
      throw Error(ErrorCode::MalformedInput,
                  "expected " + std::to_string(n) + " table rows, got " + std::to_string(rows.size()));
    }
    std::vector<Elem> flat;
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw Error(ErrorCode::MalformedInput, "row " + std::to_string(i) + " has the wrong length", {i});
      }
      for (auto const& tok : rows[i]) {
        auto it = std::find(labels.begin(), labels.end(), tok);
        if (it == labels.end()) {
          throw Error(ErrorCode::MalformedInput, "unknown label '" + tok + "' in row " + std::to_string(i), {i});
        }
        flat.push_back(static_cast<Elem>(it - labels.begin()));
      }
    }
    return validate_monoid(n, std::move(flat), std::move(labels));
  }

  std::string format_monoid_text(FiniteMonoid const& m) {
    std::string out = "elements:";
    for (auto const& l : m.labels()) {
      out += " " + l;
    }
    out += "\n";
    for (Elem i = 0; i < m.size(); ++i) {
      for (Elem j = 0; j < m.size(); ++j) {
        out += (j ? " " : "") + m.label(m.op(i, j));
      }
      out += "\n";
    }
    return out;
  }

  bool is_family_tag(std::string_view text) {
    return text == "Q1" || text == "Q" || text == "N" || text.starts_with("R:") || text.starts_with("MAX:")
           || text.starts_with("TQ:") || text.starts_with("GRID:");
  }

  DistanceMonoid parse_family_tag(std::string_view tag) {
    if (tag == "Q1") {
      return DistanceMonoid(ParametricMonoid::truncated_rationals(1));
    }
    if (tag == "Q") {
      return DistanceMonoid(ParametricMonoid::nonnegative_rationals());
    }
    if (tag == "N") {
      return DistanceMonoid(ParametricMonoid::nonnegative_integers());
    }
    if (tag.starts_with("R:")) {
      return DistanceMonoid(ParametricMonoid::truncated_integers(parse_count(tag.substr(2), tag)));
    }
    if (tag.starts_with("MAX:")) {
      return DistanceMonoid(ParametricMonoid::max_chain(parse_count(tag.substr(4), tag)));
    }
    if (tag.starts_with("TQ:")) {
      return DistanceMonoid(ParametricMonoid::truncated_rationals(parse_rational(tag.substr(3))));
    }
    if (tag.starts_with("GRID:")) {
      auto rest  = tag.substr(5);
      auto colon = rest.rfind(':');
      if (colon == std::string_view::npos) {
        throw Error(ErrorCode::MalformedInput, "GRID tag needs a denominator: '" + std::string(tag) + "'");
      }
      DistanceMonoid base = parse_family_tag(rest.substr(0, colon));
      if (base.family() == nullptr) {
        throw Error(ErrorCode::MalformedInput, "GRID needs a parametric family: '" + std::string(tag) + "'");
      }
      return DistanceMonoid(grid_restrict(*base.family(), parse_count(rest.substr(colon + 1), tag)));
    }
    throw Error(ErrorCode::UnsupportedFamily, "unknown family tag '" + std::string(tag) + "'");
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::MalformedInput, "cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  void write_file_atomic(std::filesystem::path const& path, std::string_view contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw Error(ErrorCode::MalformedInput, "cannot write " + tmp.string());
      }
      out << contents;
      if (!out.flush()) {
        throw Error(ErrorCode::MalformedInput, "short write to " + tmp.string());
      }
    }
    std::filesystem::rename(tmp, path);
  }

  DistanceMonoid load_monoid(std::string_view tag_or_path) {
    if (is_family_tag(tag_or_path)) {
      return parse_family_tag(tag_or_path);
    }
    return DistanceMonoid(parse_monoid_text(read_file(std::filesystem::path(tag_or_path))));
  }

  nlohmann::ordered_json monoid_to_json(DistanceMonoid const& m) {
    nlohmann::ordered_json j;
    if (auto const* f = m.family()) {
      j["family"] = f->tag();
      return j;
    }
    auto const& t = m.table();
    j["elements"] = t.labels();
    auto rows     = nlohmann::ordered_json::array();
    for (Elem i = 0; i < t.size(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (Elem k = 0; k < t.size(); ++k) {
        row.push_back(t.label(t.op(i, k)));
      }
      rows.push_back(row);
    }
    j["table"] = rows;
    return j;
  }

}  // namespace urysohn
