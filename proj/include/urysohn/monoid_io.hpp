#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "urysohn/monoid.hpp"

namespace urysohn {

  // Text format:
  //   elements: 0 a b
  //   0 a b
  //   a b b
  //   b b b
  // '#' starts a comment; rows are table rows as labels.
  FiniteMonoid parse_monoid_text(std::string_view text);
  std::string  format_monoid_text(FiniteMonoid const& m);

  // R:<n>, MAX:<k>, Q1, TQ:<q>, Q, N, and GRID:<tag>:<D> for the grid
  // restriction of a truncated family (a finite table).
  bool           is_family_tag(std::string_view text);
  DistanceMonoid parse_family_tag(std::string_view tag);

  // A family tag, or else a path to a monoid text file.
  DistanceMonoid load_monoid(std::string_view tag_or_path);

  std::string read_file(std::filesystem::path const& path);
  // Writes through a temporary file and renames it into place.
  void write_file_atomic(std::filesystem::path const& path, std::string_view contents);

  nlohmann::ordered_json monoid_to_json(DistanceMonoid const& m);

}  // namespace urysohn
