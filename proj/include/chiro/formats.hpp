#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "chiro/chirotope.hpp"
#include "chiro/geometry.hpp"

namespace chiro {

// Text chirotope format (.chi):
//
//   chirotope v1
//   n <N>
//   root <r>          (optional)
//   triples
//   +-+-...           one sign per sorted triple i<j<k in lexicographic order
//
// Whitespace inside the sign string is ignored, '#' starts a comment, and
// both '-' and U+2212 are accepted as the minus sign.
struct ChiFile {
  Chirotope chi;
  std::optional<Label> root;
};

ChiFile parse_chi(std::string_view text);
std::string write_chi(const Chirotope& chi, std::optional<Label> root = std::nullopt);

// Point format (.pts): one "x y" pair per data line, coordinates as decimal
// integers or fractions a/b. Blank lines and '#' comments are skipped; the
// label is the zero-based index among data lines.
PointSet parse_pts(std::string_view text);
std::string write_pts(const PointSet& ps);

std::string read_text_file(const std::filesystem::path& path);

/// Loads a .chi file, or a .pts file converted to its chirotope.
ChiFile load_chirotope_file(const std::filesystem::path& path);

}  // namespace chiro
