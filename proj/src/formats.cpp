#include "chiro/formats.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace chiro {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (const auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  fail(Errc::MalformedFile, "line " + std::to_string(line + 1) + ": " + what);
}

int parse_count(std::string_view word, std::size_t line) {
  if (word.empty()) malformed(line, "missing integer");
  int value = 0;
  for (char c : word) {
    if (!std::isdigit(static_cast<unsigned char>(c))) malformed(line, "bad integer '" + std::string(word) + "'");
    value = value * 10 + (c - '0');
    if (value > 1'000'000) malformed(line, "integer too large");
  }
  return value;
}

}  // namespace

ChiFile parse_chi(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  const auto next_content = [&]() -> std::string_view {
    while (i < lines.size()) {
      const auto t = trim(strip_comment(lines[i]));
      if (!t.empty()) return t;
      ++i;
    }
    return {};
  };

  if (next_content() != "chirotope v1") malformed(i, "expected header 'chirotope v1'");
  ++i;

  auto t = next_content();
  if (t.substr(0, 2) != "n ") malformed(i, "expected 'n <N>'");
  const int n = parse_count(trim(t.substr(2)), i);
  ++i;

  std::optional<Label> root;
  t = next_content();
  if (t.substr(0, 5) == "root ") {
    root = parse_count(trim(t.substr(5)), i);
    ++i;
    t = next_content();
  }
  if (t != "triples") malformed(i, "expected 'triples'");
  ++i;

  std::vector<Sign> table;
  table.reserve(triple_count(n));
  for (; i < lines.size(); ++i) {
    const auto body = strip_comment(lines[i]);
    for (std::size_t p = 0; p < body.size(); ++p) {
      const char c = body[p];
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c == '+') {
        table.push_back(Sign::Pos);
      } else if (c == '-') {
        table.push_back(Sign::Neg);
      } else if (body.compare(p, 3, "\xE2\x88\x92") == 0) {  // U+2212 MINUS SIGN
        table.push_back(Sign::Neg);
        p += 2;
      } else {
        malformed(i, std::string("unexpected character '") + c + "' in sign string");
      }
    }
  }
  if (table.size() != triple_count(n))
    fail(Errc::MalformedFile, "expected " + std::to_string(triple_count(n)) + " signs, found " +
                                  std::to_string(table.size()));
  ChiFile out{Chirotope::from_table(n, std::move(table)), root};
  if (root && (*root < 0 || *root >= n)) fail(Errc::MalformedFile, "root label out of range");
  return out;
}

std::string write_chi(const Chirotope& chi, std::optional<Label> root) {
  std::ostringstream out;
  out << "chirotope v1\n"
      << "n " << chi.size() << "\n";
  if (root) out << "root " << *root << "\n";
  out << "triples\n";
  std::size_t col = 0;
  for (Sign s : chi.table()) {
    out << (s == Sign::Pos ? '+' : '-');
    if (++col == 64) {
      out << '\n';
      col = 0;
    }
  }
  if (col != 0) out << '\n';
  return out.str();
}

PointSet parse_pts(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto body = trim(strip_comment(lines[i]));
    if (body.empty()) continue;
    std::istringstream in{std::string(body)};
    std::string xs, ys, extra;
    if (!(in >> xs >> ys) || (in >> extra)) malformed(i, "expected exactly two coordinates");
    try {
      pts.push_back({parse_rational(xs), parse_rational(ys)});
    } catch (const Error& e) {
      malformed(i, e.what());
    }
  }
  return PointSet(std::move(pts));
}

std::string write_pts(const PointSet& ps) {
  std::ostringstream out;
  for (const Point& p : ps.points()) out << p.x.get_str() << ' ' << p.y.get_str() << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ChiFile load_chirotope_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  if (path.extension() == ".pts") {
    const PointSet ps = parse_pts(text);
    return {chirotope_from_points(ps), std::nullopt};
  }
  return parse_chi(text);
}

}  // namespace chiro
