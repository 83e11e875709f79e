#include "tguard/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace tguard {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Int>
bool parse_int(std::string_view tok, Int& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') return false;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

// Yields (line number, content) for lines that are neither blank nor comments.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    while (pos_ < text_.size()) {
      const std::size_t end = std::min(text_.find('\n', pos_), text_.size());
      std::string_view raw = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (raw.empty() || raw.front() == '#' || split_ws(raw).empty()) continue;
      line = raw;
      return true;
    }
    return false;
  }

  std::size_t line_no() const noexcept { return line_no_; }
  /// Line number the next missing line would have had.
  std::size_t eof_line() const noexcept {
    const bool ends_with_newline = !text_.empty() && text_.back() == '\n';
    return line_no_ + (ends_with_newline || text_.empty() ? 1 : 0);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::string vertex_line(const Terrain& t, VertexIndex v) {
  std::ostringstream out;
  out << v << ' ' << t[v].x << ' ' << t[v].y << ' ' << to_string(t.classify(v));
  return out.str();
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Terrain parse_terrain(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line)) {
    throw SyntaxError(reader.eof_line(), "missing vertex count");
  }
  const auto header = split_ws(line);
  std::size_t n = 0;
  if (header.size() != 1 || !parse_int(header[0], n)) {
    throw SyntaxError(reader.line_no(), "expected a single non-negative vertex count");
  }
  std::vector<Point> pts;
  pts.reserve(std::min<std::size_t>(n, 1U << 20));
  for (std::size_t i = 0; i < n; ++i) {
    if (!reader.next(line)) {
      throw SyntaxError(reader.eof_line(), "missing vertices: expected " + std::to_string(n) +
                                               ", got " + std::to_string(i));
    }
    const auto toks = split_ws(line);
    Point p;
    if (toks.size() != 2 || !parse_int(toks[0], p.x) || !parse_int(toks[1], p.y)) {
      throw SyntaxError(reader.line_no(), "expected \"x y\" integer pair");
    }
    pts.push_back(p);
  }
  if (reader.next(line)) {
    throw SyntaxError(reader.line_no(), "unexpected content after " + std::to_string(n) +
                                            " vertices");
  }
  return validate(pts);
}

std::string serialize_terrain(const Terrain& t) {
  std::ostringstream out;
  out << t.size() << '\n';
  for (const Point& p : t.vertices()) {
    out << p.x << ' ' << p.y << '\n';
  }
  return out.str();
}

Terrain read_terrain_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_terrain(buf.str());
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << text;
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Partial: return "partial";
  }
  return "?";
}

std::string format_report(const Terrain& t, const SolveResult& r) {
  std::ostringstream out;
  out << "status " << to_string(r.status) << '\n';
  const std::vector<VertexIndex> none;
  const auto& guards = r.solution ? r.solution->guards : none;
  out << "guards " << guards.size() << '\n';
  for (VertexIndex g : guards) out << vertex_line(t, g) << '\n';
  if (r.solution) {
    out << "assignment " << r.solution->assignment.size() << '\n';
    for (const auto& [c, g] : r.solution->assignment) out << c << " <- " << g << '\n';
  } else {
    out << "assignment 0\n";
  }
  const auto& bad = r.infeasibility ? r.infeasibility->unguardable : none;
  out << "unguardable " << bad.size() << '\n';
  for (VertexIndex c : bad) out << vertex_line(t, c) << '\n';
  return out.str();
}

ParsedReport parse_report(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  ParsedReport rep;

  auto section = [&](std::string_view key) -> std::size_t {
    if (!reader.next(line)) throw SyntaxError(reader.eof_line(), "missing " + std::string(key));
    const auto toks = split_ws(line);
    std::size_t count = 0;
    if (toks.size() != 2 || toks[0] != key || !parse_int(toks[1], count)) {
      throw SyntaxError(reader.line_no(), "expected \"" + std::string(key) + " <count>\"");
    }
    return count;
  };
  auto vertex_list = [&](std::size_t count, std::vector<VertexIndex>& into) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!reader.next(line)) throw SyntaxError(reader.eof_line(), "truncated vertex list");
      const auto toks = split_ws(line);
      VertexIndex v = 0;
      if (toks.size() != 4 || !parse_int(toks[0], v)) {
        throw SyntaxError(reader.line_no(), "expected \"index x y class\"");
      }
      into.push_back(v);
    }
  };

  if (!reader.next(line)) throw SyntaxError(reader.eof_line(), "missing status");
  const auto st = split_ws(line);
  if (st.size() != 2 || st[0] != "status") throw SyntaxError(reader.line_no(), "expected status");
  rep.status = std::string(st[1]);

  vertex_list(section("guards"), rep.guards);
  const std::size_t assigned = section("assignment");
  for (std::size_t i = 0; i < assigned; ++i) {
    if (!reader.next(line)) throw SyntaxError(reader.eof_line(), "truncated assignment");
    const auto toks = split_ws(line);
    VertexIndex c = 0;
    VertexIndex g = 0;
    if (toks.size() != 3 || toks[1] != "<-" || !parse_int(toks[0], c) || !parse_int(toks[2], g)) {
      throw SyntaxError(reader.line_no(), "expected \"convex <- guard\"");
    }
    rep.assignment.emplace(c, g);
  }
  vertex_list(section("unguardable"), rep.unguardable);
  return rep;
}

std::string emit_svg(const Terrain& t, const GuardSolution* sol) {
  Coord min_x = t[0].x;
  Coord max_x = t[t.size() - 1].x;
  Coord min_y = t[0].y;
  Coord max_y = t[0].y;
  for (const Point& p : t.vertices()) {
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const Coord span = std::max<Coord>({max_x - min_x, max_y - min_y, 1});
  const Coord ray = std::max<Coord>(span / 10, 1);
  const Coord margin = ray;
  const Coord left = min_x - ray - margin;
  const Coord width = (max_x - min_x) + 2 * (ray + margin);
  const Coord height = (max_y - min_y) + 2 * margin;
  // Flip y so that up is up: svg_y = max_y + margin - y.
  const Coord top = max_y + margin;
  auto sy = [&](Coord y) { return top - y; };
  const double mark = static_cast<double>(span) / 60.0 + 0.25;
  const double stroke = static_cast<double>(span) / 400.0 + 0.02;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << left << ' ' << 0
      << ' ' << width << ' ' << height << "\">\n";
  out << "<polyline class=\"terrain\" fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke
      << "\" points=\"" << (t[0].x - ray) << ',' << sy(t[0].y);
  for (const Point& p : t.vertices()) out << ' ' << p.x << ',' << sy(p.y);
  out << ' ' << (t[t.size() - 1].x + ray) << ',' << sy(t[t.size() - 1].y) << "\"/>\n";

  if (sol != nullptr) {
    for (const auto& [c, g] : sol->assignment) {
      out << "<line class=\"assign\" stroke=\"steelblue\" stroke-width=\"" << stroke / 2
          << "\" x1=\"" << t[g].x << "\" y1=\"" << sy(t[g].y) << "\" x2=\"" << t[c].x
          << "\" y2=\"" << sy(t[c].y) << "\"/>\n";
    }
  }

  for (VertexIndex v = 0; v < t.size(); ++v) {
    const bool convex = is_convex(t.classify(v));
    out << "<rect class=\"" << (convex ? "convex" : "reflex") << "\" x=\""
        << static_cast<double>(t[v].x) - mark / 2 << "\" y=\""
        << static_cast<double>(sy(t[v].y)) - mark / 2 << "\" width=\"" << mark << "\" height=\""
        << mark << "\" fill=\"" << (convex ? "white" : "black") << "\" stroke=\"black\""
        << " stroke-width=\"" << stroke << "\"/>\n";
  }
  if (sol != nullptr) {
    for (VertexIndex g : sol->guards) {
      out << "<circle class=\"guard\" cx=\"" << t[g].x << "\" cy=\"" << sy(t[g].y) << "\" r=\""
          << mark << "\" fill=\"none\" stroke=\"crimson\" stroke-width=\"" << 2 * stroke
          << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tguard
