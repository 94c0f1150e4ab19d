#include "points_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace yolkkit {

namespace {

std::string_view trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view tok, int line) {
  tok = trim(tok);
  if (tok.empty()) {
    throw ParseError(line, "line " + std::to_string(line) + ": empty coordinate");
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "line " + std::to_string(line) + ": bad number '" +
                               std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Electorate parse_points_text(std::string_view text) {
  std::vector<Point> pts;
  int dim = -1;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = (nl == std::string_view::npos)
                               ? text.substr(pos)
                               : text.substr(pos, nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<double> coords;
    size_t start = 0;
    while (true) {
      size_t comma = line.find(',', start);
      std::string_view tok = (comma == std::string_view::npos)
                                 ? line.substr(start)
                                 : line.substr(start, comma - start);
      coords.push_back(parse_double(tok, line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (dim < 0) {
      dim = static_cast<int>(coords.size());
      if (dim < 2) {
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": points need at least 2 coordinates");
      }
    } else if (static_cast<int>(coords.size()) != dim) {
      throw ParseError(line_no,
                       "line " + std::to_string(line_no) + ": expected " +
                           std::to_string(dim) + " coordinates, got " +
                           std::to_string(coords.size()));
    }
    for (double c : coords) {
      if (!std::isfinite(c)) {
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": non-finite coordinate");
      }
    }
    pts.emplace_back(std::move(coords));
  }
  if (pts.empty()) {
    throw ParseError(line_no, "no data lines in points input");
  }
  return Electorate::from_points(std::move(pts));
}

Electorate read_points_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(0, "cannot open points file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_points_text(ss.str());
}

std::string format_points(const Electorate& e, const std::string& comment) {
  std::string out;
  if (!comment.empty()) {
    out += "# " + comment + "\n";
  }
  char buf[64];
  for (const Point& p : e.points) {
    for (int j = 0; j < e.dim; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", p[j]);
      out += buf;
      if (j + 1 < e.dim) out += ',';
    }
    out += '\n';
  }
  return out;
}

void write_points_file(const std::string& path, const Electorate& e,
                       const std::string& comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::invalid_parameter,
                "cannot write points file '" + path + "'");
  }
  out << format_points(e, comment);
}

uint64_t instance_digest(const Electorate& e) {
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  char buf[64];
  std::snprintf(buf, sizeof(buf), "k=%d;n=%d;", e.dim, e.size());
  mix(buf);
  for (const Point& p : e.points) {
    for (int j = 0; j < e.dim; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g,", p[j]);
      mix(buf);
    }
    mix(";");
  }
  return h;
}

}  // namespace yolkkit
