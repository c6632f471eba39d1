#include "regmark/io.hpp"

#include <fstream>
#include <sstream>

namespace regmark {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

Rational field(const std::vector<std::string>& toks, std::size_t i,
               std::size_t line_no) {
  try {
    return parse_rational(toks[i]);
  } catch (const Error& e) {
    throw ParseError(std::string(e.what()), line_no);
  }
}

}  // namespace

ArrangementFile parse_arrangement_file(std::istream& in) {
  ArrangementFile file;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto toks = tokens_of(raw);
    if (toks.empty()) continue;
    const std::string& kind = toks[0];
    if (kind == "line") {
      if (toks.size() != 4)
        throw ParseError("'line' needs 3 coefficients", line_no);
      const Rational a = field(toks, 1, line_no);
      const Rational b = field(toks, 2, line_no);
      const Rational c = field(toks, 3, line_no);
      if (a == 0 && b == 0)
        throw ParseError("'line' needs (a,b) != (0,0)", line_no);
      file.lines.push_back(Line::normalized(a, b, c));
    } else if (kind == "point") {
      if (toks.size() != 3) throw ParseError("'point' needs 2 coordinates", line_no);
      file.points.push_back(Point{field(toks, 1, line_no), field(toks, 2, line_no)});
      file.has_point_records = true;
    } else if (kind == "segment") {
      if (toks.size() != 5) throw ParseError("'segment' needs 4 coordinates", line_no);
      const Point p{field(toks, 1, line_no), field(toks, 2, line_no)};
      const Point q{field(toks, 3, line_no), field(toks, 4, line_no)};
      if (p == q) throw ParseError("'segment' endpoints coincide", line_no);
      file.segments.push_back(Segment{p, q});
    } else {
      throw ParseError("unknown record '" + kind + "'", line_no);
    }
  }
  return file;
}

ArrangementFile load_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_arrangement_file(in);
}

std::string serialize(const Arrangement& a) {
  std::ostringstream os;
  for (const Line& l : a.lines)
    os << "line " << to_string(l.a) << " " << to_string(l.b) << " "
       << to_string(l.c) << "\n";
  for (const Point& p : a.points)
    os << "point " << to_string(p.x) << " " << to_string(p.y) << "\n";
  return os.str();
}

std::string serialize(const Shape& s) {
  std::ostringstream os;
  for (const Segment& seg : s.segments)
    os << "segment " << to_string(seg.p.x) << " " << to_string(seg.p.y) << " "
       << to_string(seg.q.x) << " " << to_string(seg.q.y) << "\n";
  return os.str();
}

void save(const Arrangement& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize(a);
}

}  // namespace regmark
