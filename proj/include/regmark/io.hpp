#pragma once

#include "regmark/arrangement.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace regmark {

// Line-oriented text format, one record per line:
//   line a b c          a x + b y = c; integer or p/q coefficients
//   point x y           optional explicit registration marks
//   segment x1 y1 x2 y2 shape input
//   # ...               comment
// Rationals round-trip bit-exactly in lowest terms.
struct ArrangementFile {
  std::vector<Line> lines;
  std::vector<Point> points;
  std::vector<Segment> segments;
  bool has_point_records = false;  // distinguishes "P given as empty" from "derive P"
};

// Throws ParseError (with the 1-based line number) on malformed records.
ArrangementFile parse_arrangement_file(std::istream& in);
ArrangementFile load_arrangement_file(const std::string& path);

std::string serialize(const Arrangement& a);
std::string serialize(const Shape& s);

void save(const Arrangement& a, const std::string& path);

}  // namespace regmark
