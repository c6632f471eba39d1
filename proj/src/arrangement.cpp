#include "regmark/arrangement.hpp"

#include <algorithm>
#include <map>

namespace regmark {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::NearPencil: return "near-pencil";
    case FamilyKind::AugmentedNearPencil: return "augmented near-pencil";
    case FamilyKind::Railtrack: return "railtrack";
  }
  return "?";
}

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename T>
bool has_duplicates(std::vector<T> v) {
  const std::size_t before = v.size();
  sort_unique(v);
  return v.size() != before;
}

}  // namespace

ValidationReport validate(const std::vector<Line>& lines,
                          const std::vector<Point>& points) {
  if (has_duplicates(lines)) throw DuplicateLineError("duplicate line in input");
  if (has_duplicates(points)) throw DuplicatePointError("duplicate point in input");

  ValidationReport report;
  for (const Point& p : points) {
    std::size_t degree = 0;
    for (const Line& l : lines)
      if (l.contains(p)) ++degree;
    if (degree < 2) {
      report.violations.push_back(
          {1, p,
           "point " + to_string(p) + " lies on " + std::to_string(degree) +
               " line(s); every registration mark needs at least two"});
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto meet = intersect(lines[i], lines[j]);
      if (!meet) continue;
      if (std::find(points.begin(), points.end(), *meet) == points.end()) {
        report.violations.push_back(
            {2, std::make_pair(lines[i], lines[j]),
             "intersection " + to_string(*meet) + " of " + to_string(lines[i]) +
                 " and " + to_string(lines[j]) + " is missing from P"});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

Arrangement from_lines(std::vector<Line> lines) {
  if (has_duplicates(lines)) throw DuplicateLineError("duplicate line in input");
  std::sort(lines.begin(), lines.end());
  std::vector<Point> points;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (auto meet = intersect(lines[i], lines[j])) points.push_back(*meet);
  sort_unique(points);
  return Arrangement{std::move(lines), std::move(points)};
}

Shape canonicalize_shape(const std::vector<Segment>& segments) {
  // Group by supporting line, then merge 1-D intervals along each line.
  std::map<Line, std::vector<Segment>> by_line;
  for (const Segment& s : segments) {
    if (s.p == s.q) throw IdenticalPointsError("segment endpoints coincide");
    by_line[line_through(s.p, s.q)].push_back(s);
  }

  Shape shape;
  for (auto& [line, segs] : by_line) {
    // Parameterize by x unless the line is vertical.
    const bool use_y = line.b == 0;
    const auto coord = [&](const Point& p) { return use_y ? p.y : p.x; };
    struct Interval {
      Rational lo, hi;
      Point lo_pt, hi_pt;
    };
    std::vector<Interval> intervals;
    for (const Segment& s : segs) {
      Interval iv{coord(s.p), coord(s.q), s.p, s.q};
      if (iv.hi < iv.lo) {
        std::swap(iv.lo, iv.hi);
        std::swap(iv.lo_pt, iv.hi_pt);
      }
      intervals.push_back(std::move(iv));
    }
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    Interval cur = intervals.front();
    for (std::size_t i = 1; i < intervals.size(); ++i) {
      const Interval& next = intervals[i];
      if (next.lo <= cur.hi) {  // overlapping or touching: same maximal segment
        if (next.hi > cur.hi) {
          cur.hi = next.hi;
          cur.hi_pt = next.hi_pt;
        }
      } else {
        shape.segments.push_back({cur.lo_pt, cur.hi_pt});
        cur = next;
      }
    }
    shape.segments.push_back({cur.lo_pt, cur.hi_pt});
  }
  return shape;
}

Arrangement from_shape(const Shape& shape) {
  std::vector<Line> lines;
  for (const Segment& s : shape.segments) lines.push_back(line_through(s.p, s.q));
  sort_unique(lines);
  return from_lines(std::move(lines));
}

Arrangement generate_family(FamilyKind kind, std::size_t k) {
  if (k < 3) throw BadKError("family generators require k >= 3");
  std::vector<Line> lines;
  const Point apex{0, 1};
  switch (kind) {
    case FamilyKind::NearPencil:
    case FamilyKind::AugmentedNearPencil: {
      lines.push_back(Line::normalized(0, 1, 0));  // base y = 0
      for (std::size_t i = 1; i <= k - 1; ++i)
        lines.push_back(line_through(apex, Point{Rational(i), 0}));
      if (kind == FamilyKind::AugmentedNearPencil)
        lines.push_back(Line::normalized(0, 1, 1));  // y = 1 through the apex
      break;
    }
    case FamilyKind::Railtrack: {
      lines.push_back(Line::normalized(0, 1, 0));
      for (std::size_t i = 1; i <= k; ++i)
        lines.push_back(Line::normalized(1, 0, BigInt(i)));  // x = i
      break;
    }
  }
  return from_lines(std::move(lines));
}

Arrangement generate_pencil(std::size_t n) {
  if (n < 2) throw BadKError("a pencil requires n >= 2 lines");
  std::vector<Line> lines;
  lines.push_back(Line::normalized(0, 1, 0));  // y = 0
  lines.push_back(Line::normalized(1, 0, 0));  // x = 0
  // Then y = m x for m = 1, 2, 3, ... keeps slopes pairwise distinct.
  for (std::size_t m = 1; lines.size() < n; ++m)
    lines.push_back(Line::normalized(BigInt(m), -1, 0));
  lines.resize(n);
  return from_lines(std::move(lines));
}

}  // namespace regmark
