#pragma once

#include "regmark/geometry.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace regmark {

struct Segment {
  Point p;
  Point q;
};

// Finite set of maximal line segments: no two collinear segments overlap or
// touch end to end. canonicalize_shape establishes the invariant.
struct Shape {
  std::vector<Segment> segments;
};

// The pair (L, P). Both vectors are kept sorted and duplicate-free so value
// comparison is canonical. Rule (1): every point of P lies on at least two
// lines of L. Rule (2): the intersection of every nonparallel pair of L is
// in P. An empty L forces an empty P.
struct Arrangement {
  std::vector<Line> lines;
  std::vector<Point> points;

  std::size_t line_count() const { return lines.size(); }
  std::size_t point_count() const { return points.size(); }
  bool empty() const { return lines.empty() && points.empty(); }

  bool operator==(const Arrangement& o) const {
    return lines == o.lines && points == o.points;
  }
};

struct RuleViolation {
  int rule = 0;  // 1 or 2
  // Rule 1 names the offending point, rule 2 the line pair whose
  // intersection is missing from P.
  std::variant<Point, std::pair<Line, Line>> witness;
  std::string message;
};

struct ValidationReport {
  bool valid = false;
  std::vector<RuleViolation> violations;
};

enum class FamilyKind { NearPencil, AugmentedNearPencil, Railtrack };

std::string to_string(FamilyKind kind);

// Checks rules (1) and (2) on explicitly given sets. Inputs with repeated
// lines or points are malformed and throw DuplicateLineError /
// DuplicatePointError; rule violations are reported, not thrown.
ValidationReport validate(const std::vector<Line>& lines,
                          const std::vector<Point>& points);

inline ValidationReport validate(const Arrangement& a) {
  return validate(a.lines, a.points);
}

// Closure constructor: P = all pairwise intersections of the given lines.
// The result always passes validate.
Arrangement from_lines(std::vector<Line> lines);

// Merges collinear segments whose 1-D spans overlap or touch; the covered
// point set is unchanged.
Shape canonicalize_shape(const std::vector<Segment>& segments);

// L = supporting lines of the shape's segments (collinear segments separated
// by gaps share one construction line), then the from_lines closure.
Arrangement from_shape(const Shape& shape);

// Concrete rational realizations of the three named families, k >= 3:
//   NearPencil          base y=0 with marks (1,0)..(k-1,0), apex (0,1), k lines
//   AugmentedNearPencil near-pencil plus y=1 through the apex, k+1 lines
//   Railtrack           base y=0 crossed by x=1..k, k+1 lines
// Throws BadKError for k < 3.
Arrangement generate_family(FamilyKind kind, std::size_t k);

// n >= 2 concurrent lines through the origin with pairwise distinct slopes
// (the k = 1 family). Throws BadKError for n < 2.
Arrangement generate_pencil(std::size_t n);

}  // namespace regmark
