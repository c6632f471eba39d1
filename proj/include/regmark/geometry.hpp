#pragma once

#include "regmark/errors.hpp"
#include "regmark/rational.hpp"

#include <compare>
#include <optional>
#include <string>

namespace regmark {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

// A line a·x + b·y = c with integer coefficients, gcd(|a|,|b|,|c|) = 1 and
// leading sign fixed (a > 0, or a = 0 and b > 0). Equal lines therefore have
// identical triples, which makes Line usable as a map/set key.
struct Line {
  BigInt a;
  BigInt b;
  BigInt c;

  // Normalizes an arbitrary integer triple; throws if (a,b) = (0,0).
  static Line normalized(BigInt a, BigInt b, BigInt c);
  static Line normalized(long long a, long long b, long long c) {
    return normalized(BigInt(a), BigInt(b), BigInt(c));
  }
  // Clears rational denominators first, then normalizes.
  static Line normalized(const Rational& a, const Rational& b, const Rational& c);

  bool contains(const Point& p) const;

  bool operator==(const Line& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const Line& o) const { return !(*this == o); }
  bool operator<(const Line& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

// Direction vector in lowest terms, dx > 0 or (dx = 0, dy = 1). Two lines are
// parallel exactly when their Slope values are equal; vertical lines need no
// special case.
struct Slope {
  BigInt dx;
  BigInt dy;

  static Slope normalized(BigInt dx, BigInt dy);

  bool operator==(const Slope& o) const { return dx == o.dx && dy == o.dy; }
  bool operator!=(const Slope& o) const { return !(*this == o); }
  bool operator<(const Slope& o) const {
    if (dx != o.dx) return dx < o.dx;
    return dy < o.dy;
  }
};

// Throws IdenticalPointsError when p = q.
Line line_through(const Point& p, const Point& q);

// The unique intersection of two distinct lines, or nullopt when parallel.
// Throws IdenticalLinesError when l1 = l2 as normalized triples.
std::optional<Point> intersect(const Line& l1, const Line& l2);

Slope slope_of(const Line& l);

bool parallel(const Line& l1, const Line& l2);

// Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

// True iff b lies strictly between a and c on their common line. Requires the
// three points pairwise distinct and collinear.
bool between(const Point& a, const Point& b, const Point& c);

std::string to_string(const Point& p);
std::string to_string(const Line& l);
std::string to_string(const Slope& s);

}  // namespace regmark
