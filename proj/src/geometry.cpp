#include "regmark/geometry.hpp"

#include <utility>

namespace regmark {

namespace {

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  using boost::multiprecision::gcd;
  return gcd(gcd(abs(a), abs(b)), abs(c));
}

}  // namespace

Line Line::normalized(BigInt a, BigInt b, BigInt c) {
  if (a == 0 && b == 0) throw Error("line requires (a,b) != (0,0)");
  BigInt g = gcd3(a, b, c);
  a /= g;
  b /= g;
  c /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return Line{std::move(a), std::move(b), std::move(c)};
}

Line Line::normalized(const Rational& a, const Rational& b, const Rational& c) {
  using boost::multiprecision::lcm;
  BigInt m = lcm(lcm(denominator(a), denominator(b)), denominator(c));
  return normalized(numerator(a) * (m / denominator(a)),
                    numerator(b) * (m / denominator(b)),
                    numerator(c) * (m / denominator(c)));
}

bool Line::contains(const Point& p) const {
  return Rational(a) * p.x + Rational(b) * p.y == Rational(c);
}

Slope Slope::normalized(BigInt dx, BigInt dy) {
  if (dx == 0 && dy == 0) throw Error("slope requires a nonzero direction");
  using boost::multiprecision::gcd;
  BigInt g = gcd(abs(dx), abs(dy));
  dx /= g;
  dy /= g;
  if (dx < 0 || (dx == 0 && dy < 0)) {
    dx = -dx;
    dy = -dy;
  }
  return Slope{std::move(dx), std::move(dy)};
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw IdenticalPointsError("line_through requires distinct points");
  const Rational a = q.y - p.y;
  const Rational b = p.x - q.x;
  const Rational c = a * p.x + b * p.y;
  return Line::normalized(a, b, c);
}

std::optional<Point> intersect(const Line& l1, const Line& l2) {
  if (l1 == l2) throw IdenticalLinesError("intersect requires distinct lines");
  const BigInt det = l1.a * l2.b - l2.a * l1.b;
  if (det == 0) return std::nullopt;
  const Rational x = make_rational(l1.c * l2.b - l2.c * l1.b, det);
  const Rational y = make_rational(l1.a * l2.c - l2.a * l1.c, det);
  return Point{x, y};
}

Slope slope_of(const Line& l) { return Slope::normalized(-l.b, l.a); }

bool parallel(const Line& l1, const Line& l2) {
  return l1.a * l2.b - l2.a * l1.b == 0;
}

int orientation(const Point& p, const Point& q, const Point& r) {
  const Rational cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  if (cross > 0) return 1;
  if (cross < 0) return -1;
  return 0;
}

bool between(const Point& a, const Point& b, const Point& c) {
  if (a == b || b == c || a == c)
    throw DuplicatePointError("between requires pairwise distinct points");
  if (orientation(a, b, c) != 0)
    throw NotCollinearError("between requires collinear points");
  // Strictly inside iff the displacements from b to both ends pull opposite ways.
  const Rational dot =
      (a.x - b.x) * (c.x - b.x) + (a.y - b.y) * (c.y - b.y);
  return dot < 0;
}

std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

std::string to_string(const Line& l) {
  return to_string(l.a) + "x + " + to_string(l.b) + "y = " + to_string(l.c);
}

std::string to_string(const Slope& s) {
  return "(" + to_string(s.dx) + ", " + to_string(s.dy) + ")";
}

}  // namespace regmark
