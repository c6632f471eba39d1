#pragma once

#include "regmark/arrangement.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace regmark {

struct SummaryTriple {
  std::size_t n = 0;  // construction lines
  std::size_t k = 0;  // registration marks
  std::size_t s = 0;  // distinct slopes

  bool operator==(const SummaryTriple& o) const {
    return n == o.n && k == o.k && s == o.s;
  }
  bool operator<(const SummaryTriple& o) const {
    if (n != o.n) return n < o.n;
    if (k != o.k) return k < o.k;
    return s < o.s;
  }
};

std::string to_string(const SummaryTriple& t);  // "(n k s)"

// Indexing starts at 0 so that lines carrying no marks (the k = 0 families)
// are representable; reports print from index 1 and footnote a nonzero
// count at index 0. point_type starts at degree 2, the minimum for a mark.
struct TypeVectors {
  std::vector<std::size_t> line_type;   // line_type[u]: lines with exactly u points
  std::vector<std::size_t> slope_type;  // slope_type[v]: distinct slopes of v-point lines
  std::vector<std::size_t> point_type;  // point_type[i]: points on exactly i+2 lines
};

// Pads with trailing zeros; for comparing type vectors of unequal length.
std::vector<std::size_t> padded(const std::vector<std::size_t>& v, std::size_t size);

struct DegreeType {
  std::size_t degree = 0;           // number of lines through the point
  std::vector<std::size_t> counts;  // counts[u-1]: u-point lines through it; length k
};

// Bipartite point-line incidence over label ranges 0..k-1 / 0..n-1.
// Supports at most 64 points, which covers desk-scale arrangements.
struct IncidenceStructure {
  std::size_t num_points = 0;
  std::size_t num_lines = 0;
  std::vector<std::uint64_t> line_masks;  // bit p set iff point p lies on the line

  std::size_t line_size(std::size_t i) const;
  std::size_t point_degree(std::size_t p) const;
};

// Equal codes <=> isomorphic incidence structures.
using CanonicalCode = std::string;

struct CanonicalLabeling {
  CanonicalCode code;
  std::vector<std::size_t> point_order;  // canonical position -> original point index
  std::vector<std::size_t> line_order;   // canonical position -> original line index
};

struct IsomorphismWitness {
  std::vector<std::size_t> point_map;  // a1 point index -> a2 point index
  std::vector<std::size_t> line_map;   // a1 line index  -> a2 line index
};

struct CentralSignature {
  Point centrex;
  std::size_t degree = 0;            // d: lines through the centrex
  std::vector<std::size_t> spokes;   // all 2d spoke counts, ccw from the
                                     // lexicographically smallest direction
  std::vector<std::size_t> signature;  // first d entries (v_j = v_{j+d})
};

struct DeBruijnErdosReport {
  bool linear_space = false;
  std::size_t n = 0;
  std::size_t k = 0;
  bool bound_holds = false;  // n >= k, meaningful when linear_space
  bool equality = false;     // n == k
  bool near_pencil_structure = false;
  bool projective_plane_pattern = false;
  // The equality case admits only the two structures above; for Euclidean
  // construction lines the second one is reported as an anomaly.
  bool anomaly = false;
  std::string message;
};

enum class TransformMode { Affine, Projective };

// Row-major 3x3 rational matrix acting on homogeneous coordinates (x, y, 1).
struct Mat3 {
  Rational m[3][3];

  static Mat3 identity();
  static Mat3 affine(const Rational& a, const Rational& b, const Rational& tx,
                     const Rational& c, const Rational& d, const Rational& ty);
  Rational det() const;
  bool is_affine() const;  // last row (0, 0, w), w != 0
};

// Throws UnsupportedDegenerateError when the image is at infinity.
Point apply(const Mat3& t, const Point& p);
Line apply(const Mat3& t, const Line& l);
Arrangement apply(const Mat3& t, const Arrangement& a);

struct TransformWitness {
  Mat3 matrix;
  IsomorphismWitness correspondence;
};

SummaryTriple summary_triple(const Arrangement& a);

TypeVectors type_vectors(const Arrangement& a);

// Throws UnknownPointError when p is not a registration mark of a.
DegreeType point_line_degree_type(const Arrangement& a, const Point& p);

// Points and lines are indexed by their sorted order in the Arrangement.
IncidenceStructure incidence_structure(const Arrangement& a);

// Invariant-refinement plus backtracking over class-respecting labelings,
// taking the lexicographically minimal row-sorted incidence matrix.
CanonicalLabeling canonical_labeling(const IncidenceStructure& inc);

CanonicalCode canonical_code(const IncidenceStructure& inc);
CanonicalCode canonical_code(const Arrangement& a);

std::optional<IsomorphismWitness> is_isomorphic(const Arrangement& a1,
                                                const Arrangement& a2);

// A centrex carries equally many marks strictly on each side of every line
// through it, at least one per side. Returns all candidates in point order.
std::vector<Point> find_centrexes(const Arrangement& a);

// Throws NotACentrexError when z fails the centrex condition.
CentralSignature central_signature(const Arrangement& a, const Point& z);

// Cyclic-minimal form under rotation and reflection; signature comparisons
// are made on this form.
std::vector<std::size_t> canonical_cycle(const std::vector<std::size_t>& v);

// The arrangement-level signature: minimal canonical cycle over all
// centrexes; nullopt when no centrex exists.
std::optional<CentralSignature> best_central_signature(const Arrangement& a);

// True iff every pair of distinct marks lies on a common construction line.
bool is_linear_space(const Arrangement& a);

// Requires k >= 3 (throws TooFewPointsError).
DeBruijnErdosReport debruijn_erdos_check(const Arrangement& a);

// Detects the three named families; nullopt for anything else.
// Requires k >= 3 (throws TooFewPointsError).
std::optional<FamilyKind> classify(const Arrangement& a);

// Searches incidence isomorphisms and solves exactly for a nonsingular
// affine or projective map carrying L1 onto L2 and P1 onto P2. Projective
// witnesses must keep every point and line finite. Requires k >= 3 (affine)
// or k >= 4 (projective); throws UnsupportedDegenerateError below that.
std::optional<TransformWitness> projective_equivalent(const Arrangement& a1,
                                                      const Arrangement& a2,
                                                      TransformMode mode);

}  // namespace regmark
