#include "regmark/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace regmark {

std::string to_string(const SummaryTriple& t) {
  std::ostringstream os;
  os << "(" << t.n << " " << t.k << " " << t.s << ")";
  return os.str();
}

std::vector<std::size_t> padded(const std::vector<std::size_t>& v, std::size_t size) {
  std::vector<std::size_t> out = v;
  if (out.size() < size) out.resize(size, 0);
  return out;
}

std::size_t IncidenceStructure::line_size(std::size_t i) const {
  return static_cast<std::size_t>(std::popcount(line_masks[i]));
}

std::size_t IncidenceStructure::point_degree(std::size_t p) const {
  std::size_t d = 0;
  for (const auto mask : line_masks)
    if (mask >> p & 1) ++d;
  return d;
}

namespace {

std::vector<std::size_t> points_on_line(const Arrangement& a, const Line& l) {
  std::vector<std::size_t> idx;
  for (std::size_t p = 0; p < a.points.size(); ++p)
    if (l.contains(a.points[p])) idx.push_back(p);
  return idx;
}

std::vector<std::size_t> line_point_counts(const Arrangement& a) {
  std::vector<std::size_t> counts(a.lines.size(), 0);
  for (std::size_t i = 0; i < a.lines.size(); ++i)
    counts[i] = points_on_line(a, a.lines[i]).size();
  return counts;
}

void trim_trailing_zeros(std::vector<std::size_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

SummaryTriple summary_triple(const Arrangement& a) {
  std::set<Slope> slopes;
  for (const Line& l : a.lines) slopes.insert(slope_of(l));
  return SummaryTriple{a.lines.size(), a.points.size(), slopes.size()};
}

TypeVectors type_vectors(const Arrangement& a) {
  TypeVectors tv;
  const auto counts = line_point_counts(a);

  for (const std::size_t c : counts) {
    if (tv.line_type.size() <= c) tv.line_type.resize(c + 1, 0);
    ++tv.line_type[c];
  }

  // slope_type[v]: distinct slopes among the v-point lines.
  std::map<std::size_t, std::set<Slope>> slopes_by_count;
  for (std::size_t i = 0; i < a.lines.size(); ++i)
    slopes_by_count[counts[i]].insert(slope_of(a.lines[i]));
  for (const auto& [v, slopes] : slopes_by_count) {
    if (tv.slope_type.size() <= v) tv.slope_type.resize(v + 1, 0);
    tv.slope_type[v] = slopes.size();
  }

  for (const Point& p : a.points) {
    std::size_t degree = 0;
    for (const Line& l : a.lines)
      if (l.contains(p)) ++degree;
    // degree >= 2 in a valid arrangement
    const std::size_t slot = degree >= 2 ? degree - 2 : 0;
    if (tv.point_type.size() <= slot) tv.point_type.resize(slot + 1, 0);
    ++tv.point_type[slot];
  }

  trim_trailing_zeros(tv.line_type);
  trim_trailing_zeros(tv.slope_type);
  trim_trailing_zeros(tv.point_type);
  return tv;
}

DegreeType point_line_degree_type(const Arrangement& a, const Point& p) {
  if (std::find(a.points.begin(), a.points.end(), p) == a.points.end())
    throw UnknownPointError("point " + to_string(p) + " is not a registration mark");
  const auto counts = line_point_counts(a);
  DegreeType dt;
  dt.counts.assign(a.points.size(), 0);
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    if (!a.lines[i].contains(p)) continue;
    ++dt.degree;
    ++dt.counts[counts[i] - 1];  // a line through p carries at least p itself
  }
  return dt;
}

IncidenceStructure incidence_structure(const Arrangement& a) {
  if (a.points.size() > 64)
    throw Error("incidence structures support at most 64 points");
  IncidenceStructure inc;
  inc.num_points = a.points.size();
  inc.num_lines = a.lines.size();
  inc.line_masks.reserve(a.lines.size());
  for (const Line& l : a.lines) {
    std::uint64_t mask = 0;
    for (std::size_t p = 0; p < a.points.size(); ++p)
      if (l.contains(a.points[p])) mask |= std::uint64_t{1} << p;
    inc.line_masks.push_back(mask);
  }
  return inc;
}

namespace {

// Iterated color refinement. Class ids are assigned in key order each round,
// so the resulting partition and its ordering are label-independent.
std::vector<int> refined_point_classes(const IncidenceStructure& inc) {
  const std::size_t k = inc.num_points;
  const std::size_t n = inc.num_lines;
  std::vector<int> color(k, 0);
  std::size_t distinct = k == 0 ? 0 : 1;
  for (;;) {
    std::vector<int> line_color(n);
    {
      std::map<std::vector<int>, int> ids;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> key;
        key.push_back(static_cast<int>(inc.line_size(i)));
        for (std::size_t p = 0; p < k; ++p)
          if (inc.line_masks[i] >> p & 1) key.push_back(color[p]);
        std::sort(key.begin() + 1, key.end());
        line_color[i] = ids.emplace(std::move(key), static_cast<int>(ids.size()))
                            .first->second;
      }
    }
    std::vector<int> next(k);
    std::map<std::vector<int>, int> ids;
    for (std::size_t p = 0; p < k; ++p) {
      std::vector<int> key;
      key.push_back(color[p]);
      for (std::size_t i = 0; i < n; ++i)
        if (inc.line_masks[i] >> p & 1) key.push_back(line_color[i]);
      std::sort(key.begin() + 1, key.end());
      next[p] = ids.emplace(std::move(key), static_cast<int>(ids.size()))
                    .first->second;
    }
    color = std::move(next);
    if (ids.size() == distinct) break;
    distinct = ids.size();
  }
  return color;
}

struct LabelingSearch {
  const IncidenceStructure& inc;
  std::vector<std::vector<std::size_t>> classes;  // class id -> member points
  std::vector<std::size_t> position;              // point -> assigned position
  std::vector<std::size_t> perm;                  // position -> point
  std::vector<std::uint64_t> best_rows;
  std::vector<std::size_t> best_perm;
  bool has_best = false;

  explicit LabelingSearch(const IncidenceStructure& s) : inc(s) {
    const auto color = refined_point_classes(inc);
    int max_color = -1;
    for (const int c : color) max_color = std::max(max_color, c);
    classes.resize(static_cast<std::size_t>(max_color + 1));
    for (std::size_t p = 0; p < color.size(); ++p)
      classes[static_cast<std::size_t>(color[p])].push_back(p);
    position.assign(inc.num_points, 0);
    perm.assign(inc.num_points, 0);
  }

  void leaf() {
    std::vector<std::uint64_t> rows(inc.num_lines, 0);
    for (std::size_t i = 0; i < inc.num_lines; ++i) {
      std::uint64_t mask = inc.line_masks[i];
      std::uint64_t row = 0;
      while (mask) {
        const int p = std::countr_zero(mask);
        mask &= mask - 1;
        row |= std::uint64_t{1} << position[static_cast<std::size_t>(p)];
      }
      rows[i] = row;
    }
    std::sort(rows.begin(), rows.end());
    if (!has_best || rows < best_rows) {
      best_rows = std::move(rows);
      best_perm = perm;
      has_best = true;
    }
  }

  void dfs(std::size_t class_idx, std::size_t slot, std::size_t base) {
    if (class_idx == classes.size()) {
      leaf();
      return;
    }
    auto& members = classes[class_idx];
    if (slot == members.size()) {
      dfs(class_idx + 1, 0, base + members.size());
      return;
    }
    for (std::size_t i = slot; i < members.size(); ++i) {
      std::swap(members[slot], members[i]);
      const std::size_t point = members[slot];
      position[point] = base + slot;
      perm[base + slot] = point;
      dfs(class_idx, slot + 1, base);
      std::swap(members[slot], members[i]);
    }
  }
};

std::string encode_rows(std::size_t k, std::size_t n,
                        const std::vector<std::uint64_t>& rows) {
  std::ostringstream os;
  os << "P" << k << "L" << n << "|" << std::hex;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ":";
    os << rows[i];
  }
  return os.str();
}

}  // namespace

CanonicalLabeling canonical_labeling(const IncidenceStructure& inc) {
  LabelingSearch search(inc);
  search.dfs(0, 0, 0);
  if (!search.has_best) search.leaf();  // k = 0: the single empty labeling

  CanonicalLabeling out;
  out.point_order = search.best_perm;

  // Lines ordered by their canonical rows; ties keep original order (tied
  // rows are identical, so any choice preserves incidence).
  std::vector<std::size_t> position(inc.num_points, 0);
  for (std::size_t pos = 0; pos < out.point_order.size(); ++pos)
    position[out.point_order[pos]] = pos;
  std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
  for (std::size_t i = 0; i < inc.num_lines; ++i) {
    std::uint64_t mask = inc.line_masks[i];
    std::uint64_t row = 0;
    while (mask) {
      const int p = std::countr_zero(mask);
      mask &= mask - 1;
      row |= std::uint64_t{1} << position[static_cast<std::size_t>(p)];
    }
    keyed.emplace_back(row, i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::uint64_t> rows;
  for (const auto& [row, idx] : keyed) {
    rows.push_back(row);
    out.line_order.push_back(idx);
  }
  out.code = encode_rows(inc.num_points, inc.num_lines, rows);
  return out;
}

CanonicalCode canonical_code(const IncidenceStructure& inc) {
  return canonical_labeling(inc).code;
}

CanonicalCode canonical_code(const Arrangement& a) {
  return canonical_code(incidence_structure(a));
}

std::optional<IsomorphismWitness> is_isomorphic(const Arrangement& a1,
                                                const Arrangement& a2) {
  const auto lab1 = canonical_labeling(incidence_structure(a1));
  const auto lab2 = canonical_labeling(incidence_structure(a2));
  if (lab1.code != lab2.code) return std::nullopt;

  IsomorphismWitness w;
  w.point_map.assign(a1.points.size(), 0);
  w.line_map.assign(a1.lines.size(), 0);
  for (std::size_t pos = 0; pos < lab1.point_order.size(); ++pos)
    w.point_map[lab1.point_order[pos]] = lab2.point_order[pos];
  for (std::size_t pos = 0; pos < lab1.line_order.size(); ++pos)
    w.line_map[lab1.line_order[pos]] = lab2.line_order[pos];
  return w;
}

namespace {

struct Dir {
  BigInt dx, dy;

  static Dir of(const Point& from, const Point& to) {
    Rational ddx = to.x - from.x;
    Rational ddy = to.y - from.y;
    // Clear denominators, then reduce; the actual ray direction keeps its sign.
    BigInt nx = numerator(ddx) * denominator(ddy);
    BigInt ny = numerator(ddy) * denominator(ddx);
    using boost::multiprecision::gcd;
    BigInt g = gcd(abs(nx), abs(ny));
    return Dir{nx / g, ny / g};
  }

  Dir opposite() const { return Dir{-dx, -dy}; }

  bool operator==(const Dir& o) const { return dx == o.dx && dy == o.dy; }
  bool lex_less(const Dir& o) const {
    if (dx != o.dx) return dx < o.dx;
    return dy < o.dy;
  }
};

int half_of(const Dir& d) {
  return (d.dy < 0 || (d.dy == 0 && d.dx < 0)) ? 1 : 0;  // [0,pi) first
}

bool ccw_less(const Dir& a, const Dir& b) {
  const int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return a.dx * b.dy - a.dy * b.dx > 0;
}

// Splits the marks on every line through z by side. Returns nullopt when z
// fails the centrex condition (unequal sides, or a line with no marks off z).
std::optional<std::vector<std::pair<Dir, std::size_t>>> spokes_at(
    const Arrangement& a, const Point& z) {
  std::vector<std::pair<Dir, std::size_t>> spokes;
  for (const Line& l : a.lines) {
    if (!l.contains(z)) continue;
    const Slope s = slope_of(l);
    const Dir forward{s.dx, s.dy};
    std::size_t ahead = 0, behind = 0;
    for (const Point& p : a.points) {
      if (p == z || !l.contains(p)) continue;
      const Dir d = Dir::of(z, p);
      if (d == forward)
        ++ahead;
      else
        ++behind;
    }
    if (ahead != behind || ahead == 0) return std::nullopt;
    spokes.emplace_back(forward, ahead);
    spokes.emplace_back(forward.opposite(), behind);
  }
  return spokes;
}

}  // namespace

std::vector<Point> find_centrexes(const Arrangement& a) {
  std::vector<Point> out;
  for (const Point& z : a.points)
    if (spokes_at(a, z)) out.push_back(z);
  return out;
}

CentralSignature central_signature(const Arrangement& a, const Point& z) {
  if (std::find(a.points.begin(), a.points.end(), z) == a.points.end())
    throw UnknownPointError("point " + to_string(z) + " is not a registration mark");
  auto spokes = spokes_at(a, z);
  if (!spokes)
    throw NotACentrexError("point " + to_string(z) + " is not a centrex");

  std::sort(spokes->begin(), spokes->end(),
            [](const auto& x, const auto& y) { return ccw_less(x.first, y.first); });
  std::size_t start = 0;
  for (std::size_t i = 1; i < spokes->size(); ++i)
    if ((*spokes)[i].first.lex_less((*spokes)[start].first)) start = i;
  std::rotate(spokes->begin(), spokes->begin() + static_cast<std::ptrdiff_t>(start),
              spokes->end());

  CentralSignature sig;
  sig.centrex = z;
  sig.degree = spokes->size() / 2;
  for (const auto& [dir, count] : *spokes) sig.spokes.push_back(count);
  sig.signature.assign(sig.spokes.begin(),
                       sig.spokes.begin() + static_cast<std::ptrdiff_t>(sig.degree));
  return sig;
}

std::vector<std::size_t> canonical_cycle(const std::vector<std::size_t>& v) {
  if (v.empty()) return v;
  std::vector<std::size_t> best = v;
  for (int flip = 0; flip < 2; ++flip) {
    std::vector<std::size_t> cur = v;
    if (flip) std::reverse(cur.begin(), cur.end());
    for (std::size_t r = 0; r < cur.size(); ++r) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur < best) best = cur;
    }
  }
  return best;
}

std::optional<CentralSignature> best_central_signature(const Arrangement& a) {
  std::optional<CentralSignature> best;
  std::vector<std::size_t> best_key;
  for (const Point& z : find_centrexes(a)) {
    CentralSignature sig = central_signature(a, z);
    auto key = canonical_cycle(sig.signature);
    if (!best || key < best_key) {
      best = std::move(sig);
      best_key = std::move(key);
    }
  }
  return best;
}

bool is_linear_space(const Arrangement& a) {
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    for (std::size_t j = i + 1; j < a.points.size(); ++j) {
      const Line join = line_through(a.points[i], a.points[j]);
      if (!std::binary_search(a.lines.begin(), a.lines.end(), join)) return false;
    }
  }
  return true;
}

DeBruijnErdosReport debruijn_erdos_check(const Arrangement& a) {
  if (a.points.size() < 3)
    throw TooFewPointsError("the line bound check requires k >= 3");
  DeBruijnErdosReport rep;
  rep.n = a.lines.size();
  rep.k = a.points.size();
  rep.linear_space = is_linear_space(a);
  if (!rep.linear_space) {
    rep.message = "not a linear space: some pair of marks has no joining line in L";
    return rep;
  }
  rep.bound_holds = rep.n >= rep.k;
  rep.equality = rep.n == rep.k;
  if (rep.equality) {
    const auto counts = line_point_counts(a);
    const std::size_t big =
        static_cast<std::size_t>(std::count(counts.begin(), counts.end(), rep.k - 1));
    const std::size_t two =
        static_cast<std::size_t>(std::count(counts.begin(), counts.end(), 2));
    rep.near_pencil_structure = big == 1 && big + two == counts.size();
    // The only other equality structure is the uniform one (a projective
    // plane), which Euclidean construction lines should never produce.
    if (!rep.near_pencil_structure) {
      const bool uniform_lines =
          std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) ==
          counts.end();
      bool uniform_points = true;
      std::size_t first_degree = 0;
      for (std::size_t p = 0; p < a.points.size(); ++p) {
        std::size_t d = 0;
        for (const Line& l : a.lines)
          if (l.contains(a.points[p])) ++d;
        if (p == 0)
          first_degree = d;
        else if (d != first_degree)
          uniform_points = false;
      }
      rep.projective_plane_pattern =
          uniform_lines && uniform_points && !counts.empty() && counts[0] == first_degree;
      rep.anomaly = true;
      rep.message = rep.projective_plane_pattern
                        ? "anomaly: n = k with the uniform (projective-plane) "
                          "structure, which no set of Euclidean lines realizes"
                        : "anomaly: n = k but neither equality structure matched";
      return rep;
    }
  }
  rep.message = rep.bound_holds ? "n >= k holds" : "n >= k FAILS";
  return rep;
}

std::optional<FamilyKind> classify(const Arrangement& a) {
  const std::size_t k = a.points.size();
  if (k < 3) throw TooFewPointsError("family classification requires k >= 3");
  const std::size_t n = a.lines.size();
  const auto counts = line_point_counts(a);

  // Railtrack: one line with all k marks, every other line carrying one.
  if (n == k + 1) {
    bool base_seen = false, ok = true;
    for (const std::size_t c : counts) {
      if (c == k && !base_seen)
        base_seen = true;
      else if (c != 1)
        ok = false;
    }
    if (base_seen && ok) return FamilyKind::Railtrack;
  }

  // Near-pencil: a (k-1)-point base, all other lines joining the apex to it.
  if (n == k) {
    for (std::size_t b = 0; b < n; ++b) {
      if (counts[b] != k - 1) continue;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        if (i != b && counts[i] != 2) ok = false;
      if (!ok) continue;
      // the one mark off the base must lie on every other line
      for (const Point& p : a.points) {
        if (a.lines[b].contains(p)) continue;
        for (std::size_t i = 0; i < n && ok; ++i)
          if (i != b && !a.lines[i].contains(p)) ok = false;
        break;
      }
      if (ok) return FamilyKind::NearPencil;
    }
  }

  // Augmented near-pencil: near-pencil plus the one-mark line at the apex.
  if (n == k + 1) {
    std::size_t one_line = n, base = n;
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (counts[i] == 1) {
        one_line = i;
        ++ones;
      }
    if (ones == 1) {
      std::size_t apex_idx = a.points.size();
      for (std::size_t p = 0; p < a.points.size(); ++p)
        if (a.lines[one_line].contains(a.points[p])) apex_idx = p;
      if (apex_idx < a.points.size()) {
        const Point& apex = a.points[apex_idx];
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          if (i == one_line) continue;
          if (a.lines[i].contains(apex)) {
            if (counts[i] != 2) ok = false;  // spokes carry apex + one base mark
          } else {
            if (base != n || counts[i] != k - 1) ok = false;
            base = i;
          }
        }
        if (ok && base != n) return FamilyKind::AugmentedNearPencil;
      }
    }
  }

  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Affine / projective equivalence
// ---------------------------------------------------------------------------

Mat3 Mat3::identity() {
  Mat3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t.m[r][c] = (r == c) ? 1 : 0;
  return t;
}

Mat3 Mat3::affine(const Rational& a, const Rational& b, const Rational& tx,
                  const Rational& c, const Rational& d, const Rational& ty) {
  Mat3 t = identity();
  t.m[0][0] = a;
  t.m[0][1] = b;
  t.m[0][2] = tx;
  t.m[1][0] = c;
  t.m[1][1] = d;
  t.m[1][2] = ty;
  return t;
}

Rational Mat3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool Mat3::is_affine() const {
  return m[2][0] == 0 && m[2][1] == 0 && m[2][2] != 0;
}

Point apply(const Mat3& t, const Point& p) {
  const Rational w = t.m[2][0] * p.x + t.m[2][1] * p.y + t.m[2][2];
  if (w == 0)
    throw UnsupportedDegenerateError("point " + to_string(p) + " maps to infinity");
  const Rational x = t.m[0][0] * p.x + t.m[0][1] * p.y + t.m[0][2];
  const Rational y = t.m[1][0] * p.x + t.m[1][1] * p.y + t.m[1][2];
  return Point{x / w, y / w};
}

namespace {

Mat3 adjugate(const Mat3& t) {
  Mat3 a;
  const auto& m = t.m;
  a.m[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  a.m[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  a.m[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  a.m[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  a.m[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  a.m[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  a.m[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  a.m[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  a.m[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return a;
}

}  // namespace

Line apply(const Mat3& t, const Line& l) {
  // A line vector transforms by the inverse transpose; the adjugate gives it
  // up to the (nonzero) determinant factor. Our lines are a x + b y = c,
  // i.e. homogeneous vector (a, b, -c).
  const Mat3 adj = adjugate(t);
  const Rational va(l.a), vb(l.b), vc(-l.c);
  const Rational ia = adj.m[0][0] * va + adj.m[1][0] * vb + adj.m[2][0] * vc;
  const Rational ib = adj.m[0][1] * va + adj.m[1][1] * vb + adj.m[2][1] * vc;
  const Rational ic = adj.m[0][2] * va + adj.m[1][2] * vb + adj.m[2][2] * vc;
  if (ia == 0 && ib == 0)
    throw UnsupportedDegenerateError("line " + to_string(l) +
                                     " maps to the line at infinity");
  return Line::normalized(ia, ib, -ic);
}

Arrangement apply(const Mat3& t, const Arrangement& a) {
  std::vector<Line> lines;
  lines.reserve(a.lines.size());
  for (const Line& l : a.lines) lines.push_back(apply(t, l));
  std::vector<Point> points;
  points.reserve(a.points.size());
  for (const Point& p : a.points) points.push_back(apply(t, p));
  std::sort(lines.begin(), lines.end());
  std::sort(points.begin(), points.end());
  return Arrangement{std::move(lines), std::move(points)};
}

namespace {

// A 9-vector of coefficients for the row-major entries of H.
using HRow = std::array<Rational, 9>;

std::vector<HRow> nullspace_basis(std::vector<HRow> rows) {
  std::size_t rank = 0;
  std::array<int, 9> pivot_of_col;
  pivot_of_col.fill(-1);
  for (std::size_t col = 0; col < 9 && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = rows[rank][col];
    for (auto& x : rows[rank]) x /= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = 0; c < 9; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  std::vector<HRow> basis;
  for (std::size_t col = 0; col < 9; ++col) {
    if (pivot_of_col[col] != -1) continue;
    HRow v{};
    v[col] = 1;
    for (std::size_t c = 0; c < 9; ++c) {
      if (pivot_of_col[c] == -1) continue;
      v[c] = -rows[static_cast<std::size_t>(pivot_of_col[c])][col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat3 from_hvec(const HRow& h) {
  Mat3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t.m[r][c] = h[static_cast<std::size_t>(3 * r + c)];
  return t;
}

// Incidence bookkeeping used by the correspondence search.
struct IncidenceView {
  const Arrangement& arr;
  std::vector<std::vector<std::size_t>> line_points;
  std::vector<std::vector<std::size_t>> point_lines;
  std::vector<std::vector<int>> joining_line;  // k x k, -1 when none
  std::vector<std::vector<std::size_t>> degree_keys;

  explicit IncidenceView(const Arrangement& a) : arr(a) {
    const std::size_t k = a.points.size();
    line_points.resize(a.lines.size());
    point_lines.resize(k);
    for (std::size_t i = 0; i < a.lines.size(); ++i) {
      line_points[i] = points_on_line(a, a.lines[i]);
      for (const std::size_t p : line_points[i]) point_lines[p].push_back(i);
    }
    joining_line.assign(k, std::vector<int>(k, -1));
    for (std::size_t i = 0; i < line_points.size(); ++i)
      for (std::size_t x = 0; x < line_points[i].size(); ++x)
        for (std::size_t y = x + 1; y < line_points[i].size(); ++y) {
          joining_line[line_points[i][x]][line_points[i][y]] = static_cast<int>(i);
          joining_line[line_points[i][y]][line_points[i][x]] = static_cast<int>(i);
        }
    degree_keys.resize(k);
    for (std::size_t p = 0; p < k; ++p) {
      std::vector<std::size_t> key;
      for (const std::size_t l : point_lines[p]) key.push_back(line_points[l].size());
      std::sort(key.begin(), key.end());
      degree_keys[p] = std::move(key);
    }
  }

  std::size_t one_point_line_at(std::size_t p) const {
    for (const std::size_t l : point_lines[p])
      if (line_points[l].size() == 1) return l;
    return line_points.size();
  }
};

// Enumerates incidence-preserving point bijections, most-constrained first.
struct CorrespondenceSearch {
  const IncidenceView& v1;
  const IncidenceView& v2;
  std::vector<std::size_t> map;   // a1 point -> a2 point
  std::vector<bool> used;
  std::vector<std::vector<std::size_t>>& out;
  std::size_t cap;

  CorrespondenceSearch(const IncidenceView& a, const IncidenceView& b,
                       std::vector<std::vector<std::size_t>>& sink, std::size_t limit)
      : v1(a), v2(b), out(sink), cap(limit) {
    map.assign(v1.arr.points.size(), 0);
    used.assign(v2.arr.points.size(), false);
  }

  bool consistent(std::size_t p, std::size_t q, std::size_t depth) const {
    if (v1.degree_keys[p] != v2.degree_keys[q]) return false;
    for (std::size_t prev = 0; prev < depth; ++prev) {
      const int l1 = v1.joining_line[p][prev];
      const int l2 = v2.joining_line[q][map[prev]];
      if ((l1 == -1) != (l2 == -1)) return false;
      if (l1 != -1 && v1.line_points[static_cast<std::size_t>(l1)].size() !=
                          v2.line_points[static_cast<std::size_t>(l2)].size())
        return false;
    }
    return true;
  }

  void dfs(std::size_t depth) {
    if (out.size() >= cap) return;
    if (depth == map.size()) {
      out.push_back(map);
      return;
    }
    for (std::size_t q = 0; q < used.size(); ++q) {
      if (used[q] || !consistent(depth, q, depth)) continue;
      used[q] = true;
      map[depth] = q;
      dfs(depth + 1);
      used[q] = false;
    }
  }
};

// Builds the full line correspondence induced by a point bijection, or
// nullopt when some line has no exact partner.
std::optional<std::vector<std::size_t>> induced_line_map(
    const IncidenceView& v1, const IncidenceView& v2,
    const std::vector<std::size_t>& point_map) {
  std::vector<std::size_t> line_map(v1.line_points.size(),
                                    v2.line_points.size());
  std::vector<bool> taken(v2.line_points.size(), false);
  for (std::size_t l = 0; l < v1.line_points.size(); ++l) {
    const auto& pts = v1.line_points[l];
    if (pts.empty()) return std::nullopt;  // no zero-point lines at k >= 3
    std::size_t target;
    if (pts.size() == 1) {
      target = v2.one_point_line_at(point_map[pts[0]]);
      if (target == v2.line_points.size()) return std::nullopt;
    } else {
      const int t = v2.joining_line[point_map[pts[0]]][point_map[pts[1]]];
      if (t == -1) return std::nullopt;
      target = static_cast<std::size_t>(t);
    }
    std::vector<std::size_t> image;
    for (const std::size_t p : pts) image.push_back(point_map[p]);
    std::sort(image.begin(), image.end());
    if (image != v2.line_points[target]) return std::nullopt;
    if (taken[target]) return std::nullopt;
    taken[target] = true;
    line_map[l] = target;
  }
  return line_map;
}

bool verify_witness(const Mat3& h, const Arrangement& a1, const Arrangement& a2,
                    const std::vector<std::size_t>& point_map,
                    const std::vector<std::size_t>& line_map) {
  try {
    for (std::size_t p = 0; p < a1.points.size(); ++p)
      if (apply(h, a1.points[p]) != a2.points[point_map[p]]) return false;
    for (std::size_t l = 0; l < a1.lines.size(); ++l)
      if (apply(h, a1.lines[l]) != a2.lines[line_map[l]]) return false;
  } catch (const UnsupportedDegenerateError&) {
    return false;  // something landed at infinity
  }
  return true;
}

Mat3 scaled_representative(const Mat3& h) {
  // Scale so the first nonzero entry is 1; purely cosmetic.
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (h.m[r][c] != 0) {
        Mat3 out;
        const Rational f = h.m[r][c];
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) out.m[i][j] = h.m[i][j] / f;
        return out;
      }
  return h;
}

}  // namespace

std::optional<TransformWitness> projective_equivalent(const Arrangement& a1,
                                                      const Arrangement& a2,
                                                      TransformMode mode) {
  const std::size_t need = mode == TransformMode::Affine ? 3 : 4;
  if (a1.points.size() < need || a2.points.size() < need)
    throw UnsupportedDegenerateError(
        "equivalence search requires k >= " + std::to_string(need) +
        (mode == TransformMode::Affine ? " (affine mode)" : " (projective mode)"));
  if (a1.points.size() != a2.points.size() || a1.lines.size() != a2.lines.size())
    return std::nullopt;

  const IncidenceView v1(a1), v2(a2);
  std::vector<std::vector<std::size_t>> point_maps;
  CorrespondenceSearch search(v1, v2, point_maps, 20000);
  search.dfs(0);

  for (const auto& point_map : point_maps) {
    const auto line_map = induced_line_map(v1, v2, point_map);
    if (!line_map) continue;

    std::vector<HRow> rows;
    if (mode == TransformMode::Affine) {
      HRow r1{};
      r1[6] = 1;
      rows.push_back(r1);
      HRow r2{};
      r2[7] = 1;
      rows.push_back(r2);
    }
    // Point constraints: H p proportional to its target, via two components
    // of the homogeneous cross product.
    for (std::size_t p = 0; p < a1.points.size(); ++p) {
      const Point& src = a1.points[p];
      const Point& dst = a2.points[point_map[p]];
      const Rational sx = src.x, sy = src.y;
      HRow row_y{};  // (H p)_y - dst.y * (H p)_w = 0
      row_y[3] = sx;
      row_y[4] = sy;
      row_y[5] = 1;
      row_y[6] = -dst.y * sx;
      row_y[7] = -dst.y * sy;
      row_y[8] = -dst.y;
      rows.push_back(row_y);
      HRow row_x{};  // dst.x * (H p)_w - (H p)_x = 0
      row_x[0] = -sx;
      row_x[1] = -sy;
      row_x[2] = Rational(-1);
      row_x[6] = dst.x * sx;
      row_x[7] = dst.x * sy;
      row_x[8] = dst.x;
      rows.push_back(row_x);
    }
    // Line constraints: H^T m proportional to l, with l = (a, b, -c).
    for (std::size_t l = 0; l < a1.lines.size(); ++l) {
      const Line& src = a1.lines[l];
      const Line& dst = a2.lines[(*line_map)[l]];
      const Rational la(src.a), lb(src.b), lc(-src.c);
      const Rational ma(dst.a), mb(dst.b), mc(-dst.c);
      // v = H^T m has components v_i = sum_r H[r][i] * m_r; cross(v, l) = 0.
      const auto v_coeff = [&](int i, HRow& row, const Rational& factor) {
        row[static_cast<std::size_t>(i)] += ma * factor;
        row[static_cast<std::size_t>(3 + i)] += mb * factor;
        row[static_cast<std::size_t>(6 + i)] += mc * factor;
      };
      HRow r1{};  // v_y * l_w - v_w * l_y = 0
      v_coeff(1, r1, lc);
      v_coeff(2, r1, -lb);
      rows.push_back(r1);
      HRow r2{};  // v_w * l_x - v_x * l_w = 0
      v_coeff(2, r2, la);
      v_coeff(0, r2, -lc);
      rows.push_back(r2);
      HRow r3{};  // v_x * l_y - v_y * l_x = 0
      v_coeff(0, r3, lb);
      v_coeff(1, r3, -la);
      rows.push_back(r3);
    }

    const auto basis = nullspace_basis(std::move(rows));
    if (basis.empty()) continue;

    const auto try_candidate = [&](const HRow& h) -> std::optional<Mat3> {
      const Mat3 cand = from_hvec(h);
      if (cand.det() == 0) return std::nullopt;
      if (mode == TransformMode::Affine && !cand.is_affine()) return std::nullopt;
      if (verify_witness(cand, a1, a2, point_map, *line_map))
        return scaled_representative(cand);
      return std::nullopt;
    };

    if (basis.size() == 1) {
      if (const auto got = try_candidate(basis[0]))
        return TransformWitness{*got, {point_map, *line_map}};
      continue;
    }
    // Sample small deterministic coefficient combinations of the basis.
    const int radius = basis.size() == 2 ? 8 : 2;
    std::vector<int> coeff(basis.size(), -radius);
    std::size_t budget = 40000;
    for (;;) {
      bool all_zero = true;
      for (const int c : coeff)
        if (c != 0) all_zero = false;
      if (!all_zero) {
        HRow h{};
        for (std::size_t b = 0; b < basis.size(); ++b)
          for (std::size_t i = 0; i < 9; ++i) h[i] += Rational(coeff[b]) * basis[b][i];
        if (const auto got = try_candidate(h))
          return TransformWitness{*got, {point_map, *line_map}};
      }
      std::size_t pos = 0;
      while (pos < coeff.size() && coeff[pos] == radius) coeff[pos++] = -radius;
      if (pos == coeff.size() || --budget == 0) break;
      ++coeff[pos];
    }
  }
  return std::nullopt;
}

}  // namespace regmark
