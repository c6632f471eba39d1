#include "regmark/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

namespace regmark {

namespace {

using Mask = std::uint64_t;

// ---------------------------------------------------------------------------
// Abstract candidate generation
// ---------------------------------------------------------------------------

// A new line may share at most one point with each existing line, and the
// shares-no-point relation must stay transitive. Violations never heal when
// more lines arrive, so both checks prune permanently.
bool extension_ok(const std::vector<Mask>& rows, Mask x) {
  for (const Mask r : rows)
    if (std::popcount(r & x) > 1) return false;
  // Indices, not values: duplicate one-point rows are distinct lines.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((rows[i] & x) != 0) continue;  // rows[i] not parallel to x
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == i) continue;
      if ((rows[i] & rows[j]) == 0 && (rows[j] & x) != 0) return false;
      if ((rows[j] & x) == 0 && (rows[i] & rows[j]) != 0) return false;
    }
  }
  return true;
}

// Every point still short of two lines needs that many further lines
// through it; prune when the remaining room cannot supply them.
bool completable(const std::vector<Mask>& rows, std::size_t k,
                 std::size_t remaining) {
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t deg = 0;
    for (const Mask r : rows)
      if (r >> p & 1) ++deg;
    if (deg < 2 && 2 - deg > remaining) return false;
  }
  return true;
}

bool all_points_covered(const std::vector<Mask>& rows, std::size_t k) {
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t deg = 0;
    for (const Mask r : rows)
      if (r >> p & 1) ++deg;
    if (deg < 2) return false;
  }
  return true;
}

CanonicalCode code_of_rows(std::size_t k, const std::vector<Mask>& rows) {
  IncidenceStructure inc;
  inc.num_points = k;
  inc.num_lines = rows.size();
  inc.line_masks = rows;
  return canonical_code(inc);
}

// All non-isomorphic extendable structures with m = 0..n_max lines. Children
// are generated from every representative by every admissible line, with
// isomorph rejection per level; completeness follows because any prefix of a
// target structure is isomorphic to some kept representative.
std::vector<std::vector<std::vector<Mask>>> generate_levels(std::size_t k,
                                                            std::size_t n_max) {
  if (k > 20) throw Error("abstract enumeration supports at most 20 points");
  std::vector<std::vector<std::vector<Mask>>> levels(n_max + 1);
  levels[0].push_back({});
  const Mask all = (Mask{1} << k) - 1;
  for (std::size_t m = 0; m < n_max; ++m) {
    std::unordered_set<std::string> seen;
    for (const auto& parent : levels[m]) {
      for (Mask x = 1; x <= all; ++x) {
        if (!extension_ok(parent, x)) continue;
        std::vector<Mask> child = parent;
        child.push_back(x);
        if (!completable(child, k, n_max - m - 1)) continue;
        CanonicalCode code = code_of_rows(k, child);
        if (seen.insert(std::move(code)).second)
          levels[m + 1].push_back(std::move(child));
      }
    }
  }
  return levels;
}

AbstractCandidate candidate_from_rows(std::size_t k, const std::vector<Mask>& rows) {
  AbstractCandidate c;
  c.num_points = k;
  c.num_lines = rows.size();
  c.incidences.num_points = k;
  c.incidences.num_lines = rows.size();
  c.incidences.line_masks = rows;
  c.code = code_of_rows(k, rows);

  std::vector<int> class_of(rows.size(), -1);
  int next_class = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (class_of[i] != -1) continue;
    class_of[i] = next_class;
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if ((rows[i] & rows[j]) == 0) class_of[j] = next_class;
    ++next_class;
  }
  c.parallel_classes.resize(static_cast<std::size_t>(next_class));
  for (std::size_t i = 0; i < rows.size(); ++i)
    c.parallel_classes[static_cast<std::size_t>(class_of[i])].push_back(i);
  return c;
}

// ---------------------------------------------------------------------------
// Realization
// ---------------------------------------------------------------------------

std::vector<Rational> offset_ladder(std::size_t count) {
  std::vector<Rational> out{Rational(0)};
  const auto push = [&](long long p, long long q) {
    if (std::gcd(p, q) != 1) return;
    out.emplace_back(BigInt(p), BigInt(q));
    if (out.size() < count) out.emplace_back(BigInt(-p), BigInt(q));
  };
  // Values ordered by max(|p|, q): 0, 1, -1, 2, -2, 1/2, -1/2, 3, ...
  for (long long mag = 1; out.size() < count; ++mag) {
    for (long long q = 1; q <= mag && out.size() < count; ++q) push(mag, q);
    for (long long p = 1; p < mag && out.size() < count; ++p) push(p, mag);
  }
  out.resize(count);
  return out;
}

std::vector<Slope> slope_ladder(std::size_t count) {
  std::vector<Slope> out;
  for (long long mag = 1; out.size() < count; ++mag) {
    for (long long a = 1; a <= mag && out.size() < count; ++a) {
      const auto push = [&](long long dx, long long dy) {
        if (std::gcd(dx, std::abs(dy)) != 1) return;
        out.push_back(Slope{BigInt(dx), BigInt(dy)});
      };
      if (mag == 1 && a == 1) {
        push(1, 0);
        out.push_back(Slope{BigInt(0), BigInt(1)});
        push(1, 1);
        push(1, -1);
        continue;
      }
      if (a == mag) continue;
      // pairs {mag, a} in both orders and both signs of the second leg
      push(mag, a);
      push(a, mag);
      push(mag, -a);
      push(a, -mag);
    }
  }
  out.resize(count);
  return out;
}

struct RealizeState {
  std::vector<std::optional<Line>> placed;
  std::vector<std::optional<Point>> coords;
  std::vector<std::optional<Slope>> class_slope;
  std::map<Point, std::size_t> owner;  // realized coordinates -> point id
  std::size_t placed_count = 0;
};

class Realizer {
 public:
  Realizer(const AbstractCandidate& cand, std::vector<Slope> slopes,
           std::vector<Rational> offsets, std::size_t max_nodes)
      : cand_(cand),
        slopes_(std::move(slopes)),
        offsets_(std::move(offsets)),
        max_nodes_(max_nodes) {
    line_class_.assign(cand.num_lines, 0);
    for (std::size_t c = 0; c < cand.parallel_classes.size(); ++c)
      for (const std::size_t l : cand.parallel_classes[c]) line_class_[l] = c;
    shared_.assign(cand.num_lines, std::vector<int>(cand.num_lines, -1));
    for (std::size_t i = 0; i < cand.num_lines; ++i)
      for (std::size_t j = i + 1; j < cand.num_lines; ++j) {
        const Mask common = cand.incidences.line_masks[i] & cand.incidences.line_masks[j];
        if (common) {
          shared_[i][j] = shared_[j][i] = std::countr_zero(common);
        }
      }
  }

  std::optional<Arrangement> run() {
    RealizeState st;
    st.placed.assign(cand_.num_lines, std::nullopt);
    st.coords.assign(cand_.num_points, std::nullopt);
    st.class_slope.assign(cand_.parallel_classes.size(), std::nullopt);
    solve(st);
    return found_;
  }

  bool exhausted() const { return exhausted_; }

 private:
  bool on_line(std::size_t line, std::size_t point) const {
    return cand_.incidences.line_masks[line] >> point & 1;
  }

  bool slope_taken(const RealizeState& st, std::size_t cls, const Slope& s) const {
    for (std::size_t c = 0; c < st.class_slope.size(); ++c)
      if (c != cls && st.class_slope[c] && *st.class_slope[c] == s) return true;
    return false;
  }

  Line line_with_slope(const Slope& s, const Point& through) const {
    const Rational c = Rational(s.dy) * through.x - Rational(s.dx) * through.y;
    return Line::normalized(Rational(s.dy), Rational(-s.dx), c);
  }

  Line line_with_offset(const Slope& s, const Rational& c) const {
    return Line::normalized(Rational(s.dy), Rational(-s.dx), c);
  }

  // Mutates st; false when the placement contradicts the candidate.
  bool try_place(RealizeState& st, std::size_t l, const Line& line) {
    for (std::size_t j = 0; j < cand_.num_lines; ++j)
      if (st.placed[j] && *st.placed[j] == line) return false;
    // A line must avoid every realized mark it does not carry.
    for (std::size_t p = 0; p < cand_.num_points; ++p)
      if (st.coords[p] && !on_line(l, p) && line.contains(*st.coords[p]))
        return false;

    st.placed[l] = line;
    ++st.placed_count;
    for (std::size_t j = 0; j < cand_.num_lines; ++j) {
      if (j == l || !st.placed[j]) continue;
      if (line_class_[j] == line_class_[l]) continue;  // parallel by slope
      const auto meet = intersect(line, *st.placed[j]);
      if (!meet) return false;  // distinct class slopes should intersect
      const int sp = shared_[l][j];
      const std::size_t point = static_cast<std::size_t>(sp);
      if (st.coords[point]) {
        if (*st.coords[point] != *meet) return false;
      } else {
        if (st.owner.count(*meet)) return false;  // two marks collide
        // The fresh mark must avoid every placed line it is not on.
        for (std::size_t m = 0; m < cand_.num_lines; ++m)
          if (st.placed[m] && !on_line(m, point) && st.placed[m]->contains(*meet))
            return false;
        st.coords[point] = *meet;
        st.owner.emplace(*meet, point);
      }
    }
    return true;
  }

  bool finish(const RealizeState& st) {
    std::vector<Line> lines;
    for (const auto& l : st.placed) lines.push_back(*l);
    Arrangement arr = from_lines(std::move(lines));
    if (arr.points.size() != cand_.num_points) return false;
    if (canonical_code(arr) != cand_.code) return false;
    found_ = std::move(arr);
    return true;
  }

  bool branch(const RealizeState& base, std::size_t l,
              const std::optional<Slope>& assign_slope, const Line& line) {
    RealizeState st = base;
    if (assign_slope) st.class_slope[line_class_[l]] = *assign_slope;
    if (!try_place(st, l, line)) return false;
    return solve(st);
  }

  bool solve(RealizeState& st) {
    if (exhausted_) return false;
    if (++nodes_ > max_nodes_) {
      exhausted_ = true;
      return false;
    }
    if (st.placed_count == cand_.num_lines) return finish(st);

    // Most constrained line first: realized marks, then a known class slope.
    std::size_t pick = cand_.num_lines;
    std::size_t pick_realized = 0;
    bool pick_slope_known = false;
    for (std::size_t l = 0; l < cand_.num_lines; ++l) {
      if (st.placed[l]) continue;
      std::size_t realized = 0;
      for (std::size_t p = 0; p < cand_.num_points; ++p)
        if (on_line(l, p) && st.coords[p]) ++realized;
      const bool slope_known = st.class_slope[line_class_[l]].has_value();
      if (pick == cand_.num_lines || realized > pick_realized ||
          (realized == pick_realized && slope_known && !pick_slope_known)) {
        pick = l;
        pick_realized = realized;
        pick_slope_known = slope_known;
      }
    }

    std::vector<std::pair<std::size_t, Point>> realized;
    for (std::size_t p = 0; p < cand_.num_points; ++p)
      if (on_line(pick, p) && st.coords[p]) realized.emplace_back(p, *st.coords[p]);

    const std::size_t cls = line_class_[pick];
    if (realized.size() >= 2) {
      const Line forced = line_through(realized[0].second, realized[1].second);
      for (std::size_t i = 2; i < realized.size(); ++i)
        if (!forced.contains(realized[i].second)) return false;
      const Slope s = slope_of(forced);
      if (st.class_slope[cls]) {
        if (*st.class_slope[cls] != s) return false;
        return branch(st, pick, std::nullopt, forced);
      }
      if (slope_taken(st, cls, s)) return false;
      return branch(st, pick, s, forced);
    }

    if (realized.size() == 1) {
      if (st.class_slope[cls])
        return branch(st, pick, std::nullopt,
                      line_with_slope(*st.class_slope[cls], realized[0].second));
      for (const Slope& s : slopes_) {
        if (exhausted_) return false;
        if (slope_taken(st, cls, s)) continue;
        if (branch(st, pick, s, line_with_slope(s, realized[0].second))) return true;
      }
      return false;
    }

    if (st.class_slope[cls]) {
      for (const Rational& c : offsets_) {
        if (exhausted_) return false;
        if (branch(st, pick, std::nullopt, line_with_offset(*st.class_slope[cls], c)))
          return true;
      }
      return false;
    }
    for (const Slope& s : slopes_) {
      if (slope_taken(st, cls, s)) continue;
      for (const Rational& c : offsets_) {
        if (exhausted_) return false;
        if (branch(st, pick, s, line_with_offset(s, c))) return true;
      }
    }
    return false;
  }

  const AbstractCandidate& cand_;
  std::vector<std::size_t> line_class_;
  std::vector<std::vector<int>> shared_;
  std::vector<Slope> slopes_;
  std::vector<Rational> offsets_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::optional<Arrangement> found_;
};

// A linear space whose points are not all collinear always has a two-point
// connecting line in the real plane (the ordinary-line theorem), so a
// candidate lacking one can be rejected without search.
std::optional<std::string> refute(const AbstractCandidate& c) {
  const auto& rows = c.incidences.line_masks;
  for (std::size_t p = 0; p < c.num_points; ++p)
    for (std::size_t q = p + 1; q < c.num_points; ++q) {
      bool joined = false;
      for (const Mask r : rows)
        if ((r >> p & 1) && (r >> q & 1)) {
          joined = true;
          break;
        }
      if (!joined) return std::nullopt;  // not a linear space
    }
  const Mask all = (Mask{1} << c.num_points) - 1;
  for (const Mask r : rows) {
    if (std::popcount(r) == 2) return std::nullopt;
    if (r == all) return std::nullopt;  // all marks collinear
  }
  return "linear space with no two-point line and marks not all collinear; "
         "no finite point set in the real plane does that (ordinary-line "
         "theorem)";
}

}  // namespace

std::vector<AbstractCandidate> abstract_candidates(std::size_t k, std::size_t n) {
  if (k < 2 || n < 2)
    throw BadKError("abstract candidates require k >= 2 and n >= 2");
  const auto levels = generate_levels(k, n);
  std::vector<AbstractCandidate> out;
  for (const auto& rows : levels[n])
    if (all_points_covered(rows, k)) out.push_back(candidate_from_rows(k, rows));
  return out;
}

RealizationResult realize(const AbstractCandidate& candidate,
                          const RealizeBudget& budget) {
  RealizationResult result;
  if (const auto reason = refute(candidate)) {
    result.status = RealizationResult::Status::Refuted;
    result.reason = *reason;
    return result;
  }
  const auto base_slopes = slope_ladder(budget.ladder);
  const auto base_offsets = offset_ladder(budget.ladder);
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(1, budget.restarts);
       ++attempt) {
    auto slopes = base_slopes;
    auto offsets = base_offsets;
    if (attempt > 0) {
      std::mt19937_64 rng(budget.seed * 1000003 + attempt);
      std::shuffle(slopes.begin(), slopes.end(), rng);
      // Keep 0 up front: forced offsets are rare and 0 anchors the frame.
      std::shuffle(offsets.begin() + 1, offsets.end(), rng);
    }
    Realizer realizer(candidate, std::move(slopes), std::move(offsets),
                      budget.max_nodes);
    if (auto arrangement = realizer.run()) {
      result.status = RealizationResult::Status::Realized;
      result.arrangement = std::move(arrangement);
      return result;
    }
    if (!realizer.exhausted()) {
      // The whole ladder-bounded space was searched; a different ladder
      // permutation cannot add values, only reorder them.
      break;
    }
  }
  result.status = RealizationResult::Status::Undecided;
  return result;
}

CatalogEntry make_catalog_entry(const Arrangement& a) {
  CatalogEntry e;
  e.arrangement = a;
  e.code = canonical_code(a);
  e.triple = summary_triple(a);
  e.vectors = type_vectors(a);
  e.family = a.points.size() >= 3 ? classify(a) : std::nullopt;
  e.linear_space = is_linear_space(a);
  e.signature = best_central_signature(a);
  return e;
}

EnumerationResult enumerate_arrangements(std::size_t k, std::size_t n_max,
                                         const RealizeBudget& budget) {
  if (k < 2)
    throw BadKError(
        "enumeration handles k >= 2; the k = 0 and k = 1 catalogs are "
        "parametric families");
  if (n_max == 0) n_max = k + 2;
  if (n_max < 2) throw BadKError("enumeration requires n_max >= 2");

  EnumerationResult result;
  result.k = k;
  result.n_max = n_max;

  const auto levels = generate_levels(k, n_max);
  struct Job {
    AbstractCandidate cand;
    std::size_t cell = 0;
  };
  std::vector<Job> jobs;
  for (std::size_t n = 2; n <= n_max; ++n) {
    CellStats cell;
    cell.n = n;
    for (const auto& rows : levels[n])
      if (all_points_covered(rows, k)) {
        ++cell.abstract_count;
        jobs.push_back({candidate_from_rows(k, rows), result.cells.size()});
      }
    result.cells.push_back(cell);
  }

  std::vector<RealizationResult> outcomes(jobs.size());
  const auto run_job = [&](std::size_t i) {
    RealizeBudget b = budget;
    b.seed = budget.seed + 7919 * (i + 1);
    outcomes[i] = realize(jobs[i].cand, b);
  };
  const std::size_t workers = std::min(env_workers(), jobs.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_job(i);
  } else {
    // Striped static schedule: outcome slots make the merge order-independent.
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < jobs.size(); i += workers) run_job(i);
      });
    for (auto& t : pool) t.join();
  }

  std::unordered_set<std::string> codes;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    CellStats& cell = result.cells[jobs[i].cell];
    switch (outcomes[i].status) {
      case RealizationResult::Status::Realized: {
        ++cell.realized;
        CatalogEntry entry = make_catalog_entry(*outcomes[i].arrangement);
        if (entry.code != jobs[i].cand.code)
          throw Error("realization drifted from its candidate");
        if (!codes.insert(entry.code).second)
          throw Error("duplicate canonical code across cells");
        result.entries.push_back(std::move(entry));
        break;
      }
      case RealizationResult::Status::Undecided:
        ++cell.undecided;
        result.undecided.push_back(jobs[i].cand);
        break;
      case RealizationResult::Status::Refuted:
        ++cell.refuted;
        result.refuted.emplace_back(jobs[i].cand, outcomes[i].reason);
        break;
    }
  }
  std::sort(result.entries.begin(), result.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) {
              if (!(a.triple == b.triple)) return a.triple < b.triple;
              return a.code < b.code;
            });
  return result;
}

ConjectureReport verify_conjecture(std::size_t k, std::size_t n_max,
                                   const RealizeBudget& budget) {
  if (k < 3) throw TooFewPointsError("the conjecture concerns k >= 3");
  if (n_max == 0) n_max = k + 2;
  if (n_max < k + 2)
    throw BadKError("the conjecture probe needs n_max >= k + 2");

  ConjectureReport report;
  report.k = k;
  report.n_max_searched = n_max;
  report.enumeration = enumerate_arrangements(k, n_max, budget);

  bool first = true;
  for (const CatalogEntry& e : report.enumeration.entries) {
    report.realized_max_n = std::max(report.realized_max_n, e.triple.n);
    if (e.triple.n > k + 1) ++report.realized_above_bound;
    if (first || e.triple.s < report.slope_min) report.slope_min = e.triple.s;
    if (first || e.triple.s > report.slope_max) report.slope_max = e.triple.s;
    first = false;
  }
  for (const CellStats& cell : report.enumeration.cells)
    if (cell.n > k + 1) report.abstract_above_bound += cell.abstract_count;
  for (const AbstractCandidate& c : report.enumeration.undecided)
    if (c.num_lines > k + 1) ++report.undecided_above_bound;
  return report;
}

std::vector<CanonicalCode> grid_oracle(std::size_t k, std::size_t g,
                                       std::size_t n_max) {
  if (g < 3) throw BadKError("the grid oracle needs g >= 3");
  if (k < 1) throw BadKError("the grid oracle needs k >= 1");

  // Lines spanned by pairs of grid points.
  std::vector<Line> lines;
  {
    std::vector<Point> grid;
    for (std::size_t x = 0; x < g; ++x)
      for (std::size_t y = 0; y < g; ++y)
        grid.push_back(Point{Rational(x), Rational(y)});
    std::set<Line> uniq;
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = i + 1; j < grid.size(); ++j)
        uniq.insert(line_through(grid[i], grid[j]));
    lines.assign(uniq.begin(), uniq.end());
  }
  const std::size_t L = lines.size();
  n_max = std::min(n_max, L);

  // Global registry of every pairwise intersection (not only grid points).
  std::map<Point, int> point_id;
  std::vector<std::vector<int>> meet(L, std::vector<int>(L, -1));
  std::vector<Point> points;
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j) {
      const auto p = intersect(lines[i], lines[j]);
      if (!p) continue;
      auto [it, fresh] = point_id.emplace(*p, static_cast<int>(points.size()));
      if (fresh) points.push_back(*p);
      meet[i][j] = meet[j][i] = it->second;
    }
  std::vector<std::vector<bool>> on(points.size(), std::vector<bool>(L, false));
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t l = 0; l < L; ++l) on[p][l] = lines[l].contains(points[p]);

  std::unordered_set<std::string> codes;
  std::vector<std::size_t> chosen;
  std::vector<int> hits(points.size(), 0);
  std::size_t distinct = 0;

  const auto evaluate = [&] {
    if (distinct != k) return;
    std::vector<int> present;
    for (std::size_t p = 0; p < points.size(); ++p)
      if (hits[p]) present.push_back(static_cast<int>(p));
    IncidenceStructure inc;
    inc.num_points = k;
    inc.num_lines = chosen.size();
    for (const std::size_t l : chosen) {
      Mask row = 0;
      for (std::size_t idx = 0; idx < present.size(); ++idx)
        if (on[static_cast<std::size_t>(present[idx])][l]) row |= Mask{1} << idx;
      inc.line_masks.push_back(row);
    }
    codes.insert(canonical_code(inc));
  };

  const std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (chosen.size() >= 2) evaluate();
    if (chosen.size() == n_max) return;
    for (std::size_t l = start; l < L; ++l) {
      for (const std::size_t prev : chosen) {
        const int pid = meet[prev][l];
        if (pid >= 0 && hits[static_cast<std::size_t>(pid)]++ == 0) ++distinct;
      }
      chosen.push_back(l);
      if (distinct <= k) extend(l + 1);  // marks only accumulate deeper
      chosen.pop_back();
      for (const std::size_t prev : chosen) {
        const int pid = meet[prev][l];
        if (pid >= 0 && --hits[static_cast<std::size_t>(pid)] == 0) --distinct;
      }
    }
  };
  extend(0);

  std::vector<CanonicalCode> out(codes.begin(), codes.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t env_seed() {
  if (const char* s = std::getenv("REGMARK_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0') return v;
  }
  return RealizeBudget{}.seed;
}

std::size_t env_workers() {
  if (const char* s = std::getenv("REGMARK_WORKERS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace regmark
