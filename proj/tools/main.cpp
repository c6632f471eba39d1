#include "regmark/enumeration.hpp"
#include "regmark/io.hpp"
#include "regmark/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace regmark;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitParse = 3;
constexpr int kExitUndecided = 4;

std::string format_tail(const std::vector<std::size_t>& v, std::size_t first) {
  std::ostringstream os;
  os << "(";
  bool sep = false;
  for (std::size_t i = first; i < v.size(); ++i) {
    if (sep) os << ", ";
    os << v[i];
    sep = true;
  }
  os << ")";
  return os.str();
}

std::string format_signature(const CentralSignature& sig) {
  std::ostringstream os;
  os << "centrex " << to_string(sig.centrex) << ", degree " << sig.degree
     << ", signature " << format_tail(sig.signature, 0);
  return os.str();
}

// P comes from the file when point records exist, otherwise from the closure.
Arrangement arrangement_of(const ArrangementFile& file) {
  std::vector<Line> lines = file.lines;
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  if (!file.has_point_records) return from_lines(std::move(lines));
  std::vector<Point> points = file.points;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return Arrangement{std::move(lines), std::move(points)};
}

int print_validation(const Arrangement& a, std::ostream& os) {
  const ValidationReport report = validate(a);
  if (report.valid) {
    os << "valid arrangement: " << to_string(summary_triple(a)) << "\n";
    return kExitValid;
  }
  os << "INVALID: " << report.violations.size() << " violation(s)\n";
  for (const RuleViolation& v : report.violations)
    os << "  rule " << v.rule << ": " << v.message << "\n";
  return kExitInvalid;
}

std::string family_note(const Arrangement& a) {
  const std::size_t k = a.points.size();
  const std::size_t n = a.lines.size();
  if (k >= 3) {
    if (const auto kind = classify(a)) return to_string(*kind);
    return "none of the three named families";
  }
  if (k == 0) {
    if (n == 0) return "k=0 family: the empty arrangement";
    if (n == 1) return "k=0 family: a single construction line";
    return "k=0 family: " + std::to_string(n) + " parallel construction lines";
  }
  if (k == 1) return "k=1 family: pencil of " + std::to_string(n) + " lines";
  return "k=2: the unique two-mark class";
}

void print_analysis(const Arrangement& a, std::ostream& os) {
  const SummaryTriple t = summary_triple(a);
  os << "summary " << to_string(t) << "   [n lines, k marks, s slopes]\n";

  const TypeVectors tv = type_vectors(a);
  os << "line type  (t_1..): " << format_tail(tv.line_type, 1);
  if (!tv.line_type.empty() && tv.line_type[0] != 0)
    os << "   [t_0 = " << tv.line_type[0] << " line(s) with no marks]";
  os << "\n";
  os << "slope type (s_1..): " << format_tail(tv.slope_type, 1);
  if (!tv.slope_type.empty() && tv.slope_type[0] != 0)
    os << "   [s_0 = " << tv.slope_type[0] << "]";
  os << "\n";
  os << "point type (p_2..): " << format_tail(tv.point_type, 0) << "\n";

  for (const Point& p : a.points) {
    const DegreeType dt = point_line_degree_type(a, p);
    os << "  mark " << to_string(p) << ": degree " << dt.degree
       << ", point-line degree type " << format_tail(dt.counts, 0) << "\n";
  }

  os << "family: " << family_note(a) << "\n";
  os << "linear space: " << (is_linear_space(a) ? "yes" : "no") << "\n";
  if (a.points.size() >= 3) {
    const DeBruijnErdosReport rep = debruijn_erdos_check(a);
    if (rep.linear_space) {
      os << "line bound: n >= k: " << rep.n << " >= " << rep.k << " "
         << (rep.bound_holds ? "ok" : "VIOLATED") << "\n";
      if (rep.equality)
        os << "  equality case: "
           << (rep.near_pencil_structure ? "near-pencil structure" : rep.message)
           << "\n";
    }
  }
  const auto centrexes = find_centrexes(a);
  if (centrexes.empty()) {
    os << "centrex: none\n";
  } else {
    for (const Point& z : centrexes)
      os << format_signature(central_signature(a, z)) << "\n";
  }
}

// The comparison ladder: measures (1) through (4) in order.
std::string first_distinguishing_measure(const Arrangement& a1,
                                         const Arrangement& a2) {
  if (!(summary_triple(a1) == summary_triple(a2)))
    return "measure (1): summary triple " + to_string(summary_triple(a1)) +
           " vs " + to_string(summary_triple(a2));
  const TypeVectors v1 = type_vectors(a1), v2 = type_vectors(a2);
  if (v1.line_type != v2.line_type)
    return "measure (2): line type " + format_tail(v1.line_type, 1) + " vs " +
           format_tail(v2.line_type, 1);
  if (v1.slope_type != v2.slope_type)
    return "measure (2): slope type " + format_tail(v1.slope_type, 1) + " vs " +
           format_tail(v2.slope_type, 1);
  if (v1.point_type != v2.point_type)
    return "measure (2): point type " + format_tail(v1.point_type, 0) + " vs " +
           format_tail(v2.point_type, 0);
  const auto degree_multiset = [](const Arrangement& a) {
    std::vector<std::vector<std::size_t>> out;
    for (const Point& p : a.points) out.push_back(point_line_degree_type(a, p).counts);
    std::sort(out.begin(), out.end());
    return out;
  };
  if (degree_multiset(a1) != degree_multiset(a2))
    return "measure (3): point-line degree types differ";
  const auto s1 = best_central_signature(a1), s2 = best_central_signature(a2);
  const auto key = [](const std::optional<CentralSignature>& s) {
    return s ? canonical_cycle(s->signature) : std::vector<std::size_t>{};
  };
  if (s1.has_value() != s2.has_value() || key(s1) != key(s2))
    return "measure (4): central degree / central signature";
  return "no measure (1)-(4) separates them";
}

std::string matrix_text(const Mat3& m) {
  std::ostringstream os;
  for (int r = 0; r < 3; ++r) {
    os << "  [ ";
    for (int c = 0; c < 3; ++c) os << to_string(m.m[r][c]) << " ";
    os << "]\n";
  }
  return os.str();
}

std::string candidate_rows_text(const AbstractCandidate& c) {
  std::ostringstream os;
  for (std::size_t l = 0; l < c.num_lines; ++l) {
    os << (l ? " " : "") << "{";
    bool sep = false;
    for (std::size_t p = 0; p < c.num_points; ++p)
      if (c.incidences.line_masks[l] >> p & 1) {
        if (sep) os << ",";
        os << p;
        sep = true;
      }
    os << "}";
  }
  return os.str();
}

int cmd_validate(const std::string& path) {
  return print_validation(arrangement_of(load_arrangement_file(path)), std::cout);
}

int cmd_analyze(const std::string& path) {
  const Arrangement a = arrangement_of(load_arrangement_file(path));
  const int status = print_validation(a, std::cout);
  if (status != kExitValid) return status;
  print_analysis(a, std::cout);
  return kExitValid;
}

int cmd_compare(const std::string& path1, const std::string& path2,
                const std::string& mode) {
  const Arrangement a1 = arrangement_of(load_arrangement_file(path1));
  const Arrangement a2 = arrangement_of(load_arrangement_file(path2));
  for (const Arrangement* a : {&a1, &a2})
    if (!validate(*a).valid) {
      std::cout << "input is not a valid arrangement\n";
      return kExitInvalid;
    }

  if (mode == "incidence") {
    if (const auto witness = is_isomorphic(a1, a2)) {
      std::cout << "equivalent (incidence isomorphism)\n";
      std::cout << "  point labeling:";
      for (std::size_t i = 0; i < witness->point_map.size(); ++i)
        std::cout << " " << i << "->" << witness->point_map[i];
      std::cout << "\n  line labeling:";
      for (std::size_t i = 0; i < witness->line_map.size(); ++i)
        std::cout << " " << i << "->" << witness->line_map[i];
      std::cout << "\n";
      const auto s1 = best_central_signature(a1);
      const auto s2 = best_central_signature(a2);
      const auto key = [](const std::optional<CentralSignature>& s) {
        return s ? canonical_cycle(s->signature) : std::vector<std::size_t>{};
      };
      if (s1.has_value() != s2.has_value() || key(s1) != key(s2))
        std::cout << "note: measure (4), the central signature, still "
                     "separates these isomorphic arrangements\n";
      return kExitValid;
    }
    std::cout << "distinct (no incidence isomorphism)\n";
    std::cout << "first separating measure: "
              << first_distinguishing_measure(a1, a2) << "\n";
    return kExitValid;
  }

  const TransformMode tmode =
      mode == "affine" ? TransformMode::Affine : TransformMode::Projective;
  if (const auto witness = projective_equivalent(a1, a2, tmode)) {
    std::cout << "equivalent (" << mode << " transformation)\n"
              << matrix_text(witness->matrix);
    return kExitValid;
  }
  std::cout << "distinct (no " << mode << " witness)\n";
  if (is_isomorphic(a1, a2))
    std::cout << "note: the arrangements are incidence-isomorphic\n";
  else
    std::cout << "first separating measure: "
              << first_distinguishing_measure(a1, a2) << "\n";
  return kExitValid;
}

int cmd_enumerate(std::size_t k, std::size_t n_max, const std::string& out_dir,
                  bool svg) {
  RealizeBudget budget;
  budget.seed = env_seed();
  const EnumerationResult result = enumerate_arrangements(k, n_max, budget);

  std::ostringstream summary;
  summary << "# catalog for k = " << result.k << ", n up to " << result.n_max
          << "\n";
  summary << "# columns: entry  (n k s)  family  linear-space  signature  code\n";
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    const CatalogEntry& e = result.entries[i];
    summary << "entry_" << i + 1 << "  " << to_string(e.triple) << "  "
            << (e.family ? to_string(*e.family) : "-") << "  "
            << (e.linear_space ? "linear-space" : "-") << "  "
            << (e.signature ? format_tail(e.signature->signature, 0) : "-")
            << "  " << e.code << "\n";
  }
  for (const CellStats& cell : result.cells)
    summary << "# n=" << cell.n << ": abstract " << cell.abstract_count
            << ", realized " << cell.realized << ", undecided "
            << cell.undecided << ", refuted " << cell.refuted << "\n";
  summary << "# undecided candidates: " << result.undecided.size() << "\n";

  std::cout << summary.str();

  if (!out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    for (std::size_t i = 0; i < result.entries.size(); ++i) {
      const CatalogEntry& e = result.entries[i];
      const std::string stem = out_dir + "/entry_" + std::to_string(i + 1);
      save(e.arrangement, stem + ".txt");
      std::ofstream report(stem + ".report.txt");
      print_analysis(e.arrangement, report);
      if (svg) save_svg(e.arrangement, stem + ".svg");
    }
    std::ofstream sum(out_dir + "/catalog_summary.txt");
    sum << summary.str();
    std::ofstream und(out_dir + "/undecided.txt");
    for (const AbstractCandidate& c : result.undecided)
      und << "n=" << c.num_lines << " " << candidate_rows_text(c) << "  "
          << c.code << "\n";
    std::ofstream ref(out_dir + "/refuted.txt");
    for (const auto& [c, reason] : result.refuted)
      ref << "n=" << c.num_lines << " " << candidate_rows_text(c) << "  "
          << reason << "\n";
  }
  return result.undecided.empty() ? kExitValid : kExitUndecided;
}

int cmd_conjecture(std::size_t k, std::size_t n_max) {
  RealizeBudget budget;
  budget.seed = env_seed();
  const ConjectureReport report = verify_conjecture(k, n_max, budget);
  std::cout << "k = " << report.k << ", searched n up to "
            << report.n_max_searched << "\n";
  std::cout << "realized max n: " << report.realized_max_n
            << " (bound k+1 = " << report.k + 1 << ")\n";
  std::cout << "above-bound candidates: abstract " << report.abstract_above_bound
            << ", realized " << report.realized_above_bound << ", undecided "
            << report.undecided_above_bound << "\n";
  std::cout << "slope counts over realized entries: [" << report.slope_min
            << ", " << report.slope_max << "]\n";
  std::cout << (report.realized_above_bound == 0
                    ? "consistent with the k+1 line bound\n"
                    : "COUNTEREXAMPLE candidate realized above the bound\n");
  for (const AbstractCandidate& c : report.enumeration.undecided)
    if (c.num_lines > k + 1)
      std::cout << "undecided above bound: n=" << c.num_lines << " "
                << candidate_rows_text(c) << "\n";
  return report.enumeration.undecided.empty() ? kExitValid : kExitUndecided;
}

int cmd_shape(const std::string& path, const std::string& out) {
  const ArrangementFile file = load_arrangement_file(path);
  const Shape shape = canonicalize_shape(file.segments);
  const Arrangement a = from_shape(shape);
  const std::string text = serialize(a);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out);
    os << text;
  }
  return kExitValid;
}

int cmd_render(const std::string& path, const std::string& out, int size) {
  const Arrangement a = arrangement_of(load_arrangement_file(path));
  RenderSpec spec;
  spec.canvas = size;
  save_svg(a, out, spec);
  return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "regmark: exact-arithmetic toolkit for arrangements of construction "
      "lines and registration marks"};
  app.require_subcommand(1);

  std::string path, path2, out, mode = "incidence";
  std::size_t points = 0, max_lines = 0;
  bool svg = false;
  int size = 640;

  auto* c_validate = app.add_subcommand("validate", "check rules (1) and (2)");
  c_validate->add_option("file", path)->required();

  auto* c_analyze = app.add_subcommand("analyze", "full invariant report");
  c_analyze->add_option("file", path)->required();

  auto* c_compare = app.add_subcommand("compare", "compare two arrangements");
  c_compare->add_option("fileA", path)->required();
  c_compare->add_option("fileB", path2)->required();
  c_compare->add_option("--mode", mode, "incidence|affine|projective")
      ->check(CLI::IsMember({"incidence", "affine", "projective"}));

  auto* c_enum =
      app.add_subcommand("enumerate", "catalog all classes with k marks");
  c_enum->add_option("--points", points, "number of registration marks")
      ->required();
  c_enum->add_option("--max-lines", max_lines, "line bound (default k+2)");
  c_enum->add_option("--out", out, "catalog output directory");
  c_enum->add_flag("--svg", svg, "also write SVG pictures");

  auto* c_conj = app.add_subcommand("conjecture", "probe the k+1 line bound");
  c_conj->add_option("--points", points)->required();
  c_conj->add_option("--max-lines", max_lines);

  auto* c_shape =
      app.add_subcommand("shape", "derive the arrangement of a shape");
  c_shape->add_option("file", path)->required();
  c_shape->add_option("--out", out);

  auto* c_render = app.add_subcommand("render", "draw an arrangement as SVG");
  c_render->add_option("file", path)->required();
  c_render->add_option("output", out)->required();
  c_render->add_option("--size", size, "canvas size in px");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_validate->parsed()) return cmd_validate(path);
    if (c_analyze->parsed()) return cmd_analyze(path);
    if (c_compare->parsed()) return cmd_compare(path, path2, mode);
    if (c_enum->parsed()) return cmd_enumerate(points, max_lines, out, svg);
    if (c_conj->parsed()) return cmd_conjecture(points, max_lines);
    if (c_shape->parsed()) return cmd_shape(path, out);
    if (c_render->parsed()) return cmd_render(path, out, size);
  } catch (const regmark::ParseError& e) {
    std::cerr << "parse error at line " << e.line_no() << ": " << e.what()
              << "\n";
    return kExitParse;
  } catch (const regmark::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
