#pragma once

#include "regmark/invariants.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace regmark {

// An isomorphism-class representative of a combinatorial arrangement:
// every point on >= 2 lines, two lines sharing <= 1 point, and the
// shares-no-point relation transitive (Euclidean parallelism lifted to the
// abstract level). Lines in different parallel classes share exactly one
// point.
struct AbstractCandidate {
  std::size_t num_points = 0;
  std::size_t num_lines = 0;
  IncidenceStructure incidences;
  std::vector<std::vector<std::size_t>> parallel_classes;
  CanonicalCode code;
};

struct RealizeBudget {
  std::size_t max_nodes = 80000;  // backtracking nodes per restart
  std::size_t restarts = 6;
  std::uint64_t seed = 20260810;  // REGMARK_SEED overrides in the CLI
  std::size_t ladder = 24;        // offsets/slopes tried per free choice
};

struct RealizationResult {
  enum class Status { Realized, Undecided, Refuted };
  Status status = Status::Undecided;
  std::optional<Arrangement> arrangement;  // set when Realized
  std::string reason;                      // set when Refuted
};

struct CatalogEntry {
  Arrangement arrangement;
  CanonicalCode code;
  SummaryTriple triple;
  TypeVectors vectors;
  std::optional<FamilyKind> family;
  bool linear_space = false;
  std::optional<CentralSignature> signature;
};

struct CellStats {
  std::size_t n = 0;  // line count of the cell
  std::size_t abstract_count = 0;
  std::size_t realized = 0;
  std::size_t undecided = 0;
  std::size_t refuted = 0;
};

struct EnumerationResult {
  std::size_t k = 0;
  std::size_t n_max = 0;
  std::vector<CatalogEntry> entries;  // sorted by (n, k, s), then code
  std::vector<AbstractCandidate> undecided;
  std::vector<std::pair<AbstractCandidate, std::string>> refuted;
  std::vector<CellStats> cells;  // one per n in 2..n_max
};

struct ConjectureReport {
  std::size_t k = 0;
  std::size_t n_max_searched = 0;
  std::size_t realized_max_n = 0;
  std::size_t abstract_above_bound = 0;   // candidates with n > k + 1
  std::size_t realized_above_bound = 0;   // conjecture-consistent when 0
  std::size_t undecided_above_bound = 0;
  std::size_t slope_min = 0;  // over realized entries
  std::size_t slope_max = 0;
  EnumerationResult enumeration;
};

// Complete list of non-isomorphic abstract candidates for the (k, n) cell,
// generated by adding lines one at a time with isomorph rejection by
// canonical code. Requires k >= 2 and n >= 2.
std::vector<AbstractCandidate> abstract_candidates(std::size_t k, std::size_t n);

// Backtracking placement over exact rationals: parallel classes pick up
// slopes lazily (forced by two realized marks, or drawn from a deterministic
// ladder), underdetermined lines draw offsets from the same ladder, and the
// finished line set is re-derived through from_lines and compared against
// the candidate by canonical code. Retries with seeded perturbations of the
// ladders until the node budget runs out; Undecided is a value, not an error.
RealizationResult realize(const AbstractCandidate& candidate,
                          const RealizeBudget& budget = {});

// Union over n = 2..n_max of realized candidates with exactly k marks,
// deduplicated by canonical code. k = 0 and k = 1 are parametric families
// (throws BadKError); n_max = 0 means the default k + 2, one line beyond the
// conjectured bound.
EnumerationResult enumerate_arrangements(std::size_t k, std::size_t n_max = 0,
                                         const RealizeBudget& budget = {});

// Requires k >= 3; n_max as in enumerate_arrangements but at least k + 2.
ConjectureReport verify_conjecture(std::size_t k, std::size_t n_max = 0,
                                   const RealizeBudget& budget = {});

// Independent lower-bound oracle: brute-forces every subset of at most n_max
// lines spanned by pairs of g x g grid points and keeps those with exactly
// k marks. Sound but not exhaustive; every returned code must show up in
// enumerate_arrangements(k).
std::vector<CanonicalCode> grid_oracle(std::size_t k, std::size_t g,
                                       std::size_t n_max);

// Derives every catalog annotation from the arrangement itself.
CatalogEntry make_catalog_entry(const Arrangement& a);

// REGMARK_SEED / REGMARK_WORKERS with fixed defaults.
std::uint64_t env_seed();
std::size_t env_workers();

}  // namespace regmark
