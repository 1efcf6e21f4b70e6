#pragma once

// Exhaustive verifiers over a universe: the semibrick / length wide
// subcategory correspondence, the Schur-lemma characterization of abelian
// structures, and the split-structure example.

#include <optional>
#include <string>
#include <vector>

#include "semibrick/universe.hpp"

namespace semibrick {

inline constexpr std::uint64_t kDefaultNodeBudget = 1u << 24;

enum class SearchMode {
  Pruned,        // clauses from sum-closure, two-out-of-three and image factorization
  SumClosedOnly  // sum-closure clauses only; wide conditions checked at the leaves
};

/// Subsets of the universe containing 0 that satisfy the search clauses,
/// sorted. Throws BudgetExceeded past `node_budget` search nodes.
std::vector<ClassSet> enumerate_subcategory_candidates(const Universe& u, const ExactCtx& ctx, SearchMode mode,
                                                       std::uint64_t node_budget = kDefaultNodeBudget,
                                                       std::uint64_t* nodes = nullptr);

/// Length wide subcategories found by direct search, independent of semibricks.
std::vector<ClassSet> enumerate_length_wide(const Universe& u, const ExactCtx& ctx, SearchMode mode = SearchMode::Pruned,
                                            std::uint64_t node_budget = kDefaultNodeBudget);

struct BijectionEntry {
  ClassSet semibrick;
  ClassSet subcategory;
};

struct BijectionReport {
  std::string ctx;
  std::vector<ClassSet> semibricks;
  std::vector<ClassSet> wide_subcats;
  std::vector<BijectionEntry> forward;   // S -> Filt S
  std::vector<BijectionEntry> backward;  // W -> simp W
  std::vector<std::string> roundtrip_failures;
  std::vector<TruncationEvent> truncation_events;
  std::uint64_t search_nodes = 0;

  std::size_t unresolved_truncations() const;
  bool pass() const { return roundtrip_failures.empty() && unresolved_truncations() == 0; }
};

BijectionReport verify_bijection(const Universe& u, const ExactCtx& ctx, SearchMode mode = SearchMode::Pruned,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

struct CorollaryReport {
  std::string ctx;
  ClassSet simples;
  bool lhs = false;  // abelian with the standard structure
  bool rhs = false;  // simples form a semibrick
  std::optional<Mor> lhs_witness;
  std::optional<Mor> rhs_witness;  // nonzero, non-invertible, between simples
  std::uint64_t morphisms_checked = 0;

  bool pass() const { return lhs == rhs && (lhs || (lhs_witness && rhs_witness)); }
};

/// Throws PreconditionFailed unless every class lies in Filt(simples).
CorollaryReport verify_corollary(const Universe& u, const ExactCtx& ctx);

struct ExampleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExampleReport {
  ClassSet simples;
  ClassSet semisimple;
  ClassSet standard_closure;
  ClassSet split_closure;
  bool semisimple_algebra = false;
  std::optional<IsoClassId> extension_witness;  // middle term outside the semisimple set
  std::vector<ExampleCheck> checks;

  bool pass() const;
};

ExampleReport run_split_example(const Universe& u);

/// Closure of {0} ∪ s under direct sums inside the window.
ClassSet sum_closure(const Universe& u, const ClassSet& s);

}  // namespace semibrick
