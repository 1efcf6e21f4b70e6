#pragma once

// Wide subcategories, decided through the two-out-of-three plus image
// factorization criterion, and the "abelian with the standard structure"
// test via admissibility of every morphism.

#include <optional>
#include <string>
#include <vector>

#include "semibrick/universe.hpp"

namespace semibrick {

inline constexpr std::size_t kMaxWitnesses = 8;

struct WideWitness {
  std::string detail;
  std::optional<Conflation> conflation;
  std::optional<Mor> morphism;
};

struct ConditionResult {
  bool pass = true;
  std::vector<WideWitness> witnesses;  // at most kMaxWitnesses
};

struct WideReport {
  ClassSet candidate;
  std::vector<std::string> precondition_violations;
  ConditionResult condition_a;  // two out of three terms of a conflation
  ConditionResult condition_b;  // image factorization inside the candidate
  std::vector<TruncationEvent> truncation_events;

  bool pass() const noexcept { return precondition_violations.empty() && condition_a.pass && condition_b.pass; }
};

/// Contains the zero class and is closed under direct sums inside the window.
/// Sums leaving the window are appended to `events` when given.
std::vector<std::string> candidate_violations(const Universe& u, const ClassSet& w,
                                              std::vector<TruncationEvent>* events = nullptr);

WideReport is_wide(const Universe& u, const ExactCtx& ctx, const ClassSet& w);

/// Fast form of is_wide's two conditions over precomputed tables; no witnesses.
bool satisfies_wide_conditions(const ConflationTable& conflations, const MorphismTable& morphisms, const ClassSet& w);

/// ctx with its subuniverse replaced by w (intersected with an existing one).
ExactCtx restrict_to(const Universe& u, const ExactCtx& ctx, const ClassSet& w);

ClassSet simples_of(const Universe& u, const ExactCtx& ctx, const ClassSet& w);
bool is_length(const Universe& u, const ExactCtx& ctx, const ClassSet& w);

struct AbelianReport {
  bool abelian = true;
  std::uint64_t checked = 0;
  std::optional<Mor> witness;  // a non-admissible morphism
};

AbelianReport is_abelian_with_standard(const Universe& u, const ExactCtx& ctx);

}  // namespace semibrick
