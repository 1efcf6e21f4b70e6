#pragma once

// A finite, dimension-bounded set of isomorphism-class representatives.
// Every quantified check in the library ranges over one of these.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "semibrick/class_set.hpp"
#include "semibrick/exact.hpp"
#include "semibrick/repcat.hpp"

namespace semibrick {

inline constexpr std::uint64_t kDefaultTupleBudget = 1u << 22;

struct UniverseConfig {
  std::shared_ptr<const Quiver> quiver;
  Prime p;
  DimVector bound;
  std::uint64_t ceiling = kDefaultEnumerationCeiling;
  std::uint64_t tuple_budget = kDefaultTupleBudget;
};

/// A check skipped because some object would leave the dimension window.
/// `resolved` is true when no in-window conclusion depends on the skipped
/// object; an unresolved event makes the affected verdict ambiguous.
struct TruncationEvent {
  std::string op;
  std::string detail;
  DimVector dims;
  bool resolved = true;

  friend bool operator==(const TruncationEvent&, const TruncationEvent&) = default;
};

struct ConflationTriple {
  IsoClassId x, y, z;
  Conflation witness;
};

/// All class triples (x, y, z) admitting a conflation x -> y -> z in a context.
struct ConflationTable {
  std::vector<ConflationTriple> triples;  // sorted by (x, z, y)
  std::vector<TruncationEvent> events;    // pairs whose middle term leaves the window
};

/// Per ordered class pair (x, y): what the morphisms x -> y do.
struct HomPairSummary {
  std::uint64_t count = 0;
  ClassSet images;                                  // classes of vertexwise images
  std::optional<std::uint64_t> first_nonadmissible;  // element index into Hom(x, y)
};

struct MorphismTable {
  std::size_t n = 0;
  std::vector<HomPairSummary> pairs;  // index x * n + y
  const HomPairSummary& at(IsoClassId x, IsoClassId y) const { return pairs[x.value * n + y.value]; }
};

class Universe {
 public:
  Universe(const Universe&) = delete;
  Universe& operator=(const Universe&) = delete;
  ~Universe();

  const std::shared_ptr<const Quiver>& quiver_ptr() const noexcept { return config_.quiver; }
  const Quiver& quiver() const noexcept { return *config_.quiver; }
  Prime prime() const noexcept { return config_.p; }
  const DimVector& bound() const noexcept { return config_.bound; }
  std::uint64_t ceiling() const noexcept { return config_.ceiling; }
  const UniverseConfig& config() const noexcept { return config_; }

  std::size_t size() const noexcept { return classes_.size(); }
  std::vector<IsoClassId> ids() const;
  ClassSet all() const;
  IsoClassId zero() const noexcept { return {0}; }
  const Rep& rep(IsoClassId id) const { return *classes_.at(id.value); }
  const std::shared_ptr<const Rep>& rep_ptr(IsoClassId id) const { return classes_.at(id.value); }
  const DimVector& dims(IsoClassId id) const { return rep(id).dims(); }
  bool within_bound(const DimVector& d) const noexcept { return dims_leq(d, config_.bound); }

  /// Throws OutOfBounds when x leaves the window.
  IsoClassId class_of(const Rep& x) const;
  IsoClassId class_of(const std::shared_ptr<const Rep>& x) const;
  /// The class of x together with an isomorphism representative -> x.
  std::pair<IsoClassId, Mor> class_of_with_iso(const std::shared_ptr<const Rep>& x) const;

  /// Cached Hom space between representatives.
  const HomSpace& hom(IsoClassId x, IsoClassId y) const { return homs_[x.value * size() + y.value]; }

  /// Class of x ⊕ y, or nullopt when the sum leaves the window.
  std::optional<IsoClassId> sum_class(IsoClassId x, IsoClassId y) const;

  /// Cached per context; built on first use.
  const ConflationTable& conflation_table(const ExactCtx& ctx) const;
  const MorphismTable& morphism_table(const ExactCtx& ctx) const;

  /// Deterministic text: representatives' keys in id order.
  std::string fingerprint() const;

 private:
  explicit Universe(UniverseConfig config);
  friend std::shared_ptr<const Universe> enumerate_universe(UniverseConfig config);

  UniverseConfig config_;
  std::vector<std::shared_ptr<const Rep>> classes_;
  std::vector<HomSpace> homs_;
  std::map<DimVector, std::vector<IsoClassId>> by_dims_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<std::string, IsoClassId> memo_;

  mutable std::mutex table_mutex_;
  mutable std::map<std::string, std::shared_ptr<const ConflationTable>> conflation_tables_;
  mutable std::map<std::string, std::shared_ptr<const MorphismTable>> morphism_tables_;
};

/// Upper bound on the number of arrow-matrix tuples enumerate_universe visits.
std::uint64_t estimate_tuple_count(const Quiver& q, Prime p, const DimVector& bound);

/// Enumerates every arrow-matrix tuple for each dimension vector <= bound
/// (lexicographic order, tuples in counting order) and deduplicates by
/// isomorphism. Throws BudgetExceeded when the estimate exceeds the budget.
std::shared_ptr<const Universe> enumerate_universe(UniverseConfig config);

/// A representation built from the base-p digits of `index`, used by the enumeration.
Rep rep_from_index(const std::shared_ptr<const Quiver>& q, Prime p, const DimVector& dims, std::uint64_t index);

/// Middle terms y (one witness each) of conflations x -> y -> z in ctx.
/// Throws OutOfBounds when dims(x) + dims(z) leaves the window.
std::vector<std::pair<IsoClassId, Conflation>> conflations_between(const Universe& u, const ExactCtx& ctx, IsoClassId x,
                                                                   IsoClassId z);

/// A single conflation x -> y -> z if one exists.
std::optional<Conflation> find_conflation(const Universe& u, const ExactCtx& ctx, IsoClassId x, IsoClassId y,
                                          IsoClassId z);

}  // namespace semibrick
