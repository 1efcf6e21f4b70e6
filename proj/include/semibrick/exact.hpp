#pragma once

// Exact structures on the category of representations: the standard
// structure (all short exact sequences), the split structure, and the
// restriction of either to a subcategory given by a set of iso classes.

#include <optional>
#include <string>

#include "semibrick/class_set.hpp"
#include "semibrick/repcat.hpp"

namespace semibrick {

class Universe;

enum class Structure { Standard, Split };

std::string to_string(Structure s);
/// Accepts "standard" and "split"; throws InvalidArgument otherwise.
Structure parse_structure(const std::string& s);

/// Exact-structure selector. With a subuniverse, conflations must have every
/// term in the given classes of `universe`.
class ExactCtx {
 public:
  static ExactCtx standard() { return ExactCtx(Structure::Standard); }
  static ExactCtx split() { return ExactCtx(Structure::Split); }
  explicit ExactCtx(Structure s) : structure_(s) {}

  /// Same structure, conflation terms restricted to `members` of `u`.
  ExactCtx restricted_to(const Universe& u, ClassSet members) const;

  Structure structure() const noexcept { return structure_; }
  const Universe* universe() const noexcept { return universe_; }
  const std::optional<ClassSet>& subuniverse() const noexcept { return subuniverse_; }
  bool is_restricted() const noexcept { return subuniverse_.has_value(); }
  /// Whether `x` may appear as a conflation term.
  bool admits(const Rep& x) const;
  bool admits(IsoClassId id) const { return !subuniverse_ || subuniverse_->contains(id); }

  /// Stable identifier used for caching and in reports.
  std::string key() const;

 private:
  Structure structure_;
  const Universe* universe_ = nullptr;
  std::optional<ClassSet> subuniverse_;
};

struct Conflation {
  Mor f;  // X -> Y
  Mor g;  // Y -> Z
};

/// Vertexwise: f injective, g surjective, g f = 0, im f = ker g.
bool is_short_exact(const Mor& f, const Mor& g);

/// A retraction r with r ∘ f = id, found by exact linear solving.
std::optional<Mor> find_retraction(const Mor& f);

bool is_conflation(const ExactCtx& ctx, const Mor& f, const Mor& g);
bool is_inflation(const ExactCtx& ctx, const Mor& f);
bool is_deflation(const ExactCtx& ctx, const Mor& g);

/// φ = ι ∘ π through the vertexwise image.
ImageFactorization factor_through_image(const Mor& phi);

/// Deflation-then-inflation through the image. Inflations are monic and
/// deflations epic, so any admissible factorization has middle term
/// isomorphic to the image and this single test decides admissibility.
bool is_admissible(const ExactCtx& ctx, const Mor& phi);

}  // namespace semibrick
