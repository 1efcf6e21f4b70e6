#pragma once

// Bricks, semibricks and simple objects relative to an exact structure.

#include <memory>
#include <vector>

#include "semibrick/universe.hpp"

namespace semibrick {

/// Nonzero, and every nonzero endomorphism is invertible. Decided by full
/// enumeration of End(x); throws EnumerationTooLarge above the ceiling.
bool is_brick(const std::shared_ptr<const Rep>& x, std::uint64_t ceiling = kDefaultEnumerationCeiling);

/// Members are bricks with Hom(S, T) = 0 for all distinct S, T.
bool is_semibrick(const Universe& u, const ClassSet& s);

/// Classes of the universe that are bricks, in id order.
std::vector<IsoClassId> bricks_of(const Universe& u);

/// All semibricks in the window, sorted by size then members. Independent
/// of any exact structure.
std::vector<ClassSet> enumerate_semibricks(const Universe& u);

/// x is nonzero and is not the middle term of a conflation with both ends nonzero.
bool is_simple(const Universe& u, const ExactCtx& ctx, IsoClassId x);
/// Simple classes of the universe, restricted to ctx's subuniverse when present.
ClassSet simples(const Universe& u, const ExactCtx& ctx);

}  // namespace semibrick
