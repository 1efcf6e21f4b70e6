#pragma once

// Representations of acyclic quivers over F_p and the abelian structure of
// their category: Hom spaces, kernels, cokernels, images, direct sums and
// isomorphism testing.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semibrick/ffmat.hpp"

namespace semibrick {

inline constexpr std::uint64_t kDefaultEnumerationCeiling = 1u << 16;
inline constexpr int kIsoSampleCount = 10000;

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite acyclic quiver. Vertices are addressed by index; names are for I/O.
class Quiver {
 public:
  struct ArrowSpec {
    std::string name;
    std::string source;
    std::string target;
  };

  /// Throws InvalidArgument on duplicate names, unknown endpoints or a directed cycle.
  Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

  /// Linearly oriented A_n: 1 -> 2 -> ... -> n, arrows a, b, c, ...
  static std::shared_ptr<const Quiver> linear(std::size_t n);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::optional<std::size_t> vertex_index(const std::string& name) const;
  std::optional<std::size_t> arrow_index(const std::string& name) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

using DimVector = std::vector<std::size_t>;

std::size_t total_dim(const DimVector& d) noexcept;
DimVector add_dims(const DimVector& a, const DimVector& b);
/// Componentwise a <= b.
bool dims_leq(const DimVector& a, const DimVector& b) noexcept;

class Rep {
 public:
  /// `mats[a]` must be dims[target a] x dims[source a]; throws DimensionMismatch otherwise.
  Rep(std::shared_ptr<const Quiver> quiver, Prime p, DimVector dims, std::vector<FpMatrix> mats);
  static Rep zero(std::shared_ptr<const Quiver> quiver, Prime p);
  /// Simple representation concentrated at vertex `v`.
  static Rep simple(std::shared_ptr<const Quiver> quiver, Prime p, std::size_t v);

  const Quiver& quiver() const noexcept { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const noexcept { return quiver_; }
  Prime prime() const noexcept { return p_; }
  const DimVector& dims() const noexcept { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const noexcept { return semibrick::total_dim(dims_); }
  const std::vector<FpMatrix>& mats() const noexcept { return mats_; }
  const FpMatrix& mat(std::size_t a) const { return mats_[a]; }
  bool is_zero() const noexcept { return total_dim() == 0; }

  /// Exact-value key: dims followed by all arrow entries.
  std::string key() const;

  friend bool operator==(const Rep& a, const Rep& b);

 private:
  std::shared_ptr<const Quiver> quiver_;
  Prime p_;
  DimVector dims_;
  std::vector<FpMatrix> mats_;
};

/// Throws QuiverMismatch / FieldMismatch unless the two reps live in the same category.
void require_compatible(const Rep& x, const Rep& y);

/// A morphism of representations: one matrix per vertex, squares commute.
class Mor {
 public:
  struct Trusted {};

  /// Validates shapes and commuting squares; throws InvalidMorphism.
  Mor(std::shared_ptr<const Rep> src, std::shared_ptr<const Rep> dst, std::vector<FpMatrix> comps);
  /// Skips the commuting-square check; for values built from valid morphisms.
  Mor(Trusted, std::shared_ptr<const Rep> src, std::shared_ptr<const Rep> dst, std::vector<FpMatrix> comps);

  static Mor zero(std::shared_ptr<const Rep> src, std::shared_ptr<const Rep> dst);
  static Mor identity(std::shared_ptr<const Rep> x);

  const Rep& src() const noexcept { return *src_; }
  const Rep& dst() const noexcept { return *dst_; }
  const std::shared_ptr<const Rep>& src_ptr() const noexcept { return src_; }
  const std::shared_ptr<const Rep>& dst_ptr() const noexcept { return dst_; }
  const std::vector<FpMatrix>& comps() const noexcept { return comps_; }
  const FpMatrix& comp(std::size_t v) const { return comps_[v]; }

  bool is_zero() const noexcept;
  bool is_injective() const;
  bool is_surjective() const;
  /// Every vertex component invertible.
  bool is_iso() const;
  /// Re-checks shapes and commuting squares.
  bool is_valid() const;

  /// Vertex components concatenated row-major in vertex order.
  FpMatrix vectorize() const;

 private:
  std::shared_ptr<const Rep> src_;
  std::shared_ptr<const Rep> dst_;
  std::vector<FpMatrix> comps_;
};

/// g ∘ f. Requires f.dst == g.src.
Mor compose(const Mor& g, const Mor& f);
Mor mor_add(const Mor& a, const Mor& b);
Mor mor_scale(const Mor& a, Residue s);
/// Inverse of an isomorphism; nullopt otherwise.
std::optional<Mor> try_inverse(const Mor& f);

class HomSpace {
 public:
  HomSpace(std::shared_ptr<const Rep> src, std::shared_ptr<const Rep> dst, std::vector<Mor> basis);

  const Rep& src() const noexcept { return *src_; }
  const Rep& dst() const noexcept { return *dst_; }
  const std::vector<Mor>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  /// p^dim, saturating.
  std::uint64_t count() const noexcept;
  /// Base-p digits of `index` are the basis coefficients (least significant first).
  Mor element(std::uint64_t index) const;
  /// Throws EnumerationTooLarge when count() exceeds the ceiling.
  std::uint64_t checked_count(std::uint64_t ceiling) const;

 private:
  std::shared_ptr<const Rep> src_;
  std::shared_ptr<const Rep> dst_;
  std::vector<Mor> basis_;
};

HomSpace hom_space(std::shared_ptr<const Rep> x, std::shared_ptr<const Rep> y);
HomSpace hom_space(const Rep& x, const Rep& y);

struct KernelResult {
  std::shared_ptr<const Rep> object;
  Mor inclusion;
};

struct CokernelResult {
  std::shared_ptr<const Rep> object;
  Mor projection;
};

struct ImageFactorization {
  Mor deflation;  // src -> image, vertexwise surjective
  std::shared_ptr<const Rep> image;
  Mor inflation;  // image -> dst, vertexwise injective
};

KernelResult kernel_of(const Mor& f);
/// Quotient coordinates complement the pivot columns of the image.
CokernelResult cokernel_of(const Mor& f);
ImageFactorization image_factorization(const Mor& f);

/// psi with mono ∘ psi == f. `mono` must be injective and contain the image of f.
Mor lift_through_mono(const Mor& mono, const Mor& f);

struct DirectSum {
  std::shared_ptr<const Rep> object;
  Mor inj1, inj2, proj1, proj2;
};

DirectSum direct_sum(std::shared_ptr<const Rep> x, std::shared_ptr<const Rep> y);

/// An isomorphism x -> y, or nullopt when none exists. Hom spaces above the
/// ceiling are sampled; if sampling finds nothing, throws SearchBudgetExceeded.
std::optional<Mor> is_isomorphic(std::shared_ptr<const Rep> x, std::shared_ptr<const Rep> y,
                                 std::uint64_t ceiling = kDefaultEnumerationCeiling);

/// Full End(x); throws EnumerationTooLarge above the ceiling.
std::vector<Mor> end_elements(std::shared_ptr<const Rep> x, std::uint64_t ceiling = kDefaultEnumerationCeiling);

inline std::shared_ptr<const Rep> share(Rep r) { return std::make_shared<const Rep>(std::move(r)); }

}  // namespace semibrick
