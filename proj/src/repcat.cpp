#include "semibrick/repcat.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace semibrick {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw InvalidArgument("duplicate vertex id");
  std::set<std::string> arrow_names;
  for (const auto& spec : arrows) {
    if (!arrow_names.insert(spec.name).second) throw InvalidArgument("duplicate arrow id: " + spec.name);
    auto s = vertex_index(spec.source);
    auto t = vertex_index(spec.target);
    if (!s || !t) throw InvalidArgument("arrow " + spec.name + " has an unknown endpoint");
    arrows_.push_back({spec.name, *s, *t});
  }

  // Kahn's algorithm; anything left over lies on a directed cycle.
  std::vector<std::size_t> indegree(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indegree[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const auto v = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& a : arrows_) {
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
    }
  }
  if (removed != vertices_.size()) throw InvalidArgument("quiver has a directed cycle");
}

std::shared_ptr<const Quiver> Quiver::linear(std::size_t n) {
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  for (std::size_t i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) {
    arrows.push_back({std::string(1, static_cast<char>('a' + (i - 1) % 26)) + (i > 26 ? std::to_string(i) : ""),
                      std::to_string(i), std::to_string(i + 1)});
  }
  return std::make_shared<const Quiver>(std::move(vertices), arrows);
}

std::optional<std::size_t> Quiver::vertex_index(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t total_dim(const DimVector& d) noexcept {
  std::size_t total = 0;
  for (auto x : d) total += x;
  return total;
}

DimVector add_dims(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dimension vectors of different length");
  DimVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool dims_leq(const DimVector& a, const DimVector& b) noexcept {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Rep::Rep(std::shared_ptr<const Quiver> quiver, Prime p, DimVector dims, std::vector<FpMatrix> mats)
    : quiver_(std::move(quiver)), p_(p), dims_(std::move(dims)), mats_(std::move(mats)) {
  if (dims_.size() != quiver_->vertex_count()) throw DimensionMismatch("dimension vector length != vertex count");
  if (mats_.size() != quiver_->arrow_count()) throw DimensionMismatch("matrix count != arrow count");
  for (std::size_t a = 0; a < mats_.size(); ++a) {
    const auto& arrow = quiver_->arrows()[a];
    const auto& m = mats_[a];
    if (m.prime() != p_) throw FieldMismatch("arrow matrix over a different field");
    if (m.rows() != dims_[arrow.target] || m.cols() != dims_[arrow.source]) {
      throw DimensionMismatch("arrow " + arrow.name + " matrix has the wrong shape");
    }
  }
}

Rep Rep::zero(std::shared_ptr<const Quiver> quiver, Prime p) {
  DimVector dims(quiver->vertex_count(), 0);
  std::vector<FpMatrix> mats;
  for (std::size_t a = 0; a < quiver->arrow_count(); ++a) mats.emplace_back(p, 0, 0);
  return Rep(std::move(quiver), p, std::move(dims), std::move(mats));
}

Rep Rep::simple(std::shared_ptr<const Quiver> quiver, Prime p, std::size_t v) {
  DimVector dims(quiver->vertex_count(), 0);
  dims.at(v) = 1;
  std::vector<FpMatrix> mats;
  for (const auto& a : quiver->arrows()) mats.emplace_back(p, dims[a.target], dims[a.source]);
  return Rep(std::move(quiver), p, std::move(dims), std::move(mats));
}

std::string Rep::key() const {
  std::string k;
  for (auto d : dims_) {
    k += std::to_string(d);
    k += ',';
  }
  k += '|';
  for (const auto& m : mats_) {
    for (auto e : m.entries()) {
      k += std::to_string(e);
      k += ',';
    }
    k += ';';
  }
  return k;
}

bool operator==(const Rep& a, const Rep& b) {
  if (a.quiver_ != b.quiver_ && !(*a.quiver_ == *b.quiver_)) return false;
  return a.p_ == b.p_ && a.dims_ == b.dims_ && a.mats_ == b.mats_;
}

void require_compatible(const Rep& x, const Rep& y) {
  if (&x.quiver() != &y.quiver() && !(x.quiver() == y.quiver())) throw QuiverMismatch("representations of different quivers");
  if (x.prime() != y.prime()) throw FieldMismatch("representations over different fields");
}

namespace {

bool squares_commute(const Rep& src, const Rep& dst, const std::vector<FpMatrix>& comps) {
  if (comps.size() != src.quiver().vertex_count()) return false;
  for (std::size_t v = 0; v < comps.size(); ++v) {
    if (comps[v].rows() != dst.dim(v) || comps[v].cols() != src.dim(v)) return false;
  }
  for (std::size_t a = 0; a < src.quiver().arrow_count(); ++a) {
    const auto& arrow = src.quiver().arrows()[a];
    if (!(comps[arrow.target] * src.mat(a) == dst.mat(a) * comps[arrow.source])) return false;
  }
  return true;
}

}  // namespace

Mor::Mor(std::shared_ptr<const Rep> src, std::shared_ptr<const Rep> dst, std::vector<FpMatrix> comps)
    : src_(std::move(src)), dst_(std::move(dst)), comps_(std::move(comps)) {
  require_compatible(*src_, *dst_);
  if (!squares_commute(*src_, *dst_, comps_)) throw InvalidMorphism("components violate a commuting square");
}

Mor::Mor(Trusted, std::shared_ptr<const Rep> src, std::shared_ptr<const Rep> dst, std::vector<FpMatrix> comps)
    : src_(std::move(src)), dst_(std::move(dst)), comps_(std::move(comps)) {}

Mor Mor::zero(std::shared_ptr<const Rep> src, std::shared_ptr<const Rep> dst) {
  require_compatible(*src, *dst);
  std::vector<FpMatrix> comps;
  for (std::size_t v = 0; v < src->quiver().vertex_count(); ++v) comps.emplace_back(src->prime(), dst->dim(v), src->dim(v));
  return Mor(Trusted{}, std::move(src), std::move(dst), std::move(comps));
}

Mor Mor::identity(std::shared_ptr<const Rep> x) {
  std::vector<FpMatrix> comps;
  for (std::size_t v = 0; v < x->quiver().vertex_count(); ++v) comps.push_back(FpMatrix::identity(x->prime(), x->dim(v)));
  return Mor(Trusted{}, x, x, std::move(comps));
}

bool Mor::is_zero() const noexcept {
  return std::all_of(comps_.begin(), comps_.end(), [](const FpMatrix& m) { return m.is_zero(); });
}

bool Mor::is_injective() const {
  for (const auto& m : comps_) {
    if (rank(m) != m.cols()) return false;
  }
  return true;
}

bool Mor::is_surjective() const {
  for (const auto& m : comps_) {
    if (rank(m) != m.rows()) return false;
  }
  return true;
}

bool Mor::is_iso() const {
  for (const auto& m : comps_) {
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  }
  return true;
}

bool Mor::is_valid() const { return squares_commute(*src_, *dst_, comps_); }

FpMatrix Mor::vectorize() const {
  std::vector<Residue> flat;
  for (const auto& m : comps_) flat.insert(flat.end(), m.entries().begin(), m.entries().end());
  return FpMatrix::column(src_->prime(), flat);
}

Mor compose(const Mor& g, const Mor& f) {
  if (!(f.dst() == g.src())) throw InvalidMorphism("compose: f.dst != g.src");
  std::vector<FpMatrix> comps;
  for (std::size_t v = 0; v < f.comps().size(); ++v) comps.push_back(g.comp(v) * f.comp(v));
  return Mor(Mor::Trusted{}, f.src_ptr(), g.dst_ptr(), std::move(comps));
}

Mor mor_add(const Mor& a, const Mor& b) {
  if (!(a.src() == b.src()) || !(a.dst() == b.dst())) throw InvalidMorphism("mor_add: different source or target");
  std::vector<FpMatrix> comps;
  for (std::size_t v = 0; v < a.comps().size(); ++v) comps.push_back(a.comp(v) + b.comp(v));
  return Mor(Mor::Trusted{}, a.src_ptr(), a.dst_ptr(), std::move(comps));
}

Mor mor_scale(const Mor& a, Residue s) {
  std::vector<FpMatrix> comps;
  for (const auto& m : a.comps()) comps.push_back(mat_scale(m, s));
  return Mor(Mor::Trusted{}, a.src_ptr(), a.dst_ptr(), std::move(comps));
}

std::optional<Mor> try_inverse(const Mor& f) {
  std::vector<FpMatrix> comps;
  for (const auto& m : f.comps()) {
    if (m.rows() != m.cols()) return std::nullopt;
    auto inv = try_inverse(m);
    if (!inv) return std::nullopt;
    comps.push_back(std::move(*inv));
  }
  return Mor(Mor::Trusted{}, f.dst_ptr(), f.src_ptr(), std::move(comps));
}

HomSpace::HomSpace(std::shared_ptr<const Rep> src, std::shared_ptr<const Rep> dst, std::vector<Mor> basis)
    : src_(std::move(src)), dst_(std::move(dst)), basis_(std::move(basis)) {}

std::uint64_t HomSpace::count() const noexcept { return saturating_pow(src_->prime().value(), basis_.size()); }

std::uint64_t HomSpace::checked_count(std::uint64_t ceiling) const {
  const auto n = count();
  if (n > ceiling) {
    throw EnumerationTooLarge("Hom space has " + std::to_string(n) + " elements, ceiling is " + std::to_string(ceiling), n);
  }
  return n;
}

Mor HomSpace::element(std::uint64_t index) const {
  const Prime p = src_->prime();
  std::vector<FpMatrix> comps;
  for (std::size_t v = 0; v < src_->quiver().vertex_count(); ++v) comps.emplace_back(p, dst_->dim(v), src_->dim(v));
  for (const auto& b : basis_) {
    const auto digit = static_cast<Residue>(index % p.value());
    index /= p.value();
    if (digit == 0) continue;
    for (std::size_t v = 0; v < comps.size(); ++v) comps[v] = comps[v] + mat_scale(b.comp(v), digit);
  }
  return Mor(Mor::Trusted{}, src_, dst_, std::move(comps));
}

HomSpace hom_space(std::shared_ptr<const Rep> x, std::shared_ptr<const Rep> y) {
  require_compatible(*x, *y);
  const Prime p = x->prime();
  const Quiver& q = x->quiver();
  const std::size_t nv = q.vertex_count();

  // Unknown layout: block for vertex v holds C_v (dims_y(v) x dims_x(v)) row-major.
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + y->dim(v) * x->dim(v);
  const std::size_t unknowns = offset[nv];

  std::size_t constraint_rows = 0;
  for (const auto& a : q.arrows()) constraint_rows += y->dim(a.target) * x->dim(a.source);

  // Arrow a: v -> w contributes C_w X_a - Y_a C_v = 0.
  FpMatrix system(p, constraint_rows, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrows()[ai];
    const auto v = a.source;
    const auto w = a.target;
    const FpMatrix& xa = x->mat(ai);
    const FpMatrix& ya = y->mat(ai);
    for (std::size_t i = 0; i < y->dim(w); ++i) {
      for (std::size_t j = 0; j < x->dim(v); ++j, ++row) {
        for (std::size_t k = 0; k < x->dim(w); ++k) {
          const auto col = offset[w] + i * x->dim(w) + k;
          system.set(row, col, p.add(system(row, col), xa(k, j)));
        }
        for (std::size_t k = 0; k < y->dim(v); ++k) {
          const auto col = offset[v] + k * x->dim(v) + j;
          system.set(row, col, p.sub(system(row, col), ya(i, k)));
        }
      }
    }
  }

  std::vector<Mor> basis;
  for (const auto& vec : kernel_basis(system)) {
    std::vector<FpMatrix> comps;
    for (std::size_t v = 0; v < nv; ++v) {
      FpMatrix c(p, y->dim(v), x->dim(v));
      for (std::size_t r = 0; r < y->dim(v); ++r) {
        for (std::size_t s = 0; s < x->dim(v); ++s) c.set(r, s, vec(offset[v] + r * x->dim(v) + s, 0));
      }
      comps.push_back(std::move(c));
    }
    basis.emplace_back(Mor::Trusted{}, x, y, std::move(comps));
  }
  return HomSpace(std::move(x), std::move(y), std::move(basis));
}

HomSpace hom_space(const Rep& x, const Rep& y) { return hom_space(share(x), share(y)); }

KernelResult kernel_of(const Mor& f) {
  const Rep& x = f.src();
  const Prime p = x.prime();
  const std::size_t nv = x.quiver().vertex_count();
  std::vector<FpMatrix> basis;  // dims_x(v) x k_v, columns span ker f_v
  DimVector dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    auto vecs = kernel_basis(f.comp(v));
    FpMatrix k(p, x.dim(v), vecs.size());
    for (std::size_t j = 0; j < vecs.size(); ++j) {
      for (std::size_t r = 0; r < x.dim(v); ++r) k.set(r, j, vecs[j](r, 0));
    }
    dims[v] = vecs.size();
    basis.push_back(std::move(k));
  }
  std::vector<FpMatrix> mats;
  for (std::size_t ai = 0; ai < x.quiver().arrow_count(); ++ai) {
    const auto& a = x.quiver().arrows()[ai];
    // X_a K_v = K_w M_a
    mats.push_back(left_inverse(basis[a.target]) * (x.mat(ai) * basis[a.source]));
  }
  auto object = share(Rep(x.quiver_ptr(), p, std::move(dims), std::move(mats)));
  Mor inclusion(object, f.src_ptr(), std::move(basis));
  return {std::move(object), std::move(inclusion)};
}

CokernelResult cokernel_of(const Mor& f) {
  const Rep& y = f.dst();
  const Prime p = y.prime();
  const std::size_t nv = y.quiver().vertex_count();
  std::vector<FpMatrix> quotient;  // (dim - r) x dim, kernel = image of f_v
  std::vector<FpMatrix> section;   // dim x (dim - r)
  DimVector dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const FpMatrix image = column_space_basis(f.comp(v));
    auto completion = complete_basis(image);
    dims[v] = completion.complement.cols();
    quotient.push_back(completion.inverse.select_rows(image.cols(), dims[v]));
    section.push_back(std::move(completion.complement));
  }
  std::vector<FpMatrix> mats;
  for (std::size_t ai = 0; ai < y.quiver().arrow_count(); ++ai) {
    const auto& a = y.quiver().arrows()[ai];
    mats.push_back(quotient[a.target] * (y.mat(ai) * section[a.source]));
  }
  auto object = share(Rep(y.quiver_ptr(), p, std::move(dims), std::move(mats)));
  Mor projection(f.dst_ptr(), object, std::move(quotient));
  return {std::move(object), std::move(projection)};
}

ImageFactorization image_factorization(const Mor& f) {
  const Rep& y = f.dst();
  const Prime p = y.prime();
  const std::size_t nv = y.quiver().vertex_count();
  std::vector<FpMatrix> basis;
  std::vector<FpMatrix> left;
  DimVector dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    basis.push_back(column_space_basis(f.comp(v)));
    left.push_back(left_inverse(basis.back()));
    dims[v] = basis.back().cols();
  }
  std::vector<FpMatrix> mats;
  for (std::size_t ai = 0; ai < y.quiver().arrow_count(); ++ai) {
    const auto& a = y.quiver().arrows()[ai];
    mats.push_back(left[a.target] * (y.mat(ai) * basis[a.source]));
  }
  auto image = share(Rep(y.quiver_ptr(), p, std::move(dims), std::move(mats)));
  std::vector<FpMatrix> onto;
  for (std::size_t v = 0; v < nv; ++v) onto.push_back(left[v] * f.comp(v));
  Mor deflation(f.src_ptr(), image, std::move(onto));
  Mor inflation(image, f.dst_ptr(), std::move(basis));
  return {std::move(deflation), std::move(image), std::move(inflation)};
}

Mor lift_through_mono(const Mor& mono, const Mor& f) {
  if (!(mono.dst() == f.dst())) throw InvalidMorphism("lift_through_mono: targets differ");
  std::vector<FpMatrix> comps;
  for (std::size_t v = 0; v < f.comps().size(); ++v) {
    comps.push_back(left_inverse(mono.comp(v)) * f.comp(v));
    if (!(mono.comp(v) * comps.back() == f.comp(v))) throw InvalidMorphism("lift_through_mono: image not contained");
  }
  return Mor(Mor::Trusted{}, f.src_ptr(), mono.src_ptr(), std::move(comps));
}

DirectSum direct_sum(std::shared_ptr<const Rep> x, std::shared_ptr<const Rep> y) {
  require_compatible(*x, *y);
  const Prime p = x->prime();
  const std::size_t nv = x->quiver().vertex_count();
  std::vector<FpMatrix> mats;
  for (std::size_t a = 0; a < x->quiver().arrow_count(); ++a) mats.push_back(block_diag(x->mat(a), y->mat(a)));
  auto sum = share(Rep(x->quiver_ptr(), p, add_dims(x->dims(), y->dims()), std::move(mats)));

  std::vector<FpMatrix> i1, i2, p1, p2;
  for (std::size_t v = 0; v < nv; ++v) {
    const auto dx = x->dim(v);
    const auto dy = y->dim(v);
    FpMatrix a(p, dx + dy, dx), b(p, dx + dy, dy);
    for (std::size_t k = 0; k < dx; ++k) a.set(k, k, 1);
    for (std::size_t k = 0; k < dy; ++k) b.set(dx + k, k, 1);
    p1.push_back(a.transpose());
    p2.push_back(b.transpose());
    i1.push_back(std::move(a));
    i2.push_back(std::move(b));
  }
  return {sum,
          Mor(x, sum, std::move(i1)),
          Mor(y, sum, std::move(i2)),
          Mor(sum, x, std::move(p1)),
          Mor(sum, y, std::move(p2))};
}

namespace {

std::vector<std::size_t> arrow_ranks(const Rep& x) {
  std::vector<std::size_t> r;
  for (const auto& m : x.mats()) r.push_back(rank(m));
  return r;
}

}  // namespace

std::optional<Mor> is_isomorphic(std::shared_ptr<const Rep> x, std::shared_ptr<const Rep> y, std::uint64_t ceiling) {
  require_compatible(*x, *y);
  if (x->dims() != y->dims()) return std::nullopt;
  if (*x == *y) return Mor::identity(x);
  if (arrow_ranks(*x) != arrow_ranks(*y)) return std::nullopt;

  const HomSpace hom = hom_space(x, y);
  if (hom.dim() != hom_space(x, x).dim() || hom.dim() != hom_space(y, y).dim()) return std::nullopt;

  const auto count = hom.count();
  if (count <= ceiling) {
    for (std::uint64_t i = 0; i < count; ++i) {
      Mor f = hom.element(i);
      if (f.is_iso()) return f;
    }
    return std::nullopt;
  }

  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<Residue> digit(0, x->prime().value() - 1);
  for (int s = 0; s < kIsoSampleCount; ++s) {
    std::vector<FpMatrix> comps;
    for (std::size_t v = 0; v < x->quiver().vertex_count(); ++v) comps.emplace_back(x->prime(), y->dim(v), x->dim(v));
    for (const auto& b : hom.basis()) {
      const Residue c = digit(rng);
      if (c == 0) continue;
      for (std::size_t v = 0; v < comps.size(); ++v) comps[v] = comps[v] + mat_scale(b.comp(v), c);
    }
    Mor f(Mor::Trusted{}, x, y, std::move(comps));
    if (f.is_iso()) return f;
  }
  throw SearchBudgetExceeded("isomorphism search: Hom space of " + std::to_string(count) +
                                 " elements exceeds the ceiling and sampling found no isomorphism",
                             count);
}

std::vector<Mor> end_elements(std::shared_ptr<const Rep> x, std::uint64_t ceiling) {
  const HomSpace end = hom_space(x, x);
  const auto n = end.checked_count(ceiling);
  std::vector<Mor> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(end.element(i));
  return out;
}

}  // namespace semibrick
