#include "semibrick/exact.hpp"

#include "semibrick/universe.hpp"

namespace semibrick {

std::string to_string(Structure s) { return s == Structure::Standard ? "standard" : "split"; }

Structure parse_structure(const std::string& s) {
  if (s == "standard") return Structure::Standard;
  if (s == "split") return Structure::Split;
  throw InvalidArgument("unknown exact structure: " + s);
}

ExactCtx ExactCtx::restricted_to(const Universe& u, ClassSet members) const {
  for (auto id : members.ids()) {
    if (id.value >= u.size()) throw InvalidArgument("subuniverse refers to a class outside the universe");
  }
  ExactCtx out(structure_);
  out.universe_ = &u;
  out.subuniverse_ = std::move(members);
  return out;
}

bool ExactCtx::admits(const Rep& x) const {
  if (!subuniverse_) return true;
  try {
    return subuniverse_->contains(universe_->class_of(x));
  } catch (const OutOfBounds&) {
    return false;
  }
}

std::string ExactCtx::key() const {
  std::string k = to_string(structure_);
  if (subuniverse_) {
    k += "|";
    for (auto id : subuniverse_->ids()) k += std::to_string(id.value) + ",";
  }
  return k;
}

bool is_short_exact(const Mor& f, const Mor& g) {
  if (!(f.dst() == g.src())) return false;
  for (std::size_t v = 0; v < f.comps().size(); ++v) {
    const auto& fv = f.comp(v);
    const auto& gv = g.comp(v);
    if (!(gv * fv).is_zero()) return false;
    if (rank(fv) != fv.cols()) return false;
    if (rank(gv) != gv.rows()) return false;
    // With f injective, g surjective and g f = 0, im f = ker g iff the dimensions add up.
    if (fv.rows() != fv.cols() + gv.rows()) return false;
  }
  return true;
}

std::optional<Mor> find_retraction(const Mor& f) {
  const HomSpace back = hom_space(f.dst_ptr(), f.src_ptr());
  const Prime p = f.src().prime();
  const FpMatrix target = Mor::identity(f.src_ptr()).vectorize();
  FpMatrix system(p, target.rows(), back.dim());
  for (std::size_t j = 0; j < back.dim(); ++j) {
    const FpMatrix col = compose(back.basis()[j], f).vectorize();
    for (std::size_t r = 0; r < col.rows(); ++r) system.set(r, j, col(r, 0));
  }
  auto solution = solve_affine(system, target);
  if (!solution) return std::nullopt;
  Mor r = Mor::zero(f.dst_ptr(), f.src_ptr());
  for (std::size_t j = 0; j < back.dim(); ++j) {
    const Residue c = solution->particular()(j, 0);
    if (c != 0) r = mor_add(r, mor_scale(back.basis()[j], c));
  }
  return r;
}

bool is_conflation(const ExactCtx& ctx, const Mor& f, const Mor& g) {
  if (!is_short_exact(f, g)) return false;
  if (ctx.structure() == Structure::Split && !find_retraction(f)) return false;
  return ctx.admits(f.src()) && ctx.admits(f.dst()) && ctx.admits(g.dst());
}

bool is_inflation(const ExactCtx& ctx, const Mor& f) {
  if (!f.is_injective()) return false;
  return is_conflation(ctx, f, cokernel_of(f).projection);
}

bool is_deflation(const ExactCtx& ctx, const Mor& g) {
  if (!g.is_surjective()) return false;
  return is_conflation(ctx, kernel_of(g).inclusion, g);
}

ImageFactorization factor_through_image(const Mor& phi) { return image_factorization(phi); }

bool is_admissible(const ExactCtx& ctx, const Mor& phi) {
  const auto fact = factor_through_image(phi);
  return is_deflation(ctx, fact.deflation) && is_inflation(ctx, fact.inflation);
}

}  // namespace semibrick
