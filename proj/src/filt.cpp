#include "semibrick/filt.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "semibrick/bricks.hpp"
#include "semibrick/parallel.hpp"

namespace semibrick {

namespace {

/// Memoized deflation search. Kernels have strictly smaller total dimension,
/// so the recursion terminates and level-by-level evaluation only reads
/// finished entries.
class FiltSolver {
 public:
  FiltSolver(const Universe& u, const ExactCtx& ctx, const ClassSet& s)
      : u_(u), ctx_(ctx), gens_(s.ids()), memo_(u.size()) {}

  const std::optional<FiltrationCertificate>& solve(IsoClassId x) {
    auto& slot = memo_[x.value];
    if (!slot) slot.emplace(search(x));
    return *slot;
  }

 private:
  std::optional<FiltrationCertificate> search(IsoClassId x) {
    if (u_.rep(x).is_zero()) return FiltrationCertificate{x, {}};
    if (!ctx_.admits(x)) return std::nullopt;
    for (auto s : gens_) {
      if (u_.rep(s).is_zero() || !dims_leq(u_.dims(s), u_.dims(x))) continue;
      const HomSpace& hom = u_.hom(x, s);
      const auto count = hom.checked_count(u_.ceiling());
      for (std::uint64_t i = 0; i < count; ++i) {
        const Mor g = hom.element(i);
        if (!g.is_surjective()) continue;
        const auto kernel = kernel_of(g);
        if (!is_conflation(ctx_, kernel.inclusion, g)) continue;
        const auto [k, iso] = u_.class_of_with_iso(kernel.object);
        const auto& sub = solve(k);
        if (!sub) continue;
        FiltrationCertificate cert{x, sub->steps};
        cert.steps.push_back({compose(kernel.inclusion, iso), s});
        return cert;
      }
    }
    return std::nullopt;
  }

  const Universe& u_;
  const ExactCtx& ctx_;
  std::vector<IsoClassId> gens_;
  std::vector<std::optional<std::optional<FiltrationCertificate>>> memo_;
};

std::string id_text(IsoClassId id) { return std::to_string(id.value); }

}  // namespace

std::optional<std::string> validate_certificate(const Universe& u, const ExactCtx& ctx, const ClassSet& s,
                                                const FiltrationCertificate& cert) {
  if (cert.steps.empty()) {
    if (cert.object != u.zero()) return "empty chain for a nonzero object";
    return std::nullopt;
  }
  if (!cert.steps.front().inflation.src().is_zero()) return "chain does not start at 0";
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    const std::string at = "step " + std::to_string(i + 1) + ": ";
    if (!step.inflation.is_valid()) return at + "not a morphism";
    if (i > 0 && !(step.inflation.src() == cert.steps[i - 1].inflation.dst())) return at + "chain is disconnected";
    if (!is_inflation(ctx, step.inflation)) return at + "not an inflation";
    if (!s.contains(step.factor)) return at + "factor " + id_text(step.factor) + " is not a generator";
    if (u.class_of(cokernel_of(step.inflation).object) != step.factor) return at + "cokernel is not the named factor";
  }
  if (u.class_of(cert.steps.back().inflation.dst_ptr()) != cert.object) return "chain ends at the wrong object";
  return std::nullopt;
}

std::optional<FiltrationCertificate> filt_contains(const Universe& u, const ExactCtx& ctx, const ClassSet& s,
                                                   IsoClassId x) {
  FiltSolver solver(u, ctx, s);
  auto cert = solver.solve(x);
  if (cert) {
    if (auto bad = validate_certificate(u, ctx, s, *cert)) throw std::logic_error("invalid certificate: " + *bad);
  }
  return cert;
}

FiltClosure filt_closure_with_certificates(const Universe& u, const ExactCtx& ctx, const ClassSet& s) {
  FiltSolver solver(u, ctx, s);
  std::map<std::size_t, std::vector<IsoClassId>> levels;
  for (auto id : u.ids()) levels[u.rep(id).total_dim()].push_back(id);

  FiltClosure out;
  out.certificates.resize(u.size());
  for (const auto& [level, ids] : levels) {
    // Each class only consults classes of lower total dimension.
    auto certs = par::map<std::optional<FiltrationCertificate>>(ids.size(), [&](std::size_t i) { return solver.solve(ids[i]); });
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (certs[i]) out.members.insert(ids[i]);
      out.certificates[ids[i].value] = std::move(certs[i]);
    }
  }
  return out;
}

ClassSet filt_closure(const Universe& u, const ExactCtx& ctx, const ClassSet& s) {
  return filt_closure_with_certificates(u, ctx, s).members;
}

bool ExtClosure::ambiguous() const {
  return std::any_of(events.begin(), events.end(), [](const TruncationEvent& e) { return !e.resolved; });
}

ExtClosure smallest_ext_closed(const Universe& u, const ExactCtx& ctx, const ClassSet& s) {
  ExtClosure out;
  out.members = s;
  out.members.insert(u.zero());
  std::set<std::pair<IsoClassId, IsoClassId>> done;
  while (true) {
    ClassSet added;
    const auto current = out.members.ids();
    for (auto x : current) {
      for (auto z : current) {
        if (!done.insert({x, z}).second) continue;
        const auto target = add_dims(u.dims(x), u.dims(z));
        if (!u.within_bound(target)) {
          // Middle terms only grow along the iteration, so nothing inside the window depends on this pair.
          out.events.push_back({"smallest_ext_closed", "x=" + id_text(x) + " z=" + id_text(z) + " skipped", target, true});
          continue;
        }
        try {
          for (const auto& [y, c] : conflations_between(u, ctx, x, z)) {
            if (!out.members.contains(y)) added.insert(y);
          }
        } catch (const OutOfBounds& e) {
          out.events.push_back({"smallest_ext_closed", e.what(), target, false});
        }
      }
    }
    if (added.empty()) break;
    for (auto id : added.ids()) out.members.insert(id);
    out.added.push_back(std::move(added));
  }
  return out;
}

PropertyReport check_frombrick(const Universe& u, const ExactCtx& ctx, const ClassSet& s) {
  if (!is_semibrick(u, s)) throw PreconditionFailed("check_frombrick: input is not a semibrick");
  const ClassSet closure = filt_closure(u, ctx, s);
  std::vector<std::pair<IsoClassId, IsoClassId>> pairs;
  for (auto b : s.ids()) {
    for (auto y : closure.ids()) pairs.emplace_back(b, y);
  }

  auto partial = par::map<PropertyReport>(pairs.size(), [&](std::size_t i) {
    const auto [b, y] = pairs[i];
    PropertyReport r;
    const HomSpace& hom = u.hom(b, y);
    const auto count = hom.checked_count(u.ceiling());
    for (std::uint64_t k = 0; k < count; ++k) {
      ++r.checked;
      Mor phi = hom.element(k);
      if (phi.is_zero()) continue;
      if (!is_inflation(ctx, phi)) {
        r.violations.push_back({b, y, std::move(phi), "nonzero but not an inflation"});
        continue;
      }
      const auto q = u.class_of(cokernel_of(phi).object);
      if (!closure.contains(q)) {
        r.violations.push_back({b, y, std::move(phi), "cokernel class " + id_text(q) + " is outside Filt"});
      }
    }
    return r;
  });

  PropertyReport out;
  for (auto& r : partial) {
    out.checked += r.checked;
    for (auto& v : r.violations) out.violations.push_back(std::move(v));
  }
  return out;
}

CertificateSlices certificate_slices(const Universe& u, const ExactCtx& ctx, const ClassSet& s,
                                     const FiltrationCertificate& cert, std::size_t i) {
  const std::size_t l = cert.length();
  if (i > l) throw InvalidArgument("certificate_slices: index beyond chain length");

  CertificateSlices out{{u.zero(), {}}, {u.zero(), {}}};
  out.prefix.steps.assign(cert.steps.begin(), cert.steps.begin() + static_cast<std::ptrdiff_t>(i));
  if (i > 0) out.prefix.object = u.class_of(cert.steps[i - 1].inflation.dst_ptr());

  if (i < l) {
    // embed[j]: X_j -> X for j = i..l.
    std::vector<std::optional<Mor>> embed(l + 1);
    embed[l] = Mor::identity(cert.steps.back().inflation.dst_ptr());
    for (std::size_t j = l; j > i; --j) embed[j - 1] = compose(*embed[j], cert.steps[j - 1].inflation);
    const auto quotient = cokernel_of(*embed[i]);
    out.quotient.object = u.class_of(quotient.object);

    std::optional<ImageFactorization> prev = image_factorization(compose(quotient.projection, *embed[i]));
    for (std::size_t j = i + 1; j <= l; ++j) {
      auto cur = image_factorization(compose(quotient.projection, *embed[j]));
      out.quotient.steps.push_back({lift_through_mono(cur.inflation, prev->inflation), cert.steps[j - 1].factor});
      prev = std::move(cur);
    }
  }

  if (auto bad = validate_certificate(u, ctx, s, out.prefix)) throw std::logic_error("prefix certificate: " + *bad);
  if (auto bad = validate_certificate(u, ctx, s, out.quotient)) throw std::logic_error("quotient certificate: " + *bad);
  return out;
}

}  // namespace semibrick
