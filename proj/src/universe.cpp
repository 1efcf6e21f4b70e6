#include "semibrick/universe.hpp"

#include <algorithm>

#include "semibrick/parallel.hpp"

namespace semibrick {

namespace {

std::string dims_text(const DimVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

std::size_t entry_count(const Quiver& q, const DimVector& dims) {
  std::size_t k = 0;
  for (const auto& a : q.arrows()) k += dims[a.target] * dims[a.source];
  return k;
}

/// Dimension vectors <= bound in lexicographic order.
std::vector<DimVector> dimension_vectors(const DimVector& bound) {
  std::vector<DimVector> out;
  DimVector cur(bound.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = bound.size();
    while (i > 0) {
      --i;
      if (cur[i] < bound[i]) {
        ++cur[i];
        std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end(), 0);
        break;
      }
      if (i == 0) return out;
    }
    if (bound.empty()) return out;
  }
}

struct Signature {
  std::vector<std::size_t> ranks;
  std::size_t end_dim = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature_of(const std::shared_ptr<const Rep>& x) {
  Signature s;
  for (const auto& m : x->mats()) s.ranks.push_back(rank(m));
  s.end_dim = hom_space(x, x).dim();
  return s;
}

}  // namespace

Universe::Universe(UniverseConfig config) : config_(std::move(config)) {}
Universe::~Universe() = default;

std::vector<IsoClassId> Universe::ids() const {
  std::vector<IsoClassId> out;
  for (std::uint32_t i = 0; i < classes_.size(); ++i) out.push_back({i});
  return out;
}

ClassSet Universe::all() const { return ClassSet(ids()); }

IsoClassId Universe::class_of(const Rep& x) const { return class_of(share(x)); }

IsoClassId Universe::class_of(const std::shared_ptr<const Rep>& x) const {
  require_compatible(*x, rep(zero()));
  if (!within_bound(x->dims())) {
    throw OutOfBounds("object with dimension vector " + dims_text(x->dims()) + " exceeds the bound " +
                      dims_text(config_.bound));
  }
  const std::string key = x->key();
  {
    std::shared_lock lock(memo_mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  auto bucket = by_dims_.find(x->dims());
  if (bucket != by_dims_.end()) {
    for (auto id : bucket->second) {
      if (is_isomorphic(classes_[id.value], x, config_.ceiling)) {
        std::unique_lock lock(memo_mutex_);
        memo_.emplace(key, id);
        return id;
      }
    }
  }
  throw std::logic_error("universe is incomplete: no representative for " + key);
}

std::pair<IsoClassId, Mor> Universe::class_of_with_iso(const std::shared_ptr<const Rep>& x) const {
  const auto id = class_of(x);
  auto iso = is_isomorphic(classes_[id.value], x, config_.ceiling);
  if (!iso) throw std::logic_error("class_of and is_isomorphic disagree");
  return {id, std::move(*iso)};
}

std::optional<IsoClassId> Universe::sum_class(IsoClassId x, IsoClassId y) const {
  if (!within_bound(add_dims(dims(x), dims(y)))) return std::nullopt;
  return class_of(direct_sum(rep_ptr(x), rep_ptr(y)).object);
}

std::string Universe::fingerprint() const {
  std::string s;
  for (const auto& c : classes_) s += c->key() + "\n";
  return s;
}

std::uint64_t estimate_tuple_count(const Quiver& q, Prime p, const DimVector& bound) {
  std::uint64_t total = 0;
  for (const auto& d : dimension_vectors(bound)) {
    const auto n = saturating_pow(p.value(), entry_count(q, d));
    total = total > UINT64_MAX - n ? UINT64_MAX : total + n;
  }
  return total;
}

Rep rep_from_index(const std::shared_ptr<const Quiver>& q, Prime p, const DimVector& dims, std::uint64_t index) {
  std::vector<FpMatrix> mats;
  for (const auto& a : q->arrows()) {
    FpMatrix m(p, dims[a.target], dims[a.source]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m.set(r, c, static_cast<std::int64_t>(index % p.value()));
        index /= p.value();
      }
    }
    mats.push_back(std::move(m));
  }
  return Rep(q, p, dims, std::move(mats));
}

std::shared_ptr<const Universe> enumerate_universe(UniverseConfig config) {
  if (!config.quiver) throw InvalidArgument("universe needs a quiver");
  if (config.bound.size() != config.quiver->vertex_count()) {
    throw InvalidArgument("dimension bound has " + std::to_string(config.bound.size()) + " entries for " +
                          std::to_string(config.quiver->vertex_count()) + " vertices");
  }
  const auto estimate = estimate_tuple_count(*config.quiver, config.p, config.bound);
  if (estimate > config.tuple_budget) {
    throw BudgetExceeded("universe enumeration would visit " + std::to_string(estimate) +
                             " matrix tuples, budget is " + std::to_string(config.tuple_budget),
                         estimate);
  }

  std::shared_ptr<Universe> u(new Universe(config));
  const auto& q = config.quiver;
  for (const auto& dims : dimension_vectors(config.bound)) {
    const auto count = saturating_pow(config.p.value(), entry_count(*q, dims));
    // Signatures are independent per tuple; deduplication below is ordered.
    auto reps = par::map<std::shared_ptr<const Rep>>(
        static_cast<std::size_t>(count), [&](std::size_t i) { return share(rep_from_index(q, config.p, dims, i)); });
    auto sigs = par::map<Signature>(reps.size(), [&](std::size_t i) { return signature_of(reps[i]); });

    std::vector<std::pair<Signature, IsoClassId>> found;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      std::optional<IsoClassId> match;
      for (const auto& [sig, id] : found) {
        if (sig == sigs[i] && is_isomorphic(u->classes_[id.value], reps[i], config.ceiling)) {
          match = id;
          break;
        }
      }
      if (!match) {
        match = IsoClassId{static_cast<std::uint32_t>(u->classes_.size())};
        u->classes_.push_back(reps[i]);
        u->by_dims_[dims].push_back(*match);
        found.emplace_back(sigs[i], *match);
      }
      u->memo_.emplace(reps[i]->key(), *match);
    }
  }

  const std::size_t n = u->classes_.size();
  u->homs_ = par::map<HomSpace>(n * n, [&](std::size_t i) {
    return hom_space(u->classes_[i / n], u->classes_[i % n]);
  });
  return u;
}

std::optional<Conflation> find_conflation(const Universe& u, const ExactCtx& ctx, IsoClassId x, IsoClassId y,
                                          IsoClassId z) {
  if (u.dims(y) != add_dims(u.dims(x), u.dims(z))) return std::nullopt;
  if (!ctx.admits(x) || !ctx.admits(y) || !ctx.admits(z)) return std::nullopt;
  const HomSpace& hom = u.hom(x, y);
  const auto count = hom.checked_count(u.ceiling());
  for (std::uint64_t i = 0; i < count; ++i) {
    Mor f = hom.element(i);
    if (!f.is_injective()) continue;
    if (ctx.structure() == Structure::Split && !find_retraction(f)) continue;
    auto coker = cokernel_of(f);
    auto iso = is_isomorphic(coker.object, u.rep_ptr(z), u.ceiling());
    if (!iso) continue;
    Mor g = compose(*iso, coker.projection);
    if (is_conflation(ctx, f, g)) return Conflation{std::move(f), std::move(g)};
  }
  return std::nullopt;
}

std::vector<std::pair<IsoClassId, Conflation>> conflations_between(const Universe& u, const ExactCtx& ctx, IsoClassId x,
                                                                   IsoClassId z) {
  const DimVector target = add_dims(u.dims(x), u.dims(z));
  if (!u.within_bound(target)) {
    throw OutOfBounds("middle term " + dims_text(target) + " of a conflation exceeds the bound " +
                      dims_text(u.bound()));
  }
  std::vector<std::pair<IsoClassId, Conflation>> out;
  for (auto y : u.ids()) {
    if (u.dims(y) != target) continue;
    if (auto c = find_conflation(u, ctx, x, y, z)) out.emplace_back(y, std::move(*c));
  }
  return out;
}

namespace {

std::vector<IsoClassId> admitted_classes(const Universe& u, const ExactCtx& ctx) {
  std::vector<IsoClassId> out;
  for (auto id : u.ids()) {
    if (ctx.admits(id)) out.push_back(id);
  }
  return out;
}

}  // namespace

const ConflationTable& Universe::conflation_table(const ExactCtx& ctx) const {
  const std::string key = ctx.key();
  {
    std::lock_guard lock(table_mutex_);
    if (auto it = conflation_tables_.find(key); it != conflation_tables_.end()) return *it->second;
  }

  const auto members = admitted_classes(*this, ctx);
  const std::size_t m = members.size();
  struct PairResult {
    std::vector<ConflationTriple> triples;
    std::optional<TruncationEvent> event;
  };
  auto results = par::map<PairResult>(m * m, [&](std::size_t i) {
    const auto x = members[i / m];
    const auto z = members[i % m];
    PairResult r;
    const auto target = add_dims(dims(x), dims(z));
    if (!within_bound(target)) {
      r.event = TruncationEvent{"conflations_between",
                                "x=" + std::to_string(x.value) + " z=" + std::to_string(z.value) +
                                    ": middle term leaves the window; no in-window class can be such a middle term",
                                target, true};
      return r;
    }
    for (auto& [y, c] : conflations_between(*this, ctx, x, z)) r.triples.push_back({x, y, z, std::move(c)});
    return r;
  });

  auto table = std::make_shared<ConflationTable>();
  for (auto& r : results) {
    for (auto& t : r.triples) table->triples.push_back(std::move(t));
    if (r.event) table->events.push_back(std::move(*r.event));
  }

  std::lock_guard lock(table_mutex_);
  auto [it, inserted] = conflation_tables_.emplace(key, std::move(table));
  return *it->second;
}

const MorphismTable& Universe::morphism_table(const ExactCtx& ctx) const {
  const std::string key = ctx.key();
  {
    std::lock_guard lock(table_mutex_);
    if (auto it = morphism_tables_.find(key); it != morphism_tables_.end()) return *it->second;
  }

  const std::size_t n = size();
  auto pairs = par::map<HomPairSummary>(n * n, [&](std::size_t i) {
    const IsoClassId x{static_cast<std::uint32_t>(i / n)};
    const IsoClassId y{static_cast<std::uint32_t>(i % n)};
    HomPairSummary s;
    if (!ctx.admits(x) || !ctx.admits(y)) return s;
    const HomSpace& h = hom(x, y);
    s.count = h.checked_count(ceiling());
    for (std::uint64_t k = 0; k < s.count; ++k) {
      const Mor phi = h.element(k);
      const auto fact = factor_through_image(phi);
      s.images.insert(class_of(fact.image));
      if (!s.first_nonadmissible && !(is_deflation(ctx, fact.deflation) && is_inflation(ctx, fact.inflation))) {
        s.first_nonadmissible = k;
      }
    }
    return s;
  });

  auto table = std::make_shared<MorphismTable>();
  table->n = n;
  table->pairs = std::move(pairs);
  std::lock_guard lock(table_mutex_);
  auto [it, inserted] = morphism_tables_.emplace(key, std::move(table));
  return *it->second;
}

}  // namespace semibrick
