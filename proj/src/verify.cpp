#include "semibrick/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "semibrick/bricks.hpp"
#include "semibrick/filt.hpp"
#include "semibrick/parallel.hpp"
#include "semibrick/wide.hpp"

namespace semibrick {

namespace {

std::string set_text(const ClassSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto id : s.ids()) {
    out += (first ? "" : ",") + std::to_string(id.value);
    first = false;
  }
  return out + "}";
}

/// a ∧ b ⇒ c, or ¬(a ∧ b) when c is empty.
struct Clause {
  std::uint32_t a, b;
  std::optional<std::uint32_t> c;
};

}  // namespace

std::vector<ClassSet> enumerate_subcategory_candidates(const Universe& u, const ExactCtx& ctx, SearchMode mode,
                                                       std::uint64_t node_budget, std::uint64_t* nodes) {
  const std::size_t n = u.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return u.rep({a}).total_dim() < u.rep({b}).total_dim();
  });
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  std::vector<Clause> clauses;
  for (auto a : u.ids()) {
    for (auto b : u.ids()) {
      if (b < a) continue;
      if (auto s = u.sum_class(a, b)) clauses.push_back({a.value, b.value, s->value});
    }
  }
  if (mode == SearchMode::Pruned) {
    for (const auto& t : u.conflation_table(ctx).triples) {
      clauses.push_back({t.x.value, t.z.value, t.y.value});
      clauses.push_back({t.x.value, t.y.value, t.z.value});
      clauses.push_back({t.y.value, t.z.value, t.x.value});
    }
    const auto& morphisms = u.morphism_table(ctx);
    for (auto x : u.ids()) {
      for (auto y : u.ids()) {
        const auto& pair = morphisms.at(x, y);
        if (!ctx.admits(x) || !ctx.admits(y)) continue;
        if (pair.first_nonadmissible) clauses.push_back({x.value, y.value, std::nullopt});
        for (auto img : pair.images.ids()) clauses.push_back({x.value, y.value, img.value});
      }
    }
  }

  std::vector<std::vector<Clause>> by_level(n);
  for (const auto& c : clauses) {
    auto last = std::max(pos[c.a], pos[c.b]);
    if (c.c) last = std::max(last, pos[*c.c]);
    by_level[last].push_back(c);
  }

  std::vector<char> in(n, 0);
  std::vector<ClassSet> out;
  std::uint64_t visited = 0;
  std::function<void(std::size_t)> dfs = [&](std::size_t level) {
    if (++visited > node_budget) {
      throw BudgetExceeded("subcategory search exceeded " + std::to_string(node_budget) + " nodes", visited);
    }
    if (level == n) {
      ClassSet s;
      for (std::uint32_t i = 0; i < n; ++i) {
        if (in[i]) s.insert({i});
      }
      out.push_back(std::move(s));
      return;
    }
    const auto cls = order[level];
    for (char choice : {char{1}, char{0}}) {
      if (cls == u.zero().value && choice == 0) continue;
      in[cls] = choice;
      const bool ok = std::all_of(by_level[level].begin(), by_level[level].end(), [&](const Clause& c) {
        if (!(in[c.a] && in[c.b])) return true;
        return c.c.has_value() && in[*c.c];
      });
      if (ok) dfs(level + 1);
      in[cls] = 0;
    }
  };
  dfs(0);
  if (nodes) *nodes = visited;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassSet> enumerate_length_wide(const Universe& u, const ExactCtx& ctx, SearchMode mode,
                                            std::uint64_t node_budget) {
  auto candidates = enumerate_subcategory_candidates(u, ctx, mode, node_budget);
  if (mode == SearchMode::SumClosedOnly) {
    const auto& conflations = u.conflation_table(ctx);
    const auto& morphisms = u.morphism_table(ctx);
    std::erase_if(candidates, [&](const ClassSet& w) { return !satisfies_wide_conditions(conflations, morphisms, w); });
  }
  auto keep = par::map<char>(candidates.size(), [&](std::size_t i) {
    return is_wide(u, ctx, candidates[i]).pass() && is_length(u, ctx, candidates[i]) ? 1 : 0;
  });
  std::vector<ClassSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) out.push_back(std::move(candidates[i]));
  }
  return out;
}

std::size_t BijectionReport::unresolved_truncations() const {
  return static_cast<std::size_t>(
      std::count_if(truncation_events.begin(), truncation_events.end(), [](const TruncationEvent& e) { return !e.resolved; }));
}

BijectionReport verify_bijection(const Universe& u, const ExactCtx& ctx, SearchMode mode, std::uint64_t node_budget) {
  BijectionReport report;
  report.ctx = ctx.key();
  report.semibricks = enumerate_semibricks(u);

  struct Forward {
    ClassSet closure;
    std::vector<std::string> failures;
  };
  auto forward = par::map<Forward>(report.semibricks.size(), [&](std::size_t i) {
    const ClassSet& s = report.semibricks[i];
    Forward f;
    f.closure = filt_closure(u, ctx, s);
    const auto label = "Filt" + set_text(s) + " = " + set_text(f.closure);
    if (!is_wide(u, ctx, f.closure).pass()) f.failures.push_back(label + " is not wide");
    if (!is_length(u, ctx, f.closure)) f.failures.push_back(label + " is not length");
    const auto simp = simples_of(u, ctx, f.closure);
    if (!(simp == s)) f.failures.push_back("simp(" + label + ") = " + set_text(simp) + " differs from the semibrick");
    return f;
  });
  std::set<std::vector<IsoClassId>> images;
  for (std::size_t i = 0; i < forward.size(); ++i) {
    report.forward.push_back({report.semibricks[i], forward[i].closure});
    for (auto& msg : forward[i].failures) report.roundtrip_failures.push_back(std::move(msg));
    if (!images.insert(forward[i].closure.ids()).second) {
      report.roundtrip_failures.push_back("two semibricks share the closure " + set_text(forward[i].closure));
    }
  }

  std::uint64_t nodes = 0;
  auto candidates = enumerate_subcategory_candidates(u, ctx, mode, node_budget, &nodes);
  report.search_nodes = nodes;
  if (mode == SearchMode::SumClosedOnly) {
    const auto& conflations = u.conflation_table(ctx);
    const auto& morphisms = u.morphism_table(ctx);
    std::erase_if(candidates, [&](const ClassSet& w) { return !satisfies_wide_conditions(conflations, morphisms, w); });
  }
  struct Backward {
    bool length_wide = false;
    ClassSet simples;
    std::vector<std::string> failures;
  };
  auto backward = par::map<Backward>(candidates.size(), [&](std::size_t i) {
    const ClassSet& w = candidates[i];
    Backward b;
    b.length_wide = is_wide(u, ctx, w).pass() && is_length(u, ctx, w);
    if (!b.length_wide) return b;
    b.simples = simples_of(u, ctx, w);
    if (!is_semibrick(u, b.simples)) b.failures.push_back("simples " + set_text(b.simples) + " of " + set_text(w) + " are not a semibrick");
    const auto back = filt_closure(u, ctx, b.simples);
    if (!(back == w)) b.failures.push_back("Filt(simp " + set_text(w) + ") = " + set_text(back));
    return b;
  });
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!backward[i].length_wide) continue;
    report.wide_subcats.push_back(candidates[i]);
    report.backward.push_back({backward[i].simples, candidates[i]});
    for (auto& msg : backward[i].failures) report.roundtrip_failures.push_back(std::move(msg));
  }

  std::set<std::vector<IsoClassId>> found;
  for (const auto& w : report.wide_subcats) found.insert(w.ids());
  for (const auto& img : images) {
    if (!found.count(img)) report.roundtrip_failures.push_back("closure " + set_text(ClassSet(img)) + " missing from the direct search");
  }
  for (const auto& w : found) {
    if (!images.count(w)) report.roundtrip_failures.push_back("length wide " + set_text(ClassSet(w)) + " is not Filt of any semibrick");
  }

  report.truncation_events = u.conflation_table(ctx).events;
  return report;
}

CorollaryReport verify_corollary(const Universe& u, const ExactCtx& ctx) {
  CorollaryReport report;
  report.ctx = ctx.key();
  report.simples = simples(u, ctx);
  ClassSet admitted;
  for (auto id : u.ids()) {
    if (ctx.admits(id)) admitted.insert(id);
  }
  if (!admitted.is_subset_of(filt_closure(u, ctx, report.simples))) {
    throw PreconditionFailed("verify_corollary: the category is not length inside the window");
  }

  const auto abelian = is_abelian_with_standard(u, ctx);
  report.lhs = abelian.abelian;
  report.lhs_witness = abelian.witness;
  report.morphisms_checked = abelian.checked;
  report.rhs = is_semibrick(u, report.simples);

  if (!report.rhs) {
    const auto ids = report.simples.ids();
    for (auto s : ids) {
      for (auto t : ids) {
        const HomSpace& hom = u.hom(s, t);
        const auto count = hom.checked_count(u.ceiling());
        for (std::uint64_t k = 1; k < count && !report.rhs_witness; ++k) {
          Mor phi = hom.element(k);
          if (!phi.is_iso()) report.rhs_witness = std::move(phi);
        }
        if (report.rhs_witness) break;
      }
      if (report.rhs_witness) break;
    }
  }
  return report;
}

ClassSet sum_closure(const Universe& u, const ClassSet& s) {
  ClassSet out = s;
  out.insert(u.zero());
  bool grew = true;
  while (grew) {
    grew = false;
    const auto ids = out.ids();
    for (auto a : ids) {
      for (auto b : ids) {
        auto c = u.sum_class(a, b);
        if (c && !out.contains(*c)) {
          out.insert(*c);
          grew = true;
        }
      }
    }
  }
  return out;
}

bool ExampleReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ExampleCheck& c) { return c.pass; });
}

ExampleReport run_split_example(const Universe& u) {
  ExampleReport r;
  const ExactCtx standard = ExactCtx::standard();
  const ExactCtx split = ExactCtx::split();
  r.simples = simples(u, standard);
  r.semisimple = sum_closure(u, r.simples);
  r.semisimple_algebra = r.semisimple == u.all();
  r.standard_closure = filt_closure(u, standard, r.simples);
  r.split_closure = filt_closure(u, split, r.simples);

  r.checks.push_back({"standard simples form a semibrick", is_semibrick(u, r.simples), set_text(r.simples)});
  r.checks.push_back({"standard Filt of the simples is everything", r.standard_closure == u.all(),
                      std::to_string(r.standard_closure.size()) + " of " + std::to_string(u.size()) + " classes"});
  r.checks.push_back({"split Filt of the simples is the semisimple classes", r.split_closure == r.semisimple,
                      std::to_string(r.split_closure.size()) + " split-filtered, " + std::to_string(r.semisimple.size()) +
                          " semisimple"});

  const auto standard_report = is_wide(u, standard, r.semisimple);
  if (!standard_report.condition_a.pass && !standard_report.condition_a.witnesses.empty()) {
    const auto& c = standard_report.condition_a.witnesses.front().conflation;
    if (c) r.extension_witness = u.class_of(c->f.dst_ptr());
  }
  if (r.semisimple_algebra) {
    r.checks.push_back({"semisimple set is wide under the standard structure", standard_report.pass(),
                        "semisimple algebra: every object is semisimple"});
  } else {
    r.checks.push_back({"semisimple set is not extension-closed under the standard structure",
                        !standard_report.condition_a.pass,
                        r.extension_witness ? "middle term class " + std::to_string(r.extension_witness->value)
                                            : "no witness"});
  }
  r.checks.push_back({"semisimple set is wide under the split structure", is_wide(u, split, r.semisimple).pass(),
                      set_text(r.semisimple)});
  return r;
}

}  // namespace semibrick
