#include "semibrick/wide.hpp"

#include "semibrick/bricks.hpp"
#include "semibrick/filt.hpp"

namespace semibrick {

namespace {

std::string id_text(IsoClassId id) { return std::to_string(id.value); }

void add_witness(ConditionResult& r, WideWitness w) {
  r.pass = false;
  if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(w));
}

}  // namespace

std::vector<std::string> candidate_violations(const Universe& u, const ClassSet& w,
                                              std::vector<TruncationEvent>* events) {
  std::vector<std::string> out;
  if (!w.contains(u.zero())) out.push_back("candidate does not contain the zero class");
  const auto ids = w.ids();
  for (auto id : ids) {
    if (id.value >= u.size()) {
      out.push_back("class " + id_text(id) + " is not in the universe");
      return out;
    }
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i; j < ids.size(); ++j) {
      const auto sum = u.sum_class(ids[i], ids[j]);
      if (!sum) {
        if (events) {
          events->push_back({"sum_closure", id_text(ids[i]) + "+" + id_text(ids[j]) + " leaves the window",
                             add_dims(u.dims(ids[i]), u.dims(ids[j])), true});
        }
        continue;
      }
      if (!w.contains(*sum)) {
        out.push_back("not closed under sums: " + id_text(ids[i]) + " + " + id_text(ids[j]) + " = " + id_text(*sum));
      }
    }
  }
  return out;
}

WideReport is_wide(const Universe& u, const ExactCtx& ctx, const ClassSet& w) {
  WideReport report;
  report.candidate = w;
  report.precondition_violations = candidate_violations(u, w, &report.truncation_events);
  if (!report.precondition_violations.empty()) return report;

  const ConflationTable& conflations = u.conflation_table(ctx);
  for (const auto& t : conflations.triples) {
    const int in = int(w.contains(t.x)) + int(w.contains(t.y)) + int(w.contains(t.z));
    if (in != 2) continue;
    const auto missing = !w.contains(t.x) ? t.x : (!w.contains(t.y) ? t.y : t.z);
    add_witness(report.condition_a,
                {"conflation " + id_text(t.x) + " -> " + id_text(t.y) + " -> " + id_text(t.z) + " has class " +
                     id_text(missing) + " outside the candidate",
                 t.witness, std::nullopt});
  }
  for (const auto& e : conflations.events) report.truncation_events.push_back(e);

  const MorphismTable& morphisms = u.morphism_table(ctx);
  for (auto x : w.ids()) {
    for (auto y : w.ids()) {
      const auto& pair = morphisms.at(x, y);
      if (pair.first_nonadmissible) {
        add_witness(report.condition_b, {"morphism " + id_text(x) + " -> " + id_text(y) + " is not admissible",
                                         std::nullopt, u.hom(x, y).element(*pair.first_nonadmissible)});
      }
      if (pair.images.is_subset_of(w)) continue;
      const HomSpace& hom = u.hom(x, y);
      for (std::uint64_t k = 0; k < pair.count; ++k) {
        Mor phi = hom.element(k);
        const auto img = u.class_of(factor_through_image(phi).image);
        if (!w.contains(img)) {
          add_witness(report.condition_b, {"morphism " + id_text(x) + " -> " + id_text(y) + " has image class " +
                                               id_text(img) + " outside the candidate",
                                           std::nullopt, std::move(phi)});
          break;
        }
      }
    }
  }
  return report;
}

bool satisfies_wide_conditions(const ConflationTable& conflations, const MorphismTable& morphisms, const ClassSet& w) {
  for (const auto& t : conflations.triples) {
    if (int(w.contains(t.x)) + int(w.contains(t.y)) + int(w.contains(t.z)) == 2) return false;
  }
  const auto ids = w.ids();
  for (auto x : ids) {
    for (auto y : ids) {
      const auto& pair = morphisms.at(x, y);
      if (pair.first_nonadmissible || !pair.images.is_subset_of(w)) return false;
    }
  }
  return true;
}

ExactCtx restrict_to(const Universe& u, const ExactCtx& ctx, const ClassSet& w) {
  ClassSet members;
  for (auto id : w.ids()) {
    if (ctx.admits(id)) members.insert(id);
  }
  return ctx.restricted_to(u, std::move(members));
}

ClassSet simples_of(const Universe& u, const ExactCtx& ctx, const ClassSet& w) {
  return simples(u, restrict_to(u, ctx, w));
}

bool is_length(const Universe& u, const ExactCtx& ctx, const ClassSet& w) {
  const ExactCtx inner = restrict_to(u, ctx, w);
  const ClassSet simple = simples(u, inner);
  return w.is_subset_of(filt_closure(u, inner, simple));
}

AbelianReport is_abelian_with_standard(const Universe& u, const ExactCtx& ctx) {
  const MorphismTable& morphisms = u.morphism_table(ctx);
  AbelianReport report;
  for (auto x : u.ids()) {
    for (auto y : u.ids()) {
      if (!ctx.admits(x) || !ctx.admits(y)) continue;
      const auto& pair = morphisms.at(x, y);
      report.checked += pair.count;
      if (pair.first_nonadmissible && report.abelian) {
        report.abelian = false;
        report.witness = u.hom(x, y).element(*pair.first_nonadmissible);
      }
    }
  }
  return report;
}

}  // namespace semibrick
