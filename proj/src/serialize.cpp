#include "semibrick/serialize.hpp"

#include <algorithm>

namespace semibrick {

Json matrix_to_json(const FpMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

FpMatrix matrix_from_json(const Json& j, Prime p, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw InvalidArgument("matrix must have " + std::to_string(rows) + " rows");
  FpMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InvalidArgument("matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, j[r][c].get<std::int64_t>());
  }
  return m;
}

Json quiver_to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back({{"id", a.name}, {"source", q.vertices()[a.source]}, {"target", q.vertices()[a.target]}});
  }
  return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

Json rep_to_json(const Rep& x) {
  Json dims = Json::object();
  Json mats = Json::object();
  const Quiver& q = x.quiver();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[q.vertices()[v]] = x.dim(v);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) mats[q.arrows()[a].name] = matrix_to_json(x.mat(a));
  return {{"dims", dims}, {"mats", mats}};
}

Rep rep_from_json(const Json& j, std::shared_ptr<const Quiver> q, Prime p) {
  try {
    DimVector dims(q->vertex_count(), 0);
    for (const auto& [name, value] : j.at("dims").items()) {
      auto v = q->vertex_index(name);
      if (!v) throw InvalidArgument("unknown vertex " + name);
      dims[*v] = value.get<std::size_t>();
    }
    std::vector<FpMatrix> mats;
    const Json& jm = j.contains("mats") ? j.at("mats") : Json::object();
    for (const auto& [name, value] : jm.items()) {
      if (!q->arrow_index(name)) throw InvalidArgument("unknown arrow " + name);
    }
    for (const auto& a : q->arrows()) {
      if (jm.contains(a.name)) {
        mats.push_back(matrix_from_json(jm.at(a.name), p, dims[a.target], dims[a.source]));
      } else if (dims[a.target] == 0 || dims[a.source] == 0) {
        mats.emplace_back(p, dims[a.target], dims[a.source]);
      } else {
        throw InvalidArgument("missing matrix for arrow " + a.name);
      }
    }
    return Rep(std::move(q), p, std::move(dims), std::move(mats));
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed representation: ") + e.what());
  }
}

Json mor_to_json(const Mor& f) {
  Json out = Json::object();
  const Quiver& q = f.src().quiver();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out[q.vertices()[v]] = matrix_to_json(f.comp(v));
  return out;
}

Json class_set_to_json(const ClassSet& s) {
  Json out = Json::array();
  for (auto id : s.ids()) out.push_back(id.value);
  return out;
}

ClassSet class_set_from_json(const Json& j) {
  ClassSet s;
  for (const auto& v : j) s.insert({v.get<std::uint32_t>()});
  return s;
}

Json universe_to_json(const Universe& u) {
  Json classes = Json::array();
  for (auto id : u.ids()) {
    Json c = rep_to_json(u.rep(id));
    c["id"] = id.value;
    c["dim_end"] = u.hom(id, id).dim();
    classes.push_back(std::move(c));
  }
  Json bound = Json::object();
  for (std::size_t v = 0; v < u.quiver().vertex_count(); ++v) bound[u.quiver().vertices()[v]] = u.bound()[v];
  return {{"quiver", quiver_to_json(u.quiver())},
          {"p", u.prime().value()},
          {"bound", bound},
          {"size", u.size()},
          {"classes", classes}};
}

Json certificate_to_json(const FiltrationCertificate& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.steps) steps.push_back({{"factor", s.factor.value}, {"inflation", mor_to_json(s.inflation)}});
  return {{"object", cert.object.value}, {"length", cert.length()}, {"steps", steps}};
}

Json truncation_to_json(const std::vector<TruncationEvent>& events) {
  Json unresolved = Json::array();
  for (const auto& e : events) {
    if (!e.resolved) unresolved.push_back({{"op", e.op}, {"detail", e.detail}, {"dims", e.dims}});
  }
  return {{"events", events.size()}, {"unresolved", unresolved}};
}

Json conflation_to_json(const Universe& u, const Conflation& c) {
  return {{"x", u.class_of(c.f.src_ptr()).value},
          {"y", u.class_of(c.f.dst_ptr()).value},
          {"z", u.class_of(c.g.dst_ptr()).value},
          {"f", mor_to_json(c.f)},
          {"g", mor_to_json(c.g)}};
}

namespace {

Json condition_to_json(const Universe& u, const ConditionResult& c) {
  Json witnesses = Json::array();
  for (const auto& w : c.witnesses) {
    Json item = {{"detail", w.detail}};
    if (w.conflation) item["conflation"] = conflation_to_json(u, *w.conflation);
    if (w.morphism) {
      item["morphism"] = mor_to_json(*w.morphism);
      item["source"] = u.class_of(w.morphism->src_ptr()).value;
      item["target"] = u.class_of(w.morphism->dst_ptr()).value;
    }
    witnesses.push_back(std::move(item));
  }
  return {{"pass", c.pass}, {"witnesses", witnesses}};
}

Json entries_to_json(const std::vector<BijectionEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    out.push_back({{"semibrick", class_set_to_json(e.semibrick)}, {"subcategory", class_set_to_json(e.subcategory)}});
  }
  return out;
}

Json morphism_witness(const Universe& u, const std::optional<Mor>& m) {
  if (!m) return nullptr;
  return {{"source", u.class_of(m->src_ptr()).value}, {"target", u.class_of(m->dst_ptr()).value}, {"morphism", mor_to_json(*m)}};
}

}  // namespace

Json wide_report_to_json(const Universe& u, const WideReport& r) {
  return {{"candidate", class_set_to_json(r.candidate)},
          {"pass", r.pass()},
          {"precondition_violations", r.precondition_violations},
          {"condition_a", condition_to_json(u, r.condition_a)},
          {"condition_b", condition_to_json(u, r.condition_b)},
          {"truncation", truncation_to_json(r.truncation_events)}};
}

Json bijection_report_to_json(const BijectionReport& r) {
  Json semibricks = Json::array();
  for (const auto& s : r.semibricks) semibricks.push_back(class_set_to_json(s));
  Json wide = Json::array();
  for (const auto& w : r.wide_subcats) wide.push_back(class_set_to_json(w));
  return {{"ctx", r.ctx},
          {"semibrick_count", r.semibricks.size()},
          {"wide_count", r.wide_subcats.size()},
          {"semibricks", semibricks},
          {"wide_subcategories", wide},
          {"forward", entries_to_json(r.forward)},
          {"backward", entries_to_json(r.backward)},
          {"roundtrip_failures", r.roundtrip_failures},
          {"search_nodes", r.search_nodes},
          {"truncation", truncation_to_json(r.truncation_events)},
          {"pass", r.pass()}};
}

Json corollary_report_to_json(const Universe& u, const CorollaryReport& r) {
  return {{"ctx", r.ctx},
          {"simples", class_set_to_json(r.simples)},
          {"abelian_with_standard", r.lhs},
          {"simples_form_semibrick", r.rhs},
          {"non_admissible_witness", morphism_witness(u, r.lhs_witness)},
          {"nonzero_non_iso_between_simples", morphism_witness(u, r.rhs_witness)},
          {"morphisms_checked", r.morphisms_checked},
          {"pass", r.pass()}};
}

Json example_report_to_json(const ExampleReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"simples", class_set_to_json(r.simples)},
          {"semisimple", class_set_to_json(r.semisimple)},
          {"standard_closure", class_set_to_json(r.standard_closure)},
          {"split_closure", class_set_to_json(r.split_closure)},
          {"semisimple_algebra", r.semisimple_algebra},
          {"extension_witness", r.extension_witness ? Json(r.extension_witness->value) : Json(nullptr)},
          {"checks", checks},
          {"pass", r.pass()}};
}

Json frombrick_report_to_json(const PropertyReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(
        {{"brick", v.brick.value}, {"target", v.target.value}, {"reason", v.reason}, {"morphism", mor_to_json(v.phi)}});
  }
  return {{"checked", r.checked}, {"violations", violations}, {"pass", r.pass()}};
}

}  // namespace semibrick
