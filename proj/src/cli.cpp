#include "semibrick/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "semibrick/parallel.hpp"
#include "semibrick/selftest.hpp"

namespace semibrick::cli {

namespace {

const std::vector<std::string> kCommands = {"universe",         "semibricks",       "filt",          "wide-check",
                                            "verify-bijection", "verify-corollary", "split-example", "selftest"};

Quiver::ArrowSpec parse_arrow(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (second == std::string::npos) throw InvalidArgument("arrow must be id:source:target, got " + text);
  return {text.substr(0, first), text.substr(first + 1, second - first - 1), text.substr(second + 1)};
}

std::string search_name(SearchMode m) { return m == SearchMode::Pruned ? "pruned" : "sum-closed"; }

SearchMode parse_search(const std::string& s) {
  if (s == "pruned") return SearchMode::Pruned;
  if (s == "sum-closed") return SearchMode::SumClosedOnly;
  throw InvalidArgument("unknown search mode: " + s);
}

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ClassSet ids_to_set(const Universe& u, const std::vector<std::uint32_t>& ids, const char* what) {
  ClassSet s;
  for (auto id : ids) {
    if (id >= u.size()) throw InvalidArgument(std::string(what) + " refers to class " + std::to_string(id) +
                                              " but the universe has " + std::to_string(u.size()) + " classes");
    s.insert({id});
  }
  return s;
}

}  // namespace

void apply_config_json(RunConfig& cfg, const Json& j) {
  try {
    if (j.contains("preset")) cfg.preset = j.at("preset").get<std::string>();
    if (j.contains("quiver")) {
      const auto& q = j.at("quiver");
      cfg.vertices = q.at("vertices").get<std::vector<std::string>>();
      cfg.arrows.clear();
      for (const auto& a : q.value("arrows", Json::array())) {
        cfg.arrows.push_back({a.at("id").get<std::string>(), a.at("source").get<std::string>(), a.at("target").get<std::string>()});
      }
    }
    if (j.contains("p")) cfg.p = j.at("p").get<std::uint64_t>();
    if (j.contains("bound")) {
      const auto& b = j.at("bound");
      cfg.bound = b.is_array() ? b.get<std::vector<std::size_t>>() : std::vector<std::size_t>{b.get<std::size_t>()};
    }
    if (j.contains("structure")) cfg.structure = parse_structure(j.at("structure").get<std::string>());
    if (j.contains("ceiling")) cfg.ceiling = j.at("ceiling").get<std::uint64_t>();
    if (j.contains("tuple_budget")) cfg.tuple_budget = j.at("tuple_budget").get<std::uint64_t>();
    if (j.contains("node_budget")) cfg.node_budget = j.at("node_budget").get<std::uint64_t>();
    if (j.contains("search")) cfg.search = parse_search(j.at("search").get<std::string>());
    if (j.contains("workers")) cfg.workers = j.at("workers").get<int>();
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("bricks")) cfg.bricks = j.at("bricks").get<std::vector<std::uint32_t>>();
    if (j.contains("classes")) cfg.classes = j.at("classes").get<std::vector<std::uint32_t>>();
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("bad config file: ") + e.what());
  }
}

std::shared_ptr<const Quiver> build_quiver(const RunConfig& cfg) {
  if (!cfg.vertices.empty()) return std::make_shared<const Quiver>(cfg.vertices, cfg.arrows);
  if (cfg.preset == "a1") return Quiver::linear(1);
  if (cfg.preset == "a2") return Quiver::linear(2);
  if (cfg.preset == "a3") return Quiver::linear(3);
  throw InvalidArgument("unknown preset: " + cfg.preset);
}

DimVector resolve_bound(const RunConfig& cfg, const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (cfg.bound.empty()) {
    if (cfg.vertices.empty() && cfg.preset == "a1") return {3};
    if (cfg.vertices.empty() && cfg.preset == "a2") return {2, 2};
    return DimVector(n, 1);
  }
  if (cfg.bound.size() == 1) return DimVector(n, cfg.bound.front());
  if (cfg.bound.size() != n) {
    throw InvalidArgument("bound has " + std::to_string(cfg.bound.size()) + " entries for " + std::to_string(n) + " vertices");
  }
  return cfg.bound;
}

namespace {

Json config_echo(const RunConfig& cfg, const Quiver& q, const DimVector& bound) {
  Json b = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) b[q.vertices()[v]] = bound[v];
  Json echo = {{"quiver", quiver_to_json(q)},
               {"preset", cfg.vertices.empty() ? Json(cfg.preset) : Json(nullptr)},
               {"p", cfg.p},
               {"bound", b},
               {"structure", to_string(cfg.structure)},
               {"ceiling", cfg.ceiling},
               {"tuple_budget", cfg.tuple_budget},
               {"node_budget", cfg.node_budget},
               {"search", search_name(cfg.search)}};
  if (cfg.command == "filt") echo["bricks"] = cfg.bricks;
  if (cfg.command == "wide-check") echo["classes"] = cfg.classes;
  return echo;
}

Json envelope(const std::string& command, Json config, bool pass) {
  return {{"schema", kReportSchema},
          {"tool", {{"name", "semibrick-lab"}, {"version", kToolVersion}}},
          {"command", command},
          {"config", std::move(config)},
          {"verdict", pass ? "PASS" : "FAIL"}};
}

}  // namespace

Json run_command(const RunConfig& cfg, int& exit_code, std::ostream& log) {
  if (cfg.command == "selftest") {
    Stopwatch clock;
    const auto checks = run_selftest(log);
    bool all = true;
    Json items = Json::array();
    for (const auto& c : checks) {
      all = all && c.pass;
      items.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    log << "[semibrick-lab] selftest finished in " << clock.seconds() << " s\n";
    Json report = envelope(cfg.command, Json{{"presets", {"a1/3", "a2/2,2", "a3/1,1,1"}}, {"p", 2}}, all);
    report["result"] = {{"checks", items}};
    report["truncation"] = truncation_to_json({});
    exit_code = all ? kPass : kFail;
    return report;
  }

  const auto quiver = build_quiver(cfg);
  const Prime p(cfg.p);
  const DimVector bound = resolve_bound(cfg, *quiver);
  const ExactCtx ctx(cfg.structure);

  Stopwatch clock;
  const auto u = enumerate_universe({quiver, p, bound, cfg.ceiling, cfg.tuple_budget});
  log << "[semibrick-lab] universe: " << u->size() << " classes (" << clock.seconds() << " s)\n";

  Json result;
  bool pass = true;
  std::vector<TruncationEvent> events;

  if (cfg.command == "universe") {
    result = universe_to_json(*u);
  } else if (cfg.command == "semibricks") {
    const auto bricks = bricks_of(*u);
    const auto sbs = enumerate_semibricks(*u);
    Json list = Json::array();
    for (const auto& s : sbs) list.push_back(class_set_to_json(s));
    Json bl = Json::array();
    for (auto b : bricks) bl.push_back(b.value);
    result = {{"bricks", bl}, {"count", sbs.size()}, {"semibricks", list}};
  } else if (cfg.command == "filt") {
    const ClassSet gens = ids_to_set(*u, cfg.bricks, "--bricks");
    const auto closure = filt_closure_with_certificates(*u, ctx, gens);
    Json certs = Json::array();
    for (auto id : closure.members.ids()) {
      const auto& cert = *closure.certificates[id.value];
      if (auto bad = validate_certificate(*u, ctx, gens, cert)) {
        pass = false;
        log << "[semibrick-lab] certificate for class " << id.value << " failed: " << *bad << "\n";
      }
      certs.push_back(certificate_to_json(cert));
    }
    const auto ext = smallest_ext_closed(*u, ctx, gens);
    const bool agrees = ext.members == closure.members;
    if (!ext.ambiguous() && !agrees) pass = false;
    events = ext.events;
    result = {{"generators", class_set_to_json(gens)},
              {"is_semibrick", is_semibrick(*u, gens)},
              {"closure", class_set_to_json(closure.members)},
              {"certificates", certs},
              {"smallest_ext_closed", class_set_to_json(ext.members)},
              {"agrees_with_ext_closure", agrees},
              {"truncation_ambiguous", ext.ambiguous()}};
  } else if (cfg.command == "wide-check") {
    const ClassSet w = ids_to_set(*u, cfg.classes, "--classes");
    const auto report = is_wide(*u, ctx, w);
    result = wide_report_to_json(*u, report);
    if (report.pass()) {
      result["simples"] = class_set_to_json(simples_of(*u, ctx, w));
      result["is_length"] = is_length(*u, ctx, w);
    }
    events = report.truncation_events;
    pass = report.pass();
  } else if (cfg.command == "verify-bijection") {
    const auto report = verify_bijection(*u, ctx, cfg.search, cfg.node_budget);
    result = bijection_report_to_json(report);
    events = report.truncation_events;
    pass = report.pass();
    log << "[semibrick-lab] " << report.semibricks.size() << " semibricks <-> " << report.wide_subcats.size()
        << " length wide subcategories\n";
  } else if (cfg.command == "verify-corollary") {
    const auto report = verify_corollary(*u, ctx);
    result = corollary_report_to_json(*u, report);
    pass = report.pass();
  } else if (cfg.command == "split-example") {
    const auto report = run_split_example(*u);
    result = example_report_to_json(report);
    pass = report.pass();
  } else {
    throw InvalidArgument("unknown command: " + cfg.command);
  }
  log << "[semibrick-lab] " << cfg.command << " done in " << clock.seconds() << " s\n";

  Json report = envelope(cfg.command, config_echo(cfg, *quiver, bound), pass);
  report["universe"] = {{"size", u->size()}};
  report["truncation"] = truncation_to_json(events);
  report["result"] = std::move(result);
  exit_code = pass ? kPass : kFail;
  return report;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semibricks, Filt-closures and wide subcategories of quiver representations over F_p"};
  app.require_subcommand(1);

  std::string preset, vertices, arrows, bound, structure, search, out_path, config_path, bricks, classes;
  std::uint64_t p = 2, ceiling = 0, tuple_budget = 0, node_budget = 0;
  int workers = 0;

  std::vector<CLI::Option*> opts;
  opts.push_back(app.add_option("--preset", preset, "a1 | a2 | a3 (linear orientation)"));
  opts.push_back(app.add_option("--vertices", vertices, "explicit quiver vertices, e.g. 1,2,3"));
  opts.push_back(app.add_option("--arrows", arrows, "explicit arrows id:source:target, comma separated"));
  opts.push_back(app.add_option("--p", p, "prime field characteristic"));
  opts.push_back(app.add_option("--bound", bound, "dimension bound per vertex, e.g. 2,2 (one value broadcasts)"));
  opts.push_back(app.add_option("--structure", structure, "standard | split"));
  opts.push_back(app.add_option("--ceiling", ceiling, "enumeration ceiling for Hom spaces"));
  opts.push_back(app.add_option("--budget,--tuple-budget", tuple_budget, "max matrix tuples visited while building the universe"));
  opts.push_back(app.add_option("--node-budget", node_budget, "max subcategory search nodes"));
  opts.push_back(app.add_option("--search", search, "pruned | sum-closed"));
  opts.push_back(app.add_option("--workers", workers, "worker threads (0 = all available)"));
  opts.push_back(app.add_option("--out", out_path, "report path, - for standard output"));
  opts.push_back(app.add_option("--bricks", bricks, "filt: generating class ids, comma separated"));
  opts.push_back(app.add_option("--classes", classes, "wide-check: candidate class ids, comma separated"));
  app.add_option("--config", config_path, "JSON config file; flags win on conflict");

  for (const auto& name : kCommands) app.add_subcommand(name)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsage;
  }

  auto split_list = [](const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) parts.push_back(item);
    }
    return parts;
  };
  auto to_uints = [&](const std::string& s, const char* what) {
    std::vector<std::uint64_t> values;
    for (const auto& part : split_list(s)) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(part, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != part.size() || part.front() == '-') throw InvalidArgument(std::string(what) + ": not a non-negative integer: " + part);
      values.push_back(v);
    }
    return values;
  };
  auto given = [&](std::size_t i) { return opts[i]->count() > 0; };

  RunConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw InvalidArgument("cannot read config file " + config_path);
      Json j;
      try {
        in >> j;
      } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("config file is not JSON: ") + e.what());
      }
      apply_config_json(cfg, j);
    }
    if (const char* env = std::getenv("SEMIBRICK_LAB_CEILING"); env && !given(6)) {
      cfg.ceiling = to_uints(env, "SEMIBRICK_LAB_CEILING").at(0);
    }
    if (given(0)) {
      cfg.preset = preset;
      cfg.vertices.clear();
      cfg.arrows.clear();
    }
    if (given(1)) cfg.vertices = split_list(vertices);
    if (given(2)) {
      cfg.arrows.clear();
      for (const auto& a : split_list(arrows)) cfg.arrows.push_back(parse_arrow(a));
    }
    if (given(3)) cfg.p = p;
    if (given(4)) {
      cfg.bound.clear();
      for (auto v : to_uints(bound, "--bound")) cfg.bound.push_back(static_cast<std::size_t>(v));
    }
    if (given(5)) cfg.structure = parse_structure(structure);
    if (given(6)) cfg.ceiling = ceiling;
    if (given(7)) cfg.tuple_budget = tuple_budget;
    if (given(8)) cfg.node_budget = node_budget;
    if (given(9)) cfg.search = parse_search(search);
    if (given(10)) cfg.workers = workers;
    if (given(11)) cfg.out = out_path;
    if (given(12)) {
      cfg.bricks.clear();
      for (auto v : to_uints(bricks, "--bricks")) cfg.bricks.push_back(static_cast<std::uint32_t>(v));
    }
    if (given(13)) {
      cfg.classes.clear();
      for (auto v : to_uints(classes, "--classes")) cfg.classes.push_back(static_cast<std::uint32_t>(v));
    }
    if (cfg.ceiling == 0) throw InvalidArgument("ceiling must be positive");
    if (cfg.workers < 0) throw InvalidArgument("workers must be non-negative");
    if (!is_prime(cfg.p)) throw InvalidArgument("not a prime: " + std::to_string(cfg.p));
    if (cfg.command == "filt" && cfg.bricks.empty() && !given(12)) throw InvalidArgument("filt needs --bricks");
    if (cfg.command == "wide-check" && cfg.classes.empty()) throw InvalidArgument("wide-check needs --classes");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  par::set_workers(cfg.workers);
  int code = kPass;
  Json report;
  try {
    report = run_command(cfg, code, err);
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return kBudget;
  } catch (const OutOfBounds& e) {
    err << "out of bounds: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string text = report.dump(2) + "\n";
  if (cfg.out == "-") {
    out << text;
  } else {
    std::ofstream file(cfg.out);
    if (!file) {
      err << "error: cannot write " << cfg.out << "\n";
      return kUsage;
    }
    file << text;
  }
  err << "[semibrick-lab] verdict " << report["verdict"].get<std::string>() << "\n";
  return code;
}

}  // namespace semibrick::cli
