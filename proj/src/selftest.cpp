#include "semibrick/selftest.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "semibrick/parallel.hpp"
#include "semibrick/serialize.hpp"

namespace semibrick {

namespace {

struct Preset {
  std::string name;
  std::shared_ptr<const Universe> u;
};

FpMatrix random_matrix(std::mt19937_64& rng, Prime p, std::size_t r, std::size_t c) {
  FpMatrix m(p, r, c);
  std::uniform_int_distribution<std::uint64_t> dist(0, p.value() - 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<std::int64_t>(dist(rng)));
  }
  return m;
}

// Throws on the first failure; the message becomes the check detail.
void expect(bool cond, const std::string& what) {
  if (!cond) throw std::logic_error(what);
}

std::string ffmat_identities() {
  std::mt19937_64 rng(0x5e1f7e57);
  std::size_t trials = 0;
  for (std::uint64_t pv : {2u, 3u, 5u}) {
    const Prime p(pv);
    for (int t = 0; t < 200; ++t, ++trials) {
      const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4, k = 1 + rng() % 4;
      const auto a = random_matrix(rng, p, n, m);
      const auto b = random_matrix(rng, p, m, k);
      const auto c = random_matrix(rng, p, k, 3);
      expect((a * b) * c == a * (b * c), "matrix product not associative");
      expect((a * b).transpose() == b.transpose() * a.transpose(), "transpose of product");
      expect(rank(a) == rank(a.transpose()), "row rank differs from column rank");
      const auto ker = kernel_basis(a);
      expect(ker.size() + rank(a) == a.cols(), "rank-nullity");
      for (const auto& v : ker) expect((a * v).is_zero(), "kernel vector not annihilated");
      const auto sq = random_matrix(rng, p, n, n);
      if (auto inv = try_inverse(sq)) {
        expect((sq * *inv).is_identity() && (*inv * sq).is_identity(), "inverse");
      } else {
        expect(rank(sq) < n, "singular verdict on a full-rank matrix");
      }
      const auto x = random_matrix(rng, p, m, 1);
      const auto sol = solve_affine(a, a * x);
      expect(sol.has_value(), "consistent system reported unsolvable");
      expect(a * sol->particular() == a * x, "particular solution");
    }
  }
  return std::to_string(trials) + " random trials over F_2, F_3, F_5";
}

std::string mor_validity(const Universe& u) {
  std::size_t checked = 0;
  for (auto x : u.ids()) {
    for (auto y : u.ids()) {
      const auto& h = u.hom(x, y);
      for (const auto& f : h.basis()) {
        expect(f.is_valid(), "hom basis element invalid");
        const auto k = kernel_of(f);
        const auto c = cokernel_of(f);
        const auto im = image_factorization(f);
        expect(k.inclusion.is_valid() && k.inclusion.is_injective(), "kernel inclusion");
        expect(c.projection.is_valid() && c.projection.is_surjective(), "cokernel projection");
        expect(compose(f, k.inclusion).is_zero() && compose(c.projection, f).is_zero(), "kernel/cokernel composites");
        expect(im.deflation.is_valid() && im.inflation.is_valid(), "image factorization maps");
        expect(compose(im.inflation, im.deflation).comps() == f.comps(), "image factorization composite");
        expect(mor_add(f, mor_scale(f, u.prime().neg(1))).is_zero(), "f - f");
        ++checked;
      }
      if (h.dim() > 0) {
        for (auto z : u.ids()) {
          const auto& g = u.hom(y, z);
          if (g.dim() > 0) expect(compose(g.basis().front(), h.basis().front()).is_valid(), "composite invalid");
        }
      }
    }
  }
  return std::to_string(checked) + " basis morphisms";
}

std::string iso_laws(const Universe& u) {
  std::mt19937_64 rng(0x150150);
  std::size_t checked = 0;
  for (auto x : u.ids()) {
    const auto& rx = u.rep_ptr(x);
    expect(is_isomorphic(rx, rx).has_value(), "not reflexive");
    // Conjugate by random invertible vertex matrices: same class, explicit iso.
    for (int t = 0; t < 3; ++t, ++checked) {
      std::vector<FpMatrix> g, ginv;
      for (std::size_t v = 0; v < rx->dims().size(); ++v) {
        const std::size_t d = rx->dim(v);
        for (;;) {
          auto m = random_matrix(rng, u.prime(), d, d);
          if (auto inv = try_inverse(m)) {
            g.push_back(m);
            ginv.push_back(*inv);
            break;
          }
        }
      }
      std::vector<FpMatrix> mats;
      for (std::size_t a = 0; a < u.quiver().arrow_count(); ++a) {
        const auto& arrow = u.quiver().arrows()[a];
        mats.push_back(g[arrow.target] * rx->mat(a) * ginv[arrow.source]);
      }
      const auto conj = share(Rep(u.quiver_ptr(), u.prime(), rx->dims(), mats));
      expect(u.class_of(conj) == x, "conjugate lands in another class");
      const auto fwd = is_isomorphic(rx, conj);
      const auto back = is_isomorphic(conj, rx);
      expect(fwd && back, "not symmetric");
      expect(fwd->is_valid() && fwd->is_iso(), "witness is not an isomorphism");
    }
    for (auto y : u.ids()) {
      if (x != y) expect(!is_isomorphic(rx, u.rep_ptr(y)).has_value(), "distinct classes isomorphic");
    }
  }
  return std::to_string(checked) + " conjugates, " + std::to_string(u.size()) + " classes pairwise distinct";
}

std::string schur(const Universe& u) {
  std::ostringstream out;
  for (auto ctx : {ExactCtx::standard(), ExactCtx::split()}) {
    const auto report = verify_corollary(u, ctx);
    expect(report.pass(), "corollary fails under " + ctx.key());
    out << ctx.key() << ":" << report.lhs << "/" << report.rhs << " ";
  }
  return out.str();
}

std::string standard_admissibility(const Universe& u) {
  const auto& table = u.morphism_table(ExactCtx::standard());
  std::uint64_t morphisms = 0;
  for (const auto& pair : table.pairs) {
    expect(!pair.first_nonadmissible.has_value(), "standard structure has a non-admissible morphism");
    morphisms += pair.count;
  }
  return std::to_string(morphisms) + " morphisms admissible";
}

std::string certificates(const Universe& u) {
  std::size_t checked = 0;
  for (auto ctx : {ExactCtx::standard(), ExactCtx::split()}) {
    for (const auto& s : enumerate_semibricks(u)) {
      const auto closure = filt_closure_with_certificates(u, ctx, s);
      for (auto id : closure.members.ids()) {
        const auto& cert = closure.certificates.at(id.value);
        expect(cert.has_value(), "member without certificate");
        const auto bad = validate_certificate(u, ctx, s, *cert);
        expect(!bad, "certificate rejected: " + bad.value_or(""));
        for (std::size_t i = 0; i <= cert->length(); ++i) certificate_slices(u, ctx, s, *cert, i);
        ++checked;
      }
      expect(check_frombrick(u, ctx, s).pass(), "FromBrick property fails");
    }
  }
  return std::to_string(checked) + " certificates revalidated and sliced";
}

std::string bijection(const Universe& u) {
  std::ostringstream out;
  for (auto ctx : {ExactCtx::standard(), ExactCtx::split()}) {
    const auto pruned = verify_bijection(u, ctx, SearchMode::Pruned);
    const auto plain = verify_bijection(u, ctx, SearchMode::SumClosedOnly);
    expect(pruned.pass() && plain.pass(), "bijection fails under " + ctx.key());
    expect(pruned.wide_subcats == plain.wide_subcats, "search modes disagree under " + ctx.key());
    out << ctx.key() << ":" << pruned.semibricks.size() << " ";
  }
  return out.str();
}

std::string report_bytes(const Universe& u) {
  Json j = Json::object();
  for (auto ctx : {ExactCtx::standard(), ExactCtx::split()}) {
    j[ctx.key()] = {{"bijection", bijection_report_to_json(verify_bijection(u, ctx))},
                    {"corollary", corollary_report_to_json(u, verify_corollary(u, ctx))}};
  }
  j["universe"] = universe_to_json(u);
  return j.dump();
}

std::string determinism(const Preset& preset) {
  const auto& cfg = preset.u->config();
  auto fresh = [&] { return enumerate_universe(cfg); };
  std::string serial, parallel, again;
  {
    par::ScopedBackend scope(par::Backend::Serial);
    serial = report_bytes(*fresh());
  }
  {
    par::ScopedBackend scope(par::Backend::OpenMP);
    const int saved = par::workers();
    par::set_workers(4);  // force real threads even on a single core
    parallel = report_bytes(*fresh());
    again = report_bytes(*fresh());
    par::set_workers(saved);
  }
  expect(serial == parallel, "serial and OpenMP reports differ");
  expect(parallel == again, "repeated runs differ");
  return std::to_string(serial.size()) + " report bytes identical";
}

}  // namespace

std::vector<SelftestCheck> run_selftest(std::ostream& log) {
  const Prime f2(2);
  std::vector<Preset> presets;
  presets.push_back({"a1", enumerate_universe({Quiver::linear(1), f2, {3}})});
  presets.push_back({"a2", enumerate_universe({Quiver::linear(2), f2, {2, 2}})});
  presets.push_back({"a3", enumerate_universe({Quiver::linear(3), f2, {1, 1, 1}})});

  std::vector<SelftestCheck> checks;
  auto run = [&](const std::string& name, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    SelftestCheck c{name, false, ""};
    try {
      c.detail = body();
      c.pass = true;
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log << "[selftest] " << (c.pass ? "ok   " : "FAIL ") << name << " (" << secs << " s)\n";
    checks.push_back(std::move(c));
  };

  run("ffmat/identities", ffmat_identities);
  for (const auto& preset : presets) {
    const Universe& u = *preset.u;
    run(preset.name + "/mor-validity", [&] { return mor_validity(u); });
    run(preset.name + "/iso-laws", [&] { return iso_laws(u); });
    run(preset.name + "/schur", [&] { return schur(u); });
    run(preset.name + "/standard-admissible", [&] { return standard_admissibility(u); });
    run(preset.name + "/certificates", [&] { return certificates(u); });
    run(preset.name + "/bijection", [&] { return bijection(u); });
    run(preset.name + "/determinism", [&] { return determinism(preset); });
  }
  return checks;
}

}  // namespace semibrick
