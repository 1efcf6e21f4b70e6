#include "semibrick/bricks.hpp"

#include <algorithm>
#include <functional>

#include "semibrick/parallel.hpp"

namespace semibrick {

bool is_brick(const std::shared_ptr<const Rep>& x, std::uint64_t ceiling) {
  if (x->is_zero()) return false;
  const HomSpace end = hom_space(x, x);
  const auto n = end.checked_count(ceiling);
  for (std::uint64_t i = 1; i < n; ++i) {
    // Index 0 is the zero map; every other index is a nonzero combination.
    if (!end.element(i).is_iso()) return false;
  }
  return true;
}

bool is_semibrick(const Universe& u, const ClassSet& s) {
  const auto members = s.ids();
  for (auto a : members) {
    if (!is_brick(u.rep_ptr(a), u.ceiling())) return false;
    for (auto b : members) {
      if (a != b && u.hom(a, b).dim() != 0) return false;
    }
  }
  return true;
}

std::vector<IsoClassId> bricks_of(const Universe& u) {
  const auto ids = u.ids();
  auto flags = par::map<char>(ids.size(), [&](std::size_t i) { return is_brick(u.rep_ptr(ids[i]), u.ceiling()) ? 1 : 0; });
  std::vector<IsoClassId> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (flags[i]) out.push_back(ids[i]);
  }
  return out;
}

std::vector<ClassSet> enumerate_semibricks(const Universe& u) {
  const auto bricks = bricks_of(u);
  const std::size_t n = bricks.size();
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      compatible[i][j] = i != j && u.hom(bricks[i], bricks[j]).dim() == 0 && u.hom(bricks[j], bricks[i]).dim() == 0;
    }
  }

  std::vector<ClassSet> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t next) {
    ClassSet s;
    for (auto c : chosen) s.insert(bricks[c]);
    out.push_back(std::move(s));
    for (std::size_t k = next; k < n; ++k) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return compatible[c][k]; })) {
        chosen.push_back(k);
        extend(k + 1);
        chosen.pop_back();
      }
    }
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_simple(const Universe& u, const ExactCtx& ctx, IsoClassId x) {
  if (u.rep(x).is_zero() || !ctx.admits(x)) return false;
  for (auto l : u.ids()) {
    if (u.rep(l).is_zero() || !dims_leq(u.dims(l), u.dims(x))) continue;
    for (auto n : u.ids()) {
      if (u.rep(n).is_zero() || add_dims(u.dims(l), u.dims(n)) != u.dims(x)) continue;
      if (find_conflation(u, ctx, l, x, n)) return false;
    }
  }
  return true;
}

ClassSet simples(const Universe& u, const ExactCtx& ctx) {
  const auto ids = u.ids();
  auto flags = par::map<char>(ids.size(), [&](std::size_t i) { return is_simple(u, ctx, ids[i]) ? 1 : 0; });
  ClassSet out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (flags[i]) out.insert(ids[i]);
  }
  return out;
}

}  // namespace semibrick
