#pragma once

#include <memory>
#include <vector>

#include "semibrick/serialize.hpp"

namespace fixtures {

using namespace semibrick;

inline const Prime F2{2};

// A2 = 1 -> 2 over F_2.
struct A2 {
  std::shared_ptr<const Quiver> q = Quiver::linear(2);
  std::shared_ptr<const Rep> s1 = share(Rep::simple(q, F2, 0));
  std::shared_ptr<const Rep> s2 = share(Rep::simple(q, F2, 1));
  std::shared_ptr<const Rep> p1 = share(Rep(q, F2, {1, 1}, {FpMatrix::from_rows(F2, {{1}})}));
  std::shared_ptr<const Rep> zero = share(Rep::zero(q, F2));

  // The map S2 -> P1 that is the identity at vertex 2.
  Mor s2_to_p1() const { return Mor(s2, p1, {FpMatrix(F2, 1, 0), FpMatrix::from_rows(F2, {{1}})}); }
  // The map P1 -> S1 that is the identity at vertex 1.
  Mor p1_to_s1() const { return Mor(p1, s1, {FpMatrix::from_rows(F2, {{1}}), FpMatrix(F2, 0, 1)}); }
};

inline std::shared_ptr<const Universe> a2_universe() {
  static const auto u = enumerate_universe({Quiver::linear(2), F2, {2, 2}});
  return u;
}

inline std::shared_ptr<const Universe> a1_universe() {
  static const auto u = enumerate_universe({Quiver::linear(1), F2, {3}});
  return u;
}

inline std::shared_ptr<const Universe> a3_universe() {
  static const auto u = enumerate_universe({Quiver::linear(3), F2, {1, 1, 1}});
  return u;
}

// Class ids of the named A2 objects inside a2_universe().
struct A2Ids {
  IsoClassId s1, s2, p1;
};

inline A2Ids a2_ids() {
  const auto u = a2_universe();
  const A2 a;
  return {u->class_of(a.s1), u->class_of(a.s2), u->class_of(a.p1)};
}

inline ClassSet set_of(std::initializer_list<IsoClassId> ids) {
  ClassSet s;
  for (auto id : ids) s.insert(id);
  return s;
}

// Class of the direct sum of listed classes.
inline IsoClassId sum_of(const Universe& u, std::initializer_list<IsoClassId> ids) {
  IsoClassId acc = u.zero();
  for (auto id : ids) acc = *u.sum_class(acc, id);
  return acc;
}

}  // namespace fixtures
