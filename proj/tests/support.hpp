#pragma once

// Shared helpers for the unit tests: seeded random rationals, independently
// implemented brute-force oracles, and instance builders. Everything here is
// written against the documented definitions only, so it can disagree with
// the library if the library is wrong.

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "qdl/qcat.hpp"
#include "qdl/quantale.hpp"
#include "qdl/rational.hpp"
#include "qdl/tnorm.hpp"

namespace qdl::test {

/// Deterministic random rational in [0,1] with denominator <= max_den.
inline Rat random_unit_rat(std::mt19937& rng, int max_den = 64) {
  std::uniform_int_distribution<int> den_dist(1, max_den);
  const int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(0, den);
  return Rat(num_dist(rng), den);
}

/// The 33x33 verification grid {i/32 : 0 <= i <= 32}.
inline std::vector<Rat> grid33() {
  std::vector<Rat> g;
  for (int i = 0; i <= 32; ++i) g.emplace_back(i, 32);
  return g;
}

/** Left-limit oracle for a function of one rational variable that is affine
 * on some interval (c - delta, c). Extrapolates linearly from two epsilon
 * pairs and insists both extrapolations agree, which certifies the affine
 * assumption at this resolution. Valid for the residuum in its second
 * argument (piecewise affine there for both component kinds).
 */
inline Rat affine_left_limit(const std::function<Rat(const Rat&)>& f, const Rat& c) {
  const Rat e(1, static_cast<long long>(1) << 40);
  const Rat v1 = f(c - e);
  const Rat v2 = f(c - e / 2);
  const Rat v3 = f(c - e / 4);
  const Rat first = 2 * v2 - v1;
  const Rat second = 2 * v3 - v2;
  if (first != second) throw std::runtime_error("affine_left_limit: not affine near the point");
  return first;
}

/// Brute-force quantale residuum straight from the definition:
/// p -> r = join of { z : p & z <= r }.
inline int residuum_oracle(const FiniteQuantale& q, int p, int r) {
  std::vector<int> zs;
  for (int z = 0; z < q.size(); ++z)
    if (q.le(q.tensor(p, z), r)) zs.push_back(z);
  return q.join_of(zs);
}

/// Hom of weights straight from the definition: meet_x phi(x) -> rho(x).
inline int hom_weights_oracle(const QCategory& a, const std::vector<int>& phi,
                              const std::vector<int>& rho) {
  int acc = a.q->top();
  for (int x = 0; x < a.size(); ++x) acc = a.q->meet(acc, a.q->residuum(phi[x], rho[x]));
  return acc;
}

/// Distributor composition straight from the definition:
/// (psi . phi)(x, z) = join_y psi(y, z) & phi(x, y).
inline std::vector<std::vector<int>> compose_oracle(const QCategory& a, const QCategory& b,
                                                    const QCategory& c,
                                                    const std::vector<std::vector<int>>& phi,
                                                    const std::vector<std::vector<int>>& psi) {
  std::vector<std::vector<int>> out(a.size(), std::vector<int>(c.size(), 0));
  for (int x = 0; x < a.size(); ++x)
    for (int z = 0; z < c.size(); ++z) {
      std::vector<int> terms;
      for (int y = 0; y < b.size(); ++y) terms.push_back(a.q->tensor(psi[y][z], phi[x][y]));
      out[x][z] = a.q->join_of(terms);
    }
  return out;
}

/// Boolean-enriched category of a finite order given as a <= relation.
inline QCategory poset_category(const std::vector<std::string>& objects,
                                const std::vector<std::vector<bool>>& le) {
  QCategory a;
  a.q = FiniteQuantale::standard_boolean();
  a.objects = objects;
  const int truth = a.q->top();
  const int falsity = a.q->bottom();
  a.hom.assign(objects.size(), std::vector<int>(objects.size(), falsity));
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j)
      if (le[i][j]) a.hom[i][j] = truth;
  return a;
}

/// Self-enriched category (Q, hom = residuum).
inline QCategory self_enriched(QuantalePtr q) {
  QCategory a;
  a.objects = q->labels();
  a.hom.assign(q->size(), std::vector<int>(q->size(), 0));
  for (int x = 0; x < q->size(); ++x)
    for (int y = 0; y < q->size(); ++y) a.hom[x][y] = q->residuum(x, y);
  a.q = std::move(q);
  return a;
}

/** Full subcategory of the self-enriched category on a subset closed under
 * bottom, top, binary meet/join, p & - and p -> - for every p in Q. Such a
 * subset supports all tensors, cotensors and conical (co)limits inside
 * itself, so the result is a separated, complete and cocomplete instance.
 */
inline QCategory closed_subcategory(const QuantalePtr& q, std::set<int> seed) {
  seed.insert(q->bottom());
  seed.insert(q->top());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<int> current(seed.begin(), seed.end());
    auto add = [&](int v) {
      if (seed.insert(v).second) grew = true;
    };
    for (int x : current)
      for (int y : current) {
        add(q->meet(x, y));
        add(q->join(x, y));
      }
    for (int p = 0; p < q->size(); ++p)
      for (int x : current) {
        add(q->tensor(p, x));
        add(q->residuum(p, x));
      }
  }
  QCategory a;
  a.q = q;
  for (int v : seed) a.objects.push_back(q->label(v));
  a.hom.assign(seed.size(), std::vector<int>(seed.size(), 0));
  std::vector<int> elems(seed.begin(), seed.end());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) a.hom[i][j] = q->residuum(elems[i], elems[j]);
  return a;
}

/// The four-element diamond frame 2 x 2 (meet as tensor, top as unit).
inline QuantalePtr diamond_frame() {
  QuantaleTables t;
  t.elements = {"0", "a", "b", "1"};
  auto leq = [](int i, int j) { return (i & ~j) == 0; };  // bitmask order on {0,1,2,3}
  t.le.assign(4, std::vector<bool>(4, false));
  t.tensor.assign(4, std::vector<int>(4, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      t.le[i][j] = leq(i, j);
      t.tensor[i][j] = i & j;  // meet
    }
  t.unit = 3;
  return FiniteQuantale::make(t);
}

/// Non-integral three-chain 0 < m < 1 with unit m (1 & 1 = 1, m & 1 = 1).
inline QuantalePtr nonintegral_chain3() {
  QuantaleTables t;
  t.elements = {"0", "m", "1"};
  t.le = {{true, true, true}, {false, true, true}, {false, false, true}};
  t.tensor = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
  t.unit = 1;
  return FiniteQuantale::make(t);
}

}  // namespace qdl::test
