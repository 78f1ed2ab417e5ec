#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdl/quantale.hpp"

namespace qdl {

/// Default ceiling on enumeration sizes (candidate vectors, map searches).
inline constexpr std::size_t kDefaultCap = 4096;

/** A (small, finite) category enriched in a finite quantale Q: objects and a
 * hom matrix with values in Q satisfying
 *   k <= hom(x,x)   and   hom(y,z) & hom(x,y) <= hom(x,z).
 * hom[x][y] stores A(x,y), the "distance from x to y".
 */
struct QCategory {
  QuantalePtr q;
  std::vector<std::string> objects;
  std::vector<std::vector<int>> hom;  // indices into q's elements

  int size() const { return static_cast<int>(objects.size()); }
  int operator()(int x, int y) const { return hom[x][y]; }
  /// Index of an object label; throws Error{UnknownElement}.
  int object_index(const std::string& label) const;
};

struct CategoryViolation {
  std::string law;
  std::vector<std::string> witness;
};

/// Unit and composition laws; empty result means valid.
/// Throws Error{ShapeError} on ragged/out-of-range data.
std::vector<CategoryViolation> validate_category(const QCategory& a);

/// x is below y iff k <= A(x,y).
std::vector<std::vector<bool>> underlying_preorder(const QCategory& a);

/// Separated: the underlying preorder is antisymmetric (a partial order).
bool is_separated(const QCategory& a);

/// Object map of a functor A -> B (b[i] = image of object i).
using ObjMap = std::vector<int>;

/// Checks A(x,y) <= B(f x, f y) for all pairs; empty result means functorial.
std::vector<CategoryViolation> validate_functor(const QCategory& a, const QCategory& b,
                                                const ObjMap& f);

struct AdjunctionReport {
  bool holds;
  // First (x, y) with B(f x, y) != A(x, g y), by label, when it fails.
  std::vector<std::string> mismatch;
};

/// f -| g iff B(f x, y) = A(x, g y) for all x in A, y in B.
AdjunctionReport check_adjunction(const QCategory& a, const QCategory& b, const ObjMap& f,
                                  const ObjMap& g);

/** A distributor (bimodule) phi: A -|-> B: a B x A matrix of Q-values with
 * phi[y][x] = phi(x, y) closed under the actions of both categories:
 *   B(y,y') & phi(x,y) & A(x',x) <= phi(x',y').
 * Stored row-major as value[x][y] for phi(x, y).
 */
struct Distributor {
  std::vector<std::vector<int>> value;  // value[x][y] = phi(x,y), x in A, y in B
};

std::vector<CategoryViolation> validate_distributor(const QCategory& a, const QCategory& b,
                                                    const Distributor& phi);

/// (psi . phi)(x,z) = join_y psi(y,z) & phi(x,y), for phi: A -|-> B, psi: B -|-> C.
Distributor compose_distributors(const QCategory& a, const QCategory& b, const QCategory& c,
                                 const Distributor& phi, const Distributor& psi);

/// Graph of a functor f: A -> B: f_*(x,y) = B(f x, y), a distributor A -|-> B.
Distributor graph(const QCategory& a, const QCategory& b, const ObjMap& f);

/// Cograph: f^*(y,x) = B(y, f x), a distributor B -|-> A.
Distributor cograph(const QCategory& a, const QCategory& b, const ObjMap& f);

/** Weights (presheaves) are distributors into the one-object category with
 * hom k, stored as plain value vectors phi[x]; the distributor law becomes
 *   phi(x) & A(x',x) <= phi(x').
 * Coweights (copresheaves) dually satisfy A(x,x') & psi(x) <= psi(x').
 */
using Weight = std::vector<int>;
using Coweight = std::vector<int>;

bool is_weight(const QCategory& a, const Weight& phi);
bool is_coweight(const QCategory& a, const Coweight& psi);

/// PA(phi, rho) = meet_x phi(x) -> rho(x).
int hom_weights(const QCategory& a, const Weight& phi, const Weight& rho);

/// P'A(psi, sigma) = meet_x sigma(x) -> psi(x). Note the reversal.
int hom_coweights(const QCategory& a, const Coweight& psi, const Coweight& sigma);

/// All weights in pointwise-lexicographic order. Throws Error{CapExceeded}
/// when |Q|^|A| > cap.
std::vector<Weight> enumerate_weights(const QCategory& a, std::size_t cap = kDefaultCap);
std::vector<Coweight> enumerate_coweights(const QCategory& a, std::size_t cap = kDefaultCap);

/** The category of weights (resp. coweights) with the homs above, together
 * with the vector of each object. The underlying order of the weight
 * category is the pointwise order; for coweights it is the opposite of the
 * pointwise order.
 */
struct WeightFamily {
  QCategory category;
  std::vector<std::vector<int>> vectors;

  /// Index of a vector in enumeration order; throws Error{UnknownElement}.
  int index_of(const std::vector<int>& v) const;
};

WeightFamily presheaf_category(const QCategory& a, std::size_t cap = kDefaultCap);
WeightFamily copresheaf_category(const QCategory& a, std::size_t cap = kDefaultCap);

/// y(x) = A(-, x) as a weight; y'(x) = A(x, -) as a coweight.
Weight yoneda(const QCategory& a, int x);
Coweight coyoneda(const QCategory& a, int x);

/// Result of an exhaustive universal-property scan. When several objects
/// satisfy the property (non-separated categories) the first in object order
/// is returned with unique = false.
struct ObjectSearch {
  std::optional<int> object;
  bool unique = true;

  bool found() const { return object.has_value(); }
};

/// Tensor p (x) x: object z with A(z, y) = p -> A(x, y) for all y.
ObjectSearch tensor_object(const QCategory& a, int p, int x);

/// Cotensor p -o x: object z with A(y, z) = p -> A(y, x) for all y.
ObjectSearch cotensor_object(const QCategory& a, int p, int x);

/// Colimit of a weight: z with A(z, y) = PA(phi, y(y)) for all y.
ObjectSearch sup_weight(const QCategory& a, const Weight& phi);

/// Limit of a coweight: z with A(y, z) = P'A(y'(y), psi) for all y.
ObjectSearch inf_coweight(const QCategory& a, const Coweight& psi);

/// Weight-level image of a functor f: A -> B: (Pf)(phi) = phi . f^*,
/// concretely b |-> join_a phi(a) & B(b, f a).
Weight presheaf_action(const QCategory& a, const QCategory& b, const ObjMap& f,
                       const Weight& phi);

/// Coweight-level image: (P'f)(psi) = f_* . psi: b |-> join_a B(f a, b) & psi(a).
Coweight copresheaf_action(const QCategory& a, const QCategory& b, const ObjMap& f,
                           const Coweight& psi);

/// Multiplication of the weight construction: a weight Phi on PA collapses to
/// s(Phi)(x) = join_phi Phi(phi) & phi(x); as a functor PPA -> PA it is given
/// objectwise on `ppa.vectors`.
Weight collapse_weight_of_weights(const QCategory& a, const WeightFamily& pa,
                                  const Weight& big_phi);
ObjMap presheaf_mult(const QCategory& a, const WeightFamily& pa, const WeightFamily& ppa);

/// Same objects, hom transposed (valid because the quantale is commutative).
QCategory opposite(const QCategory& a);

/// The quantale enriched in itself: hom(x, y) = x -> y. Separated and complete.
QCategory self_enriched_category(QuantalePtr q);

}  // namespace qdl
