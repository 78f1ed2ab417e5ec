#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdl/qcat.hpp"

namespace qdl {

/** Which arm(s) produced a verdict.
 *
 * `criteria` re-states the textbook characterization (tensors + conical
 * (co)limits, preservation properties of the colimit functor, the way-below
 * equation); `brute_force` decides the same property by exhaustive
 * enumeration of weights / universal-property scans / candidate-image
 * searches. When both arms run they must agree — a disagreement throws,
 * since it would mean the library contradicts itself.
 */
enum class CheckMethod { criteria, brute_force, both_agree };

const char* to_string(CheckMethod method);

struct Witness {
  std::string what;
  std::vector<std::pair<std::string, std::string>> detail;
};

struct CheckerReport {
  bool verdict = false;
  CheckMethod method = CheckMethod::both_agree;
  std::optional<Witness> witness;
};

struct CheckOptions {
  std::size_t cap = kDefaultCap;
  /// Insist on the brute-force arm (propagates CapExceeded instead of
  /// falling back to the criteria arm).
  bool force_brute = false;
};

/** Cocomplete: every weight has a colimit. Criteria arm: all tensors exist
 * and all conical joins exist (empty + binary suffice for finite A) with
 * A(join C, x) = meet_{c in C} A(c, x). Brute arm: enumerate all weights and
 * scan for each supremum. Throws Error{CapExceeded} only if the brute arm is
 * forced beyond the cap.
 */
CheckerReport is_cocomplete(const QCategory& a, const CheckOptions& opts = {});

/// Complete: every coweight has a limit; exactly dual to is_cocomplete.
CheckerReport is_complete(const QCategory& a, const CheckOptions& opts = {});

/** Completely distributive: the colimit functor sup: PA -> A has a left
 * adjoint. Requires a separated input (Error{NotSeparated}); a category that
 * is not even cocomplete is reported false. Criteria arm: sup preserves the
 * top weight, binary (enriched) meets and cotensors. Brute arm: per-object
 * exhaustive search for the left adjoint image of every object, then full
 * verification of the adjunction equality.
 */
CheckerReport is_completely_distributive(const QCategory& a, const CheckOptions& opts = {});

/// Completely codistributive: the opposite category is completely distributive.
CheckerReport is_completely_codistributive(const QCategory& a, const CheckOptions& opts = {});

/** All weights of the form join_{d in D} A(-, d) for a directed nonempty
 * subset D of the underlying order, deduplicated. Requires an integral
 * quantale (Error{NotIntegral}): the Cauchy condition calibrates against
 * k = top. At finite scale every directed set has a maximum, so these are
 * exactly the representable weights — asserted by the test suite, relied on
 * nowhere.
 */
std::vector<Weight> forward_cauchy_weights(const QCategory& a, std::size_t cap = kDefaultCap);

/// The canonical weight of a directed nonempty subset: x |-> join_{d in D} A(x, d).
/// Throws Error{NotDirected} if D is empty or not directed in the underlying order.
Weight weight_of_directed_set(const QCategory& a, const std::vector<int>& d);

/// The unit level set of a weight: {x : k <= phi(x)}, ascending object indices.
std::vector<int> ideal_of_weight(const QCategory& a, const Weight& phi);

/** For separated complete A over an integral quantale, the directed-set and
 * level-set maps form a Galois correspondence: weight_of_directed_set is
 * left adjoint to ideal_of_weight between ideals ordered by inclusion and
 * forward-Cauchy weights ordered pointwise; composing one way is the
 * identity; and the colimit of a forward-Cauchy weight is the join of its
 * level set. Verified literally over all ideals and all forward-Cauchy
 * weights. Throws Error{NotSeparated|NotComplete|NotIntegral}.
 */
CheckerReport check_lambda_gamma(const QCategory& a, const CheckOptions& opts = {});

/** Continuous: every forward-Cauchy weight has a colimit and the restricted
 * colimit functor has a left adjoint. Criteria arm: the way-below equation
 * A(x, sup psi) = meet over {y way-below x} of psi(y), with way-below
 * computed definitionally from directed subsets of the underlying order
 * (which makes it coincide with the order itself at finite scale — the
 * check is honest about that triviality). Brute arm: per-object adjoint
 * search into the forward-Cauchy subcategory. Requires separatedness and an
 * integral quantale.
 */
CheckerReport is_continuous_qcat(const QCategory& a, const CheckOptions& opts = {});

/** Literal evaluation of the net conditions over a finite directed preorder
 * index: condition_value = join_l meet_{l<=m<=g} A(x_m, x_g), and the
 * accumulated weight x |-> join_l meet_{l<=m} A(x, x_m). The net is forward
 * Cauchy iff k <= condition_value. Note a finite directed partial order has
 * a maximum, so only preorder indices (with a nontrivial top cluster) can
 * fail the condition. Throws Error{ShapeError|NotDirected|UnknownElement}.
 */
struct NetReport {
  bool forward_cauchy = false;
  int condition_value = 0;  // quantale element index
  Weight weight;
};

NetReport check_net(const QCategory& a, const std::vector<std::vector<bool>>& index_le,
                    const std::vector<int>& net);

/** For separated complete A: exhaustively searches a left adjoint to the
 * inclusion of the forward-Cauchy weights into all weights (a reflection
 * computed per weight). Agrees with is_cocomplete on finite instances.
 * Throws Error{NotSeparated|NotComplete|NotIntegral|CapExceeded}.
 */
CheckerReport check_inclusion_left_adjoint(const QCategory& a, const CheckOptions& opts = {});

/** For complete A: cotensoring with any p commutes with directed joins,
 * p -o (join D) = join {p -o d}, compared up to isomorphism. Trivially true
 * at finite scale (directed sets have maxima); evaluated literally anyway.
 * Throws Error{NotComplete}.
 */
CheckerReport check_cotensor_scott_continuity(const QCategory& a, const CheckOptions& opts = {});

}  // namespace qdl
