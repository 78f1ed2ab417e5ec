#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qdl/rational.hpp"

namespace qdl {

/** Inner summand shape of an ordinal-sum component.
 *
 * Both are the Archimedean generators: `lukasiewicz` is truncated addition
 * (u, v) -> max(0, u + v - 1), `product` is multiplication. Everything
 * outside the component squares behaves like the minimum.
 */
enum class ComponentKind { lukasiewicz, product };

const char* to_string(ComponentKind kind);

/// One component square [lo,hi]^2 of an ordinal sum; requires 0 <= lo < hi <= 1.
struct Component {
  Rat lo;
  Rat hi;
  ComponentKind kind;

  bool operator==(const Component&) const = default;
};

/** Continuous t-norm presented as an ordinal sum of Łukasiewicz and product
 * components over the minimum.
 *
 * On a component square the value is the rescaled inner t-norm,
 *   x & y = lo + (hi - lo) * T((x-lo)/(hi-lo), (y-lo)/(hi-lo)),
 * and min(x, y) everywhere else. Components are kept sorted; their open
 * intervals must be pairwise disjoint (shared endpoints are fine). The empty
 * sum is the minimum t-norm itself.
 */
class OrdinalSumTNorm {
 public:
  /// Validates and sorts. Throws Error{OutOfRange|ShapeError}.
  explicit OrdinalSumTNorm(std::vector<Component> components = {});

  const std::vector<Component>& components() const { return components_; }

  bool operator==(const OrdinalSumTNorm&) const = default;

 private:
  std::vector<Component> components_;
};

/// x & y. Throws Error{OutOfRange} outside [0,1]^2.
Rat eval(const OrdinalSumTNorm& t, const Rat& x, const Rat& y);

/// x -> y = max{z : x & z <= y}; exact, by closed form per component.
Rat residuum(const OrdinalSumTNorm& t, const Rat& x, const Rat& y);

/** sup_{r < c} (x -> r), the left limit of the monotone map r |-> x -> r at c.
 * Computed symbolically from the component decomposition, never by sampling.
 * Throws Error{Undefined} when c = 0 (no r below 0 exists in [0,1]).
 */
Rat left_limit_residuum(const OrdinalSumTNorm& t, const Rat& x, const Rat& c);

/// Closed interval [lo,hi] (lo == hi encodes a point).
struct RatInterval {
  Rat lo;
  Rat hi;
  bool operator==(const RatInterval&) const = default;
};

/// Finite union of disjoint closed intervals, sorted ascending.
using IntervalSet = std::vector<RatInterval>;

/// The idempotent elements: [0,1] minus the open component intervals.
IntervalSet idempotents(const OrdinalSumTNorm& t);

/// One witnessed jump of the residuum: value at `point` vs. its left limit.
struct DiscontinuityWitness {
  std::pair<Rat, Rat> point;  // (x, c): second-argument jump location
  Rat left_limit;             // lim_{y -> c^-} (x -> y)
  Rat value;                  // x -> c
  bool operator==(const DiscontinuityWitness&) const = default;
};

/** Verdict of the structural classifier.
 *
 * `all_distributive_continuous`: every completely distributive category
 * enriched in ([0,1], &) is continuous; equivalently the residuum is
 * continuous off the diagonal. `fails`: some Łukasiewicz component starts
 * strictly above 0, and the residuum jumps at its lower edge.
 */
enum class ClassVerdict { all_distributive_continuous, fails };

const char* to_string(ClassVerdict verdict);

struct ClassificationResult {
  ClassVerdict verdict;
  std::vector<Component> offending;           // Łukasiewicz components with lo > 0
  std::optional<DiscontinuityWitness> witness;  // for the first offender

  bool passes() const { return verdict == ClassVerdict::all_distributive_continuous; }
};

ClassificationResult classify(const OrdinalSumTNorm& t);

/** Exact jump witness at the lower edge of an offending component:
 * x = (lo+hi)/2, c = lo. Throws Error{NotApplicable} unless `c` is a
 * Łukasiewicz component of `t` with lo > 0.
 */
DiscontinuityWitness discontinuity_witness(const OrdinalSumTNorm& t, const Component& c);

/** Numeric cross-check of the classifier, independent of the component data.
 *
 * Samples the residuum on the square grid with the given step, takes
 * axis-adjacent sample pairs at least two cells away from the diagonal whose
 * values differ by more than `jump_tol`, and confirms each suspect by exact
 * bisection between the two samples: a genuine jump keeps a gap above the
 * tolerance at every depth, a steep continuous ramp dissolves. Returns the
 * confirmed grid points, sorted; empty iff classify(t) passes (for the
 * default 1/64 grid with tolerance 1/8 on components at least 1/4 long).
 */
std::vector<std::pair<Rat, Rat>> scan_offdiagonal(const OrdinalSumTNorm& t,
                                                  const Rat& grid_step,
                                                  const Rat& jump_tol);

/// Way-below on the unit interval with its usual order: x << y iff x = 0 or x < y.
bool way_below_unit(const Rat& x, const Rat& y);

}  // namespace qdl
