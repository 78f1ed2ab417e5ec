#pragma once

#include <vector>

#include "qdl/tnorm.hpp"

namespace qdl {

/** The ideal weight below a threshold c in (0,1], i.e. the pointwise join of
 * the representable weights of all r < c on the unit interval enriched in
 * itself by the residuum. Its value at x is sup_{r<c} (x -> r) and its
 * supremum object is c itself.
 */
struct IdealWeightBelow {
  Rat threshold;
};

/// phi_c(x) = sup_{r<c} (x -> r), computed symbolically.
/// Throws Error{Undefined} when the threshold is 0, Error{OutOfRange} off [0,1].
Rat eval_ideal_weight(const OrdinalSumTNorm& t, const IdealWeightBelow& w, const Rat& x);

/// The colimit of the ideal weight: the threshold c.
Rat sup_of_ideal_weight(const OrdinalSumTNorm& t, const IdealWeightBelow& w);

/** One evaluation of the continuity equation at (c, x):
 *   lhs = x -> c          (hom into the weight's supremum)
 *   rhs = inf over all y way-below x of phi_c(y)
 *       = the left limit of the antitone map y |-> phi_c(y) at x (1 when x = 0).
 * The equation holds iff gap = lhs - rhs is 0; the gap is never negative.
 */
struct ContinuityCheckReport {
  Rat c;
  Rat x;
  Rat lhs;
  Rat rhs;
  Rat gap;

  bool holds() const { return gap == 0; }
};

ContinuityCheckReport continuity_equation_check(const OrdinalSumTNorm& t, const Rat& c,
                                                const Rat& x);

/** Strict failures of the continuity equation along the lower edges of the
 * component squares: for every component [p,q] with p > 0 the equation is
 * evaluated at c = p and `samples_per_component` evenly spaced interior
 * points x. Rows are recorded only for strict gaps, so the report is empty
 * iff classify(t) passes on the sampled points.
 */
struct CounterexampleRow {
  Component component;
  ContinuityCheckReport check;
};

struct CounterexampleReport {
  std::vector<CounterexampleRow> rows;

  bool empty() const { return rows.empty(); }
};

CounterexampleReport counterexample_report(const OrdinalSumTNorm& t,
                                           int samples_per_component);

}  // namespace qdl
