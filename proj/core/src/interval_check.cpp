#include "qdl/interval_check.hpp"

#include "qdl/errors.hpp"

namespace qdl {

Rat eval_ideal_weight(const OrdinalSumTNorm& t, const IdealWeightBelow& w, const Rat& x) {
  return left_limit_residuum(t, x, w.threshold);
}

Rat sup_of_ideal_weight(const OrdinalSumTNorm&, const IdealWeightBelow& w) {
  require_unit_interval(w.threshold, "threshold");
  if (w.threshold == 0)
    throw Error(ErrorKind::Undefined, "ideal weight below 0 is empty");
  return w.threshold;
}

namespace {

// Left limit of y |-> phi_c(y) at x > 0 (phi_c is antitone, so this is the
// infimum of phi_c over [0, x)). Mirrors left_limit_residuum except at x = c,
// where all arguments below x sit strictly below the threshold.
Rat ideal_weight_left_limit(const OrdinalSumTNorm& t, const Rat& c, const Rat& x) {
  if (x <= c) return Rat(1);
  for (const Component& comp : t.components())
    if (comp.lo < c && x <= comp.hi)
      return left_limit_residuum(t, x, c);  // inner residuum is continuous here
  return c;
}

}  // namespace

ContinuityCheckReport continuity_equation_check(const OrdinalSumTNorm& t, const Rat& c,
                                                const Rat& x) {
  require_unit_interval(x, "x");
  require_unit_interval(c, "c");
  if (c == 0) throw Error(ErrorKind::Undefined, "threshold c must lie in (0,1]");
  ContinuityCheckReport report;
  report.c = c;
  report.x = x;
  report.lhs = residuum(t, x, c);
  // The only element way below 0 is 0 itself and phi_c(0) = 1.
  report.rhs = (x == 0) ? Rat(1) : ideal_weight_left_limit(t, c, x);
  report.gap = report.lhs - report.rhs;
  return report;
}

CounterexampleReport counterexample_report(const OrdinalSumTNorm& t,
                                           int samples_per_component) {
  if (samples_per_component < 1)
    throw Error(ErrorKind::OutOfRange, "samples_per_component must be >= 1");
  CounterexampleReport report;
  for (const Component& comp : t.components()) {
    if (!(comp.lo > 0)) continue;
    const Rat step = (comp.hi - comp.lo) / (samples_per_component + 1);
    for (int i = 1; i <= samples_per_component; ++i) {
      const Rat x = comp.lo + i * step;
      ContinuityCheckReport check = continuity_equation_check(t, comp.lo, x);
      if (check.gap > 0) report.rows.push_back({comp, std::move(check)});
    }
  }
  return report;
}

}  // namespace qdl
