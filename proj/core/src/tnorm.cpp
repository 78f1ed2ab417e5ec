#include "qdl/tnorm.hpp"

#include <algorithm>

#include "qdl/errors.hpp"

namespace qdl {

const char* to_string(ComponentKind kind) {
  return kind == ComponentKind::lukasiewicz ? "lukasiewicz" : "product";
}

const char* to_string(ClassVerdict verdict) {
  return verdict == ClassVerdict::all_distributive_continuous
             ? "all_distributive_continuous"
             : "fails";
}

OrdinalSumTNorm::OrdinalSumTNorm(std::vector<Component> components)
    : components_(std::move(components)) {
  for (const Component& c : components_) {
    require_unit_interval(c.lo, "component lo");
    require_unit_interval(c.hi, "component hi");
    if (!(c.lo < c.hi))
      throw Error(ErrorKind::ShapeError,
                  "component needs lo < hi, got [" + qdl::to_string(c.lo) + "," +
                      qdl::to_string(c.hi) + "]");
  }
  std::sort(components_.begin(), components_.end(),
            [](const Component& a, const Component& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i + 1 < components_.size(); ++i) {
    if (components_[i].hi > components_[i + 1].lo)
      throw Error(ErrorKind::ShapeError,
                  "component intervals overlap: [" + qdl::to_string(components_[i].lo) + "," +
                      qdl::to_string(components_[i].hi) + "] and [" +
                      qdl::to_string(components_[i + 1].lo) + "," +
                      qdl::to_string(components_[i + 1].hi) + "]");
  }
}

namespace {

// Inner t-norm on [0,1] in component-local coordinates.
Rat inner_tnorm(ComponentKind kind, const Rat& u, const Rat& v) {
  if (kind == ComponentKind::lukasiewicz) {
    Rat s = u + v - 1;
    return s > 0 ? s : Rat(0);
  }
  return u * v;
}

// Inner residuum: max{w : T(u,w) <= v}.
Rat inner_residuum(ComponentKind kind, const Rat& u, const Rat& v) {
  if (u <= v) return Rat(1);
  if (kind == ComponentKind::lukasiewicz) return 1 - u + v;
  return v / u;  // product, u > v >= 0 so u > 0
}

// Component whose closed square contains both x and y, if any.
const Component* find_square(const OrdinalSumTNorm& t, const Rat& x, const Rat& y) {
  for (const Component& c : t.components())
    if (c.lo <= x && x <= c.hi && c.lo <= y && y <= c.hi) return &c;
  return nullptr;
}

Rat scale_in(const Component& c, const Rat& x) { return (x - c.lo) / (c.hi - c.lo); }
Rat scale_out(const Component& c, const Rat& u) { return c.lo + (c.hi - c.lo) * u; }

}  // namespace

Rat eval(const OrdinalSumTNorm& t, const Rat& x, const Rat& y) {
  require_unit_interval(x, "x");
  require_unit_interval(y, "y");
  if (const Component* c = find_square(t, x, y))
    return scale_out(*c, inner_tnorm(c->kind, scale_in(*c, x), scale_in(*c, y)));
  return std::min(x, y);
}

Rat residuum(const OrdinalSumTNorm& t, const Rat& x, const Rat& y) {
  require_unit_interval(x, "x");
  require_unit_interval(y, "y");
  if (x <= y) return Rat(1);
  // x > y: either both lie in one component square, or an idempotent
  // separates them and the residuum collapses to y.
  if (const Component* c = find_square(t, x, y))
    return scale_out(*c, inner_residuum(c->kind, scale_in(*c, x), scale_in(*c, y)));
  return y;
}

Rat left_limit_residuum(const OrdinalSumTNorm& t, const Rat& x, const Rat& c) {
  require_unit_interval(x, "x");
  require_unit_interval(c, "c");
  if (c == 0)
    throw Error(ErrorKind::Undefined, "left limit at 0: no arguments below 0 in [0,1]");
  if (x < c) return Rat(1);
  // r |-> x -> r is monotone, so the sup over r < c is the limit from the
  // left. If some component square contains x and an initial segment of
  // arguments just below c (lo < c <= x <= hi), the inner residuum is
  // continuous in its second argument and the limit is its value at c.
  for (const Component& comp : t.components())
    if (comp.lo < c && x <= comp.hi && comp.lo <= x)
      return scale_out(comp, inner_residuum(comp.kind, scale_in(comp, x), scale_in(comp, c)));
  // Otherwise x -> r = r for all r just below c.
  return c;
}

IntervalSet idempotents(const OrdinalSumTNorm& t) {
  IntervalSet result;
  Rat cursor(0);
  for (const Component& c : t.components()) {
    if (cursor <= c.lo) result.push_back({cursor, c.lo});
    cursor = c.hi;
  }
  if (cursor <= 1) result.push_back({cursor, Rat(1)});
  return result;
}

ClassificationResult classify(const OrdinalSumTNorm& t) {
  ClassificationResult result;
  for (const Component& c : t.components())
    if (c.kind == ComponentKind::lukasiewicz && c.lo > 0) result.offending.push_back(c);
  if (result.offending.empty()) {
    result.verdict = ClassVerdict::all_distributive_continuous;
  } else {
    result.verdict = ClassVerdict::fails;
    result.witness = discontinuity_witness(t, result.offending.front());
  }
  return result;
}

DiscontinuityWitness discontinuity_witness(const OrdinalSumTNorm& t, const Component& c) {
  const auto& comps = t.components();
  const bool member = std::find(comps.begin(), comps.end(), c) != comps.end();
  if (!member || c.kind != ComponentKind::lukasiewicz || !(c.lo > 0))
    throw Error(ErrorKind::NotApplicable,
                "witness requires a Łukasiewicz component of t with lo > 0");
  DiscontinuityWitness w;
  const Rat x = (c.lo + c.hi) / 2;
  w.point = {x, c.lo};
  w.left_limit = left_limit_residuum(t, x, c.lo);
  w.value = residuum(t, x, c.lo);
  return w;
}

namespace {

// True if the restriction of v |-> f(v) to [a,b] keeps a jump bigger than
// tol at every bisection depth. `eval_at` evaluates the residuum with the
// probed coordinate substituted. Exact rational bisection: a continuous ramp
// halves its increment, a genuine jump never drops below its height.
template <typename Eval>
bool confirm_jump(Eval eval_at, Rat a, Rat b, const Rat& tol, int max_depth) {
  Rat fa = eval_at(a), fb = eval_at(b);
  for (int depth = 0; depth < max_depth; ++depth) {
    if (abs(fb - fa) <= tol) return false;
    const Rat mid = (a + b) / 2;
    const Rat fm = eval_at(mid);
    // Keep the half with the larger increment (ties toward the upper half,
    // where a left-discontinuity at b concentrates).
    if (abs(fb - fm) >= abs(fm - fa)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
  }
  return true;
}

}  // namespace

std::vector<std::pair<Rat, Rat>> scan_offdiagonal(const OrdinalSumTNorm& t,
                                                  const Rat& grid_step,
                                                  const Rat& jump_tol) {
  if (!(grid_step > 0) || grid_step > 1)
    throw Error(ErrorKind::OutOfRange, "grid_step must be in (0,1]");
  if (!(jump_tol > 0))
    throw Error(ErrorKind::OutOfRange, "jump_tol must be positive");
  std::vector<Rat> grid;
  for (Rat v(0); v <= 1; v += grid_step) grid.push_back(v);

  const Rat band = 2 * grid_step;
  const int max_depth = 24;
  std::vector<std::pair<Rat, Rat>> confirmed;

  auto off_band = [&](const Rat& x, const Rat& y) { return abs(x - y) > band; };

  for (const Rat& x : grid) {
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
      const Rat &y0 = grid[j], &y1 = grid[j + 1];
      // Second-argument pair (x,y0)-(x,y1), both endpoints off the band.
      if (off_band(x, y0) && off_band(x, y1)) {
        const Rat d = abs(residuum(t, x, y1) - residuum(t, x, y0));
        if (d > jump_tol &&
            confirm_jump([&](const Rat& y) { return residuum(t, x, y); }, y0, y1, jump_tol,
                         max_depth))
          confirmed.emplace_back(x, y0);
      }
      // First-argument pair (y0,x)-(y1,x).
      if (off_band(y0, x) && off_band(y1, x)) {
        const Rat d = abs(residuum(t, y1, x) - residuum(t, y0, x));
        if (d > jump_tol &&
            confirm_jump([&](const Rat& z) { return residuum(t, z, x); }, y0, y1, jump_tol,
                         max_depth))
          confirmed.emplace_back(y0, x);
      }
    }
  }
  std::sort(confirmed.begin(), confirmed.end());
  confirmed.erase(std::unique(confirmed.begin(), confirmed.end()), confirmed.end());
  return confirmed;
}

bool way_below_unit(const Rat& x, const Rat& y) {
  require_unit_interval(x, "x");
  require_unit_interval(y, "y");
  return x == 0 || x < y;
}

}  // namespace qdl
