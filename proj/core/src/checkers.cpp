#include "qdl/checkers.hpp"

#include <algorithm>
#include <stdexcept>

#include "qdl/errors.hpp"

namespace qdl {

const char* to_string(CheckMethod method) {
  switch (method) {
    case CheckMethod::criteria: return "criteria";
    case CheckMethod::brute_force: return "brute_force";
    case CheckMethod::both_agree: return "both_agree";
  }
  return "unknown";
}

namespace {

bool pointwise_le(const FiniteQuantale& q, const std::vector<int>& v, const std::vector<int>& w) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!q.le(v[i], w[i])) return false;
  return true;
}

// Scan for z with A(z, y) = meet_{d in D} A(d, y) for all y (conical join).
ObjectSearch conical_join(const QCategory& a, const std::vector<int>& d) {
  std::vector<int> target(a.size());
  for (int y = 0; y < a.size(); ++y) {
    int acc = a.q->top();
    for (int el : d) acc = a.q->meet(acc, a(el, y));
    target[y] = acc;
  }
  ObjectSearch result;
  for (int z = 0; z < a.size(); ++z) {
    bool match = true;
    for (int y = 0; y < a.size(); ++y)
      if (a(z, y) != target[y]) { match = false; break; }
    if (match) {
      if (!result.object) result.object = z;
      else result.unique = false;
    }
  }
  return result;
}

// Scan for z with A(y, z) = meet_{d in D} A(y, d) for all y (conical meet).
ObjectSearch conical_meet(const QCategory& a, const std::vector<int>& d) {
  std::vector<int> target(a.size());
  for (int y = 0; y < a.size(); ++y) {
    int acc = a.q->top();
    for (int el : d) acc = a.q->meet(acc, a(y, el));
    target[y] = acc;
  }
  ObjectSearch result;
  for (int z = 0; z < a.size(); ++z) {
    bool match = true;
    for (int y = 0; y < a.size(); ++y)
      if (a(y, z) != target[y]) { match = false; break; }
    if (match) {
      if (!result.object) result.object = z;
      else result.unique = false;
    }
  }
  return result;
}

std::string set_label(const QCategory& a, const std::vector<int>& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + a.objects[d[i]];
  return s + "}";
}

bool subset_enumeration_feasible(int n, std::size_t cap) {
  return n < 63 && (std::size_t{1} << n) <= cap;
}

std::vector<std::vector<int>> directed_subsets(const QCategory& a,
                                               const std::vector<std::vector<bool>>& le,
                                               std::size_t cap) {
  if (!subset_enumeration_feasible(a.size(), cap))
    throw Error(ErrorKind::CapExceeded, "2^|A| exceeds cap " + std::to_string(cap));
  std::vector<std::vector<int>> out;
  const std::size_t total = std::size_t{1} << a.size();
  for (std::size_t mask = 1; mask < total; ++mask) {
    std::vector<int> d;
    for (int i = 0; i < a.size(); ++i)
      if (mask & (std::size_t{1} << i)) d.push_back(i);
    bool directed = true;
    for (std::size_t i = 0; i < d.size() && directed; ++i)
      for (std::size_t j = i; j < d.size() && directed; ++j) {
        bool has_ub = false;
        for (int u : d)
          if (le[d[i]][u] && le[d[j]][u]) { has_ub = true; break; }
        directed = has_ub;
      }
    if (directed) out.push_back(std::move(d));
  }
  return out;
}

// Least upper bound of `d` in the underlying order, when one exists.
std::optional<int> order_lub(const QCategory& a, const std::vector<std::vector<bool>>& le,
                             const std::vector<int>& d) {
  std::vector<int> ubs;
  for (int u = 0; u < a.size(); ++u) {
    bool over_all = true;
    for (int el : d)
      if (!le[el][u]) { over_all = false; break; }
    if (over_all) ubs.push_back(u);
  }
  for (int u0 : ubs) {
    bool least = true;
    for (int u : ubs)
      if (!le[u0][u]) { least = false; break; }
    if (least) return u0;
  }
  return std::nullopt;
}

bool weights_enumeration_feasible(const QCategory& a, std::size_t cap) {
  const std::size_t qn = static_cast<std::size_t>(a.q->size());
  std::size_t total = 1;
  for (int i = 0; i < a.size(); ++i) {
    if (total > cap) return false;
    total *= qn;
  }
  return total <= cap;
}

void require_agreement(bool criteria, bool brute, const char* checker) {
  if (criteria != brute)
    throw std::logic_error(std::string("internal: criteria and brute-force arms disagree in ") +
                           checker);
}

// Shared body of is_cocomplete / is_complete; `colimits` false means the dual.
CheckerReport completeness_check(const QCategory& a, const CheckOptions& opts, bool colimits) {
  const FiniteQuantale& q = *a.q;
  CheckerReport report;
  bool crit = true;
  // Tensors (cotensors in the dual).
  for (int p = 0; p < q.size() && crit; ++p)
    for (int x = 0; x < a.size() && crit; ++x) {
      const ObjectSearch s = colimits ? tensor_object(a, p, x) : cotensor_object(a, p, x);
      if (!s.found()) {
        crit = false;
        report.witness = Witness{colimits ? "missing tensor" : "missing cotensor",
                                 {{"p", q.label(p)}, {"x", a.objects[x]}}};
      }
    }
  // Conical joins (meets): empty and binary generate the rest at finite scale.
  if (crit) {
    const ObjectSearch nullary = colimits ? conical_join(a, {}) : conical_meet(a, {});
    if (!nullary.found()) {
      crit = false;
      report.witness = Witness{colimits ? "missing initial object (empty join)"
                                        : "missing terminal object (empty meet)",
                               {}};
    }
  }
  for (int x = 0; x < a.size() && crit; ++x)
    for (int y = x; y < a.size() && crit; ++y) {
      const ObjectSearch s = colimits ? conical_join(a, {x, y}) : conical_meet(a, {x, y});
      if (!s.found()) {
        crit = false;
        report.witness = Witness{colimits ? "missing binary join" : "missing binary meet",
                                 {{"x", a.objects[x]}, {"y", a.objects[y]}}};
      }
    }

  const bool feasible = weights_enumeration_feasible(a, opts.cap);
  if (!feasible && !opts.force_brute) {
    report.verdict = crit;
    report.method = CheckMethod::criteria;
    return report;
  }
  bool brute = true;
  std::optional<Witness> brute_witness;
  const auto family = colimits ? enumerate_weights(a, opts.cap) : enumerate_coweights(a, opts.cap);
  for (const auto& vec : family) {
    const ObjectSearch s = colimits ? sup_weight(a, vec) : inf_coweight(a, vec);
    if (!s.found()) {
      brute = false;
      std::string lbl = "(";
      for (std::size_t i = 0; i < vec.size(); ++i) lbl += (i ? "," : "") + q.label(vec[i]);
      lbl += ")";
      brute_witness = Witness{colimits ? "weight without colimit" : "coweight without limit",
                              {{colimits ? "weight" : "coweight", lbl}}};
      break;
    }
  }
  require_agreement(crit, brute, colimits ? "is_cocomplete" : "is_complete");
  report.verdict = brute;
  report.method = CheckMethod::both_agree;
  if (!report.witness && brute_witness) report.witness = brute_witness;
  return report;
}

}  // namespace

CheckerReport is_cocomplete(const QCategory& a, const CheckOptions& opts) {
  return completeness_check(a, opts, /*colimits=*/true);
}

CheckerReport is_complete(const QCategory& a, const CheckOptions& opts) {
  return completeness_check(a, opts, /*colimits=*/false);
}

CheckerReport is_completely_distributive(const QCategory& a, const CheckOptions& opts) {
  if (!is_separated(a))
    throw Error(ErrorKind::NotSeparated, "complete distributivity needs a separated category");
  const FiniteQuantale& q = *a.q;

  CheckerReport cocompl = is_cocomplete(a, opts);
  if (!cocompl.verdict) {
    CheckerReport report;
    report.verdict = false;
    report.method = cocompl.method;
    report.witness = Witness{"not cocomplete", cocompl.witness ? cocompl.witness->detail
                                                               : std::vector<std::pair<std::string, std::string>>{}};
    return report;
  }

  const WeightFamily pa = presheaf_category(a, opts.cap);
  const int np = static_cast<int>(pa.vectors.size());
  std::vector<int> sup(np);
  for (int i = 0; i < np; ++i) {
    const ObjectSearch s = sup_weight(a, pa.vectors[i]);
    if (!s.found())
      throw std::logic_error("internal: cocomplete category with a weight lacking a colimit");
    sup[i] = *s.object;
  }

  // Criteria arm: the colimit functor preserves the limits a left adjoint
  // would have to preserve — the top weight, binary meets, cotensors.
  bool crit = true;
  std::optional<Witness> crit_witness;
  {
    const Weight topw(a.size(), q.top());
    const int top_idx = pa.index_of(topw);
    const ObjectSearch terminal = conical_meet(a, {});
    if (!terminal.found() || sup[top_idx] != *terminal.object) {
      crit = false;
      crit_witness = Witness{"colimit functor does not preserve the top weight", {}};
    }
  }
  for (int i = 0; i < np && crit; ++i)
    for (int j = i; j < np && crit; ++j) {
      Weight meet_vec(a.size());
      for (int x = 0; x < a.size(); ++x)
        meet_vec[x] = q.meet(pa.vectors[i][x], pa.vectors[j][x]);
      const int meet_idx = pa.index_of(meet_vec);
      const ObjectSearch m = conical_meet(a, {sup[i], sup[j]});
      if (!m.found() || sup[meet_idx] != *m.object) {
        crit = false;
        crit_witness = Witness{"colimit functor does not preserve a binary meet",
                               {{"phi", pa.category.objects[i]}, {"rho", pa.category.objects[j]}}};
      }
    }
  for (int p = 0; p < q.size() && crit; ++p)
    for (int i = 0; i < np && crit; ++i) {
      Weight cot_vec(a.size());
      for (int x = 0; x < a.size(); ++x) cot_vec[x] = q.residuum(p, pa.vectors[i][x]);
      const int cot_idx = pa.index_of(cot_vec);
      const ObjectSearch ct = cotensor_object(a, p, sup[i]);
      if (!ct.found() || sup[cot_idx] != *ct.object) {
        crit = false;
        crit_witness = Witness{"colimit functor does not preserve a cotensor",
                               {{"p", q.label(p)}, {"phi", pa.category.objects[i]}}};
      }
    }

  // Brute arm: the adjunction equality PA(t x, phi) = A(x, sup phi) pins
  // down t(x) independently for each x; scan all weights for it.
  bool brute = true;
  std::optional<Witness> brute_witness;
  ObjMap t(a.size(), -1);
  for (int x = 0; x < a.size() && brute; ++x) {
    for (int i = 0; i < np; ++i) {
      bool match = true;
      for (int j = 0; j < np; ++j)
        if (pa.category.hom[i][j] != a(x, sup[j])) { match = false; break; }
      if (match) { t[x] = i; break; }
    }
    if (t[x] < 0) {
      brute = false;
      brute_witness =
          Witness{"no left-adjoint image for object", {{"x", a.objects[x]}}};
    }
  }
  if (brute && !validate_functor(a, pa.category, t).empty())
    throw std::logic_error("internal: assembled left adjoint is not a functor");

  require_agreement(crit, brute, "is_completely_distributive");
  CheckerReport report;
  report.verdict = brute;
  report.method = CheckMethod::both_agree;
  report.witness = brute ? std::nullopt
                         : (brute_witness ? brute_witness : crit_witness);
  return report;
}

CheckerReport is_completely_codistributive(const QCategory& a, const CheckOptions& opts) {
  return is_completely_distributive(opposite(a), opts);
}

std::vector<Weight> forward_cauchy_weights(const QCategory& a, std::size_t cap) {
  if (!a.q->is_integral())
    throw Error(ErrorKind::NotIntegral,
                "forward-Cauchy weights are defined against k = top; quantale is not integral");
  const auto le = underlying_preorder(a);
  std::vector<Weight> out;
  for (const auto& d : directed_subsets(a, le, cap)) out.push_back(weight_of_directed_set(a, d));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Weight weight_of_directed_set(const QCategory& a, const std::vector<int>& d) {
  if (d.empty()) throw Error(ErrorKind::NotDirected, "directed sets are nonempty by definition");
  for (int el : d)
    if (el < 0 || el >= a.size())
      throw Error(ErrorKind::UnknownElement, "object index out of range in directed set");
  const auto le = underlying_preorder(a);
  for (int x : d)
    for (int y : d) {
      bool has_ub = false;
      for (int u : d)
        if (le[x][u] && le[y][u]) { has_ub = true; break; }
      if (!has_ub)
        throw Error(ErrorKind::NotDirected,
                    "no upper bound for " + a.objects[x] + ", " + a.objects[y] + " inside the set");
    }
  Weight w(a.size());
  for (int x = 0; x < a.size(); ++x) {
    int acc = a.q->bottom();
    for (int el : d) acc = a.q->join(acc, a(x, el));
    w[x] = acc;
  }
  return w;
}

std::vector<int> ideal_of_weight(const QCategory& a, const Weight& phi) {
  if (static_cast<int>(phi.size()) != a.size())
    throw Error(ErrorKind::ShapeError, "weight has wrong arity");
  std::vector<int> out;
  for (int x = 0; x < a.size(); ++x)
    if (a.q->le(a.q->unit(), phi[x])) out.push_back(x);
  return out;
}

CheckerReport check_lambda_gamma(const QCategory& a, const CheckOptions& opts) {
  if (!is_separated(a))
    throw Error(ErrorKind::NotSeparated, "the correspondence needs a separated category");
  if (!is_complete(a, opts).verdict)
    throw Error(ErrorKind::NotComplete, "the correspondence needs a complete category");
  const FiniteQuantale& q = *a.q;
  const auto ca = forward_cauchy_weights(a, opts.cap);
  const auto le = underlying_preorder(a);

  // Ideals: nonempty directed lower sets of the underlying order.
  std::vector<std::vector<int>> ideals;
  for (const auto& d : directed_subsets(a, le, opts.cap)) {
    bool lower = true;
    for (int el : d)
      for (int y = 0; y < a.size() && lower; ++y)
        if (le[y][el] && std::find(d.begin(), d.end(), y) == d.end()) lower = false;
    if (lower) ideals.push_back(d);
  }

  CheckerReport report;
  report.method = CheckMethod::brute_force;
  report.verdict = true;
  auto fail = [&](std::string what, std::vector<std::pair<std::string, std::string>> detail) {
    report.verdict = false;
    report.witness = Witness{std::move(what), std::move(detail)};
  };

  // Adjunction: Lambda(D) <= phi pointwise iff D is inside the level set.
  for (const auto& d : ideals) {
    const Weight lam = weight_of_directed_set(a, d);
    for (const auto& phi : ca) {
      const bool left = pointwise_le(q, lam, phi);
      const auto gamma = ideal_of_weight(a, phi);
      const bool right = std::includes(gamma.begin(), gamma.end(), d.begin(), d.end());
      if (left != right) {
        fail("adjunction between ideals and forward-Cauchy weights fails",
             {{"D", set_label(a, d)}});
        return report;
      }
    }
  }
  // Lambda . Gamma = id, and colimits are level-set joins.
  for (const auto& phi : ca) {
    const auto gamma = ideal_of_weight(a, phi);
    if (gamma.empty()) {
      fail("level set of a forward-Cauchy weight is empty", {});
      return report;
    }
    try {
      if (weight_of_directed_set(a, gamma) != phi) {
        fail("round trip through the level set does not reproduce the weight", {});
        return report;
      }
    } catch (const Error& e) {
      if (e.kind != ErrorKind::NotDirected) throw;
      fail("level set of a forward-Cauchy weight is not directed", {});
      return report;
    }
    const ObjectSearch sup = sup_weight(a, phi);
    const auto lub = order_lub(a, le, gamma);
    if (!sup.found() || !lub || *sup.object != *lub) {
      fail("colimit of a forward-Cauchy weight differs from the join of its level set", {});
      return report;
    }
  }
  return report;
}

CheckerReport is_continuous_qcat(const QCategory& a, const CheckOptions& opts) {
  if (!is_separated(a))
    throw Error(ErrorKind::NotSeparated, "continuity is defined for separated categories");
  const FiniteQuantale& q = *a.q;
  const auto ca = forward_cauchy_weights(a, opts.cap);
  const int nc = static_cast<int>(ca.size());

  CheckerReport report;
  report.method = CheckMethod::both_agree;

  // Every forward-Cauchy weight needs a colimit before either arm makes sense.
  std::vector<int> sups(nc);
  for (int j = 0; j < nc; ++j) {
    const ObjectSearch s = sup_weight(a, ca[j]);
    if (!s.found()) {
      report.verdict = false;
      report.witness = Witness{"forward-Cauchy weight without a colimit", {}};
      return report;
    }
    sups[j] = *s.object;
  }

  // Brute arm: left adjoint to the restricted colimit functor, per object.
  std::vector<std::vector<int>> camat(nc, std::vector<int>(nc));
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j) camat[i][j] = hom_weights(a, ca[i], ca[j]);
  bool brute = true;
  std::optional<Witness> brute_witness;
  for (int x = 0; x < a.size() && brute; ++x) {
    bool found = false;
    for (int i = 0; i < nc && !found; ++i) {
      bool match = true;
      for (int j = 0; j < nc; ++j)
        if (camat[i][j] != a(x, sups[j])) { match = false; break; }
      found = match;
    }
    if (!found) {
      brute = false;
      brute_witness = Witness{"no adjoint image into the forward-Cauchy weights",
                              {{"x", a.objects[x]}}};
    }
  }

  // Criteria arm: A(x, sup psi) = meet over {y way-below x} of psi(y), with
  // way-below computed definitionally from directed subsets and their joins.
  const auto le = underlying_preorder(a);
  const auto dirs = directed_subsets(a, le, opts.cap);
  std::vector<std::pair<std::vector<int>, int>> dirs_with_lub;
  for (const auto& d : dirs)
    if (const auto lub = order_lub(a, le, d)) dirs_with_lub.emplace_back(d, *lub);
  std::vector<std::vector<bool>> wb(a.size(), std::vector<bool>(a.size(), true));
  for (int y = 0; y < a.size(); ++y)
    for (int x = 0; x < a.size(); ++x)
      for (const auto& [d, lub] : dirs_with_lub) {
        if (!le[x][lub]) continue;
        bool dominated = false;
        for (int el : d)
          if (le[y][el]) { dominated = true; break; }
        if (!dominated) { wb[y][x] = false; break; }
      }
  bool crit = true;
  std::optional<Witness> crit_witness;
  for (int x = 0; x < a.size() && crit; ++x)
    for (int j = 0; j < nc && crit; ++j) {
      int rhs = q.top();
      for (int y = 0; y < a.size(); ++y)
        if (wb[y][x]) rhs = q.meet(rhs, ca[j][y]);
      if (a(x, sups[j]) != rhs) {
        crit = false;
        crit_witness = Witness{"way-below equation fails", {{"x", a.objects[x]}}};
      }
    }

  require_agreement(crit, brute, "is_continuous_qcat");
  report.verdict = brute;
  report.witness = brute ? std::nullopt : (brute_witness ? brute_witness : crit_witness);
  return report;
}

NetReport check_net(const QCategory& a, const std::vector<std::vector<bool>>& index_le,
                    const std::vector<int>& net) {
  const int n = static_cast<int>(index_le.size());
  if (n == 0) throw Error(ErrorKind::NotDirected, "directed indices are nonempty by definition");
  for (const auto& row : index_le)
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::ShapeError, "index relation must be square");
  for (int i = 0; i < n; ++i)
    if (!index_le[i][i]) throw Error(ErrorKind::ShapeError, "index relation is not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (index_le[i][j] && index_le[j][k] && !index_le[i][k])
          throw Error(ErrorKind::ShapeError, "index relation is not transitive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool has_ub = false;
      for (int u = 0; u < n; ++u)
        if (index_le[i][u] && index_le[j][u]) { has_ub = true; break; }
      if (!has_ub)
        throw Error(ErrorKind::NotDirected, "index is not directed");
    }
  if (static_cast<int>(net.size()) != n)
    throw Error(ErrorKind::ShapeError, "net must assign one object per index element");
  for (int v : net)
    if (v < 0 || v >= a.size())
      throw Error(ErrorKind::UnknownElement, "net value out of range");

  const FiniteQuantale& q = *a.q;
  NetReport report;
  int cond = q.bottom();
  for (int l = 0; l < n; ++l) {
    int tail = q.top();
    for (int m = 0; m < n; ++m) {
      if (!index_le[l][m]) continue;
      for (int g = 0; g < n; ++g)
        if (index_le[m][g]) tail = q.meet(tail, a(net[m], net[g]));
    }
    cond = q.join(cond, tail);
  }
  report.condition_value = cond;
  report.forward_cauchy = q.le(q.unit(), cond);
  report.weight.assign(a.size(), q.bottom());
  for (int x = 0; x < a.size(); ++x) {
    int acc = q.bottom();
    for (int l = 0; l < n; ++l) {
      int tail = q.top();
      for (int m = 0; m < n; ++m)
        if (index_le[l][m]) tail = q.meet(tail, a(x, net[m]));
      acc = q.join(acc, tail);
    }
    report.weight[x] = acc;
  }
  return report;
}

CheckerReport check_inclusion_left_adjoint(const QCategory& a, const CheckOptions& opts) {
  if (!is_separated(a))
    throw Error(ErrorKind::NotSeparated, "reflection check needs a separated category");
  if (!is_complete(a, opts).verdict)
    throw Error(ErrorKind::NotComplete, "reflection check needs a complete category");
  const auto ca = forward_cauchy_weights(a, opts.cap);
  const int nc = static_cast<int>(ca.size());
  const WeightFamily pa = presheaf_category(a, opts.cap);
  std::vector<std::vector<int>> camat(nc, std::vector<int>(nc));
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j) camat[i][j] = hom_weights(a, ca[i], ca[j]);

  CheckerReport report;
  report.method = CheckMethod::brute_force;
  report.verdict = true;
  for (std::size_t f = 0; f < pa.vectors.size(); ++f) {
    bool found = false;
    std::vector<int> target(nc);
    for (int j = 0; j < nc; ++j) target[j] = hom_weights(a, pa.vectors[f], ca[j]);
    for (int i = 0; i < nc && !found; ++i) {
      bool match = true;
      for (int j = 0; j < nc; ++j)
        if (camat[i][j] != target[j]) { match = false; break; }
      found = match;
    }
    if (!found) {
      report.verdict = false;
      report.witness =
          Witness{"weight without a forward-Cauchy reflection", {{"phi", pa.category.objects[f]}}};
      return report;
    }
  }
  return report;
}

CheckerReport check_cotensor_scott_continuity(const QCategory& a, const CheckOptions& opts) {
  if (!is_complete(a, opts).verdict)
    throw Error(ErrorKind::NotComplete, "cotensor continuity check needs a complete category");
  const FiniteQuantale& q = *a.q;
  const auto le = underlying_preorder(a);

  CheckerReport report;
  report.method = CheckMethod::brute_force;
  report.verdict = true;
  auto fail = [&](std::string what, std::vector<std::pair<std::string, std::string>> detail) {
    report.verdict = false;
    report.witness = Witness{std::move(what), std::move(detail)};
  };

  for (const auto& d : directed_subsets(a, le, opts.cap)) {
    const ObjectSearch join_d = conical_join(a, d);
    if (!join_d.found()) {
      fail("directed set without a conical join", {{"D", set_label(a, d)}});
      return report;
    }
    for (int p = 0; p < q.size(); ++p) {
      const ObjectSearch lhs = cotensor_object(a, p, *join_d.object);
      std::vector<int> images;
      bool all = lhs.found();
      for (int el : d) {
        const ObjectSearch c = cotensor_object(a, p, el);
        if (!c.found()) { all = false; break; }
        images.push_back(*c.object);
      }
      if (!all) {
        fail("missing cotensor", {{"p", q.label(p)}, {"D", set_label(a, d)}});
        return report;
      }
      const ObjectSearch rhs = conical_join(a, images);
      bool same = rhs.found();
      if (same) {
        for (int y = 0; y < a.size() && same; ++y)
          same = a(*lhs.object, y) == a(*rhs.object, y) && a(y, *lhs.object) == a(y, *rhs.object);
      }
      if (!same) {
        fail("cotensor does not commute with a directed join",
             {{"p", q.label(p)}, {"D", set_label(a, d)}});
        return report;
      }
    }
  }
  return report;
}

}  // namespace qdl
