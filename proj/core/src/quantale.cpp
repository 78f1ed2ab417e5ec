#include "qdl/quantale.hpp"

#include <algorithm>
#include <set>

#include "qdl/errors.hpp"

namespace qdl {

namespace {

void check_shape(const QuantaleTables& t) {
  const std::size_t n = t.elements.size();
  if (n == 0) throw Error(ErrorKind::ShapeError, "quantale needs at least one element");
  std::set<std::string> seen(t.elements.begin(), t.elements.end());
  if (seen.size() != n) throw Error(ErrorKind::ShapeError, "duplicate element labels");
  if (t.le.size() != n || t.tensor.size() != n)
    throw Error(ErrorKind::ShapeError, "le/tensor must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (t.le[i].size() != n || t.tensor[i].size() != n)
      throw Error(ErrorKind::ShapeError, "ragged le/tensor row " + std::to_string(i));
    for (int v : t.tensor[i])
      if (v < 0 || v >= static_cast<int>(n))
        throw Error(ErrorKind::ShapeError, "tensor entry out of range in row " + std::to_string(i));
  }
  if (t.unit < 0 || t.unit >= static_cast<int>(n))
    throw Error(ErrorKind::ShapeError, "unit index out of range");
}

// Least element of `candidates` under le, if one exists (unique lower bound
// of the whole candidate set inside it).
std::optional<int> least_of(const QuantaleTables& t, const std::vector<int>& candidates) {
  for (int c : candidates) {
    bool below_all = true;
    for (int d : candidates)
      if (!t.le[c][d]) { below_all = false; break; }
    if (below_all) return c;
  }
  return std::nullopt;
}

std::optional<int> greatest_of(const QuantaleTables& t, const std::vector<int>& candidates) {
  for (int c : candidates) {
    bool above_all = true;
    for (int d : candidates)
      if (!t.le[d][c]) { above_all = false; break; }
    if (above_all) return c;
  }
  return std::nullopt;
}

std::optional<int> binary_join(const QuantaleTables& t, int a, int b) {
  const int n = static_cast<int>(t.elements.size());
  std::vector<int> uppers;
  for (int u = 0; u < n; ++u)
    if (t.le[a][u] && t.le[b][u]) uppers.push_back(u);
  return least_of(t, uppers);
}

std::optional<int> binary_meet(const QuantaleTables& t, int a, int b) {
  const int n = static_cast<int>(t.elements.size());
  std::vector<int> lowers;
  for (int l = 0; l < n; ++l)
    if (t.le[l][a] && t.le[l][b]) lowers.push_back(l);
  return greatest_of(t, lowers);
}

}  // namespace

std::vector<AxiomViolation> validate_quantale(const QuantaleTables& t) {
  check_shape(t);
  const int n = static_cast<int>(t.elements.size());
  std::vector<AxiomViolation> out;
  auto lbl = [&](int i) { return t.elements[i]; };

  for (int a = 0; a < n; ++a)
    if (!t.le[a][a]) out.push_back({"order reflexive", {lbl(a)}});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && t.le[a][b] && t.le[b][a])
        out.push_back({"order antisymmetric", {lbl(a), lbl(b)}});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.le[a][b] && t.le[b][c] && !t.le[a][c])
          out.push_back({"order transitive", {lbl(a), lbl(b), lbl(c)}});
  if (!out.empty()) return out;  // lattice scans below assume a partial order

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  if (!least_of(t, all)) out.push_back({"bottom exists", {}});
  if (!greatest_of(t, all)) out.push_back({"top exists", {}});
  std::vector<std::vector<std::optional<int>>> joins(n, std::vector<std::optional<int>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      joins[a][b] = binary_join(t, a, b);
      if (!joins[a][b]) out.push_back({"binary join exists", {lbl(a), lbl(b)}});
      if (!binary_meet(t, a, b)) out.push_back({"binary meet exists", {lbl(a), lbl(b)}});
    }
  if (!out.empty()) return out;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t.tensor[a][b] != t.tensor[b][a])
        out.push_back({"tensor commutative", {lbl(a), lbl(b)}});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.tensor[t.tensor[a][b]][c] != t.tensor[a][t.tensor[b][c]])
          out.push_back({"tensor associative", {lbl(a), lbl(b), lbl(c)}});
  for (int a = 0; a < n; ++a)
    if (t.tensor[t.unit][a] != a)
      out.push_back({"unit law", {lbl(a)}});

  // Distributivity over all joins: in a finite lattice it is enough that
  // p & (a v b) = (p & a) v (p & b) and p & bottom = bottom.
  const int bot = *least_of(t, all);
  for (int p = 0; p < n; ++p) {
    if (t.tensor[p][bot] != bot)
      out.push_back({"tensor distributes over empty join", {lbl(p)}});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int lhs = t.tensor[p][*joins[a][b]];
        const auto rhs = binary_join(t, t.tensor[p][a], t.tensor[p][b]);
        if (!rhs || lhs != *rhs)
          out.push_back({"tensor distributes over binary join", {lbl(p), lbl(a), lbl(b)}});
      }
  }
  return out;
}

FiniteQuantale::FiniteQuantale(QuantaleTables tables) : tables_(std::move(tables)) {
  const int n = size();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  bottom_ = *least_of(tables_, all);
  top_ = *greatest_of(tables_, all);
  join_.assign(n, std::vector<int>(n));
  meet_.assign(n, std::vector<int>(n));
  residuum_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      join_[a][b] = *binary_join(tables_, a, b);
      meet_[a][b] = *binary_meet(tables_, a, b);
    }
  // p -> r = join of {z : p & z <= r}; exact because & distributes over joins.
  for (int p = 0; p < n; ++p)
    for (int r = 0; r < n; ++r) {
      int acc = bottom_;
      for (int z = 0; z < n; ++z)
        if (tables_.le[tables_.tensor[p][z]][r]) acc = join_[acc][z];
      residuum_[p][r] = acc;
    }
}

std::shared_ptr<const FiniteQuantale> FiniteQuantale::make(QuantaleTables tables) {
  auto violations = validate_quantale(tables);
  if (!violations.empty()) {
    std::string msg = "quantale axioms fail: " + violations.front().axiom;
    if (!violations.front().witness.empty()) {
      msg += " at (";
      for (std::size_t i = 0; i < violations.front().witness.size(); ++i)
        msg += (i ? ", " : "") + violations.front().witness[i];
      msg += ")";
    }
    msg += " [" + std::to_string(violations.size()) + " violation(s) total]";
    throw Error(ErrorKind::ShapeError, msg);
  }
  return std::shared_ptr<const FiniteQuantale>(new FiniteQuantale(std::move(tables)));
}

int FiniteQuantale::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (tables_.elements[i] == label) return i;
  throw Error(ErrorKind::UnknownElement, "no element '" + label + "'");
}

int FiniteQuantale::join_of(const std::vector<int>& xs) const {
  int acc = bottom_;
  for (int x : xs) acc = join_[acc][x];
  return acc;
}

int FiniteQuantale::meet_of(const std::vector<int>& xs) const {
  int acc = top_;
  for (int x : xs) acc = meet_[acc][x];
  return acc;
}

namespace {

std::shared_ptr<const FiniteQuantale> chain_from_values(const std::vector<Rat>& values,
                                                        const OrdinalSumTNorm& t) {
  QuantaleTables tables;
  const int n = static_cast<int>(values.size());
  for (const Rat& v : values) tables.elements.push_back(to_string(v));
  tables.le.assign(n, std::vector<bool>(n));
  tables.tensor.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      tables.le[i][j] = values[i] <= values[j];
      const Rat prod = eval(t, values[i], values[j]);
      const auto it = std::lower_bound(values.begin(), values.end(), prod);
      if (it == values.end() || *it != prod)
        throw Error(ErrorKind::ShapeError,
                    "value set not closed under the t-norm: missing " + to_string(prod));
      tables.tensor[i][j] = static_cast<int>(it - values.begin());
    }
  tables.unit = n - 1;
  return FiniteQuantale::make(std::move(tables));
}

}  // namespace

std::shared_ptr<const FiniteQuantale> FiniteQuantale::standard_boolean() {
  return standard_godel_chain(2);
}

std::shared_ptr<const FiniteQuantale> FiniteQuantale::standard_godel_chain(int n) {
  if (n < 2) throw Error(ErrorKind::ShapeError, "chain needs at least 2 elements");
  std::vector<Rat> values;
  for (int i = 0; i < n; ++i) values.push_back(Rat(i, n - 1));
  return chain_from_values(values, OrdinalSumTNorm{});  // empty sum = min
}

std::shared_ptr<const FiniteQuantale> FiniteQuantale::standard_lukasiewicz_chain(int n) {
  if (n < 2) throw Error(ErrorKind::ShapeError, "chain needs at least 2 elements");
  std::vector<Rat> values;
  for (int i = 0; i < n; ++i) values.push_back(Rat(i, n - 1));
  return chain_from_values(values,
                           OrdinalSumTNorm{{{Rat(0), Rat(1), ComponentKind::lukasiewicz}}});
}

std::shared_ptr<const FiniteQuantale> FiniteQuantale::from_tnorm(const OrdinalSumTNorm& t,
                                                                 std::vector<Rat> points,
                                                                 std::size_t element_cap) {
  std::set<Rat> closure;
  for (const Rat& p : points) {
    require_unit_interval(p, "seed point");
    closure.insert(p);
  }
  if (!closure.count(Rat(0)) || !closure.count(Rat(1)))
    throw Error(ErrorKind::ShapeError, "seed points must include 0 and 1");
  // Close under the t-norm to a fixpoint (the residuum then restricts for
  // free: joins of a subchain are computed in the subchain).
  std::vector<Rat> worklist(closure.begin(), closure.end());
  while (!worklist.empty()) {
    const Rat a = worklist.back();
    worklist.pop_back();
    for (const Rat& b : std::vector<Rat>(closure.begin(), closure.end())) {
      const Rat prod = eval(t, a, b);
      if (closure.insert(prod).second) {
        if (closure.size() > element_cap)
          throw Error(ErrorKind::ClosureOverflow,
                      "t-norm closure exceeds cap of " + std::to_string(element_cap));
        worklist.push_back(prod);
      }
    }
  }
  return chain_from_values(std::vector<Rat>(closure.begin(), closure.end()), t);
}

}  // namespace qdl
