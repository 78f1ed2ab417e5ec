#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qdl/rational.hpp"
#include "qdl/tnorm.hpp"

namespace qdl {

/// Raw tables of a finite quantale candidate, prior to validation.
struct QuantaleTables {
  std::vector<std::string> elements;        // distinct labels
  std::vector<std::vector<bool>> le;        // le[i][j] iff element i <= element j
  std::vector<std::vector<int>> tensor;     // tensor[i][j] = index of i & j
  int unit = -1;                            // index of the monoid unit k
};

/// One broken axiom with the witnessing elements (by label).
struct AxiomViolation {
  std::string axiom;
  std::vector<std::string> witness;
};

/** Checks the complete-lattice, commutative-monoid and join-distributivity
 * axioms on raw tables. In a finite lattice it suffices that a bottom and a
 * top exist, every pair has a join and a meet, and the tensor distributes
 * over binary joins and the bottom. Returns all violations (empty == valid).
 * Throws Error{ShapeError} on ragged or out-of-range tables.
 */
std::vector<AxiomViolation> validate_quantale(const QuantaleTables& tables);

/** A validated finite commutative quantale: a finite complete lattice with a
 * commutative monoid structure & whose multiplication distributes over all
 * joins. Join, meet and the residuum p -> r = max{z : p & z <= r} are
 * precomputed on construction.
 */
class FiniteQuantale {
 public:
  /// Validates; throws Error{ShapeError} carrying the first violation.
  static std::shared_ptr<const FiniteQuantale> make(QuantaleTables tables);

  /// {0, 1/(n-1), ..., 1} with min / truncated addition; `boolean` is the 2-chain.
  static std::shared_ptr<const FiniteQuantale> standard_boolean();
  static std::shared_ptr<const FiniteQuantale> standard_godel_chain(int n);
  static std::shared_ptr<const FiniteQuantale> standard_lukasiewicz_chain(int n);

  /** Closes `points` (which must contain 0 and 1) under the t-norm and
   * restricts it to the closure, a finite subchain quantale of the unit
   * interval. Throws Error{ClosureOverflow} when the closure exceeds
   * `element_cap` elements, Error{ShapeError} if 0 or 1 is missing.
   */
  static std::shared_ptr<const FiniteQuantale> from_tnorm(const OrdinalSumTNorm& t,
                                                          std::vector<Rat> points,
                                                          std::size_t element_cap = 64);

  int size() const { return static_cast<int>(tables_.elements.size()); }
  const std::string& label(int i) const { return tables_.elements[i]; }
  const std::vector<std::string>& labels() const { return tables_.elements; }
  /// Index of a label; throws Error{UnknownElement}.
  int index_of(const std::string& label) const;
  const QuantaleTables& tables() const { return tables_; }

  bool le(int a, int b) const { return tables_.le[a][b]; }
  int tensor(int a, int b) const { return tables_.tensor[a][b]; }
  int unit() const { return tables_.unit; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int join(int a, int b) const { return join_[a][b]; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int residuum(int a, int b) const { return residuum_[a][b]; }

  /// Join/meet of an arbitrary index set; empty join = bottom, empty meet = top.
  int join_of(const std::vector<int>& xs) const;
  int meet_of(const std::vector<int>& xs) const;

  /// Integral means the monoid unit is the top of the lattice.
  bool is_integral() const { return tables_.unit == top_; }

 private:
  explicit FiniteQuantale(QuantaleTables tables);

  QuantaleTables tables_;
  int bottom_ = -1;
  int top_ = -1;
  std::vector<std::vector<int>> join_;
  std::vector<std::vector<int>> meet_;
  std::vector<std::vector<int>> residuum_;
};

using QuantalePtr = std::shared_ptr<const FiniteQuantale>;

}  // namespace qdl
