#pragma once

#include <span>
#include <string>
#include <vector>

#include "wqo/barrier.hpp"
#include "wqo/cnf.hpp"
#include "wqo/higman.hpp"

namespace wqo {

/// A finite window f(0) > f(1) > ... > f(N-1) of a strictly descending map
/// ℕ -> ω^X_n, where X has the form ω+Y.
class DescendingSequence {
 public:
  /// Throws NotOmegaPlusForm, InvalidTerm, or NotDescending (naming the first
  /// index i with values[i] not above values[i+1]).
  DescendingSequence(OrderSpec spec, unsigned height, std::vector<Term> values);

  /// Accepts terms over any order Z. When Z lacks the ω+Y form the terms are
  /// lifted along z -> (1,z) into ω+Z.
  static DescendingSequence over_canonical_host(const OrderSpec& spec, unsigned height,
                                                std::vector<Term> values);

  const OrderSpec& spec() const { return spec_; }
  unsigned height() const { return height_; }
  std::span<const Term> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  OrderSpec spec_;
  unsigned height_;
  std::vector<Term> values_;
};

using LevelValue = ProductElem<Term>;

/// f_k tabulated on the window: nodes of length k+1 with entries < window,
/// mapped to k coordinates and a term of height n-k.
struct LevelTable {
  OrderSpec spec;
  std::size_t level;
  unsigned term_height;
  WindowTable<LevelValue> values;

  Natural window() const { return values.window(); }
  const LevelValue& at(const Node& node) const;
};

/// f_0(⟨i⟩) = (⟨⟩, f(i)).
LevelTable build_level0(const DescendingSequence& ds);
/// Same packaging without the descent check; used to probe arbitrary inputs.
LevelTable build_level0(const OrderSpec& spec, unsigned height, std::span<const Term> values);

/// f_{k+1}(s∪t) = (f⁰_k(s) ⌢ j(f¹_k(s), f¹_k(t)), c(f¹_k(s), f¹_k(t))).
/// Throws HeightExhausted when the previous level already has height-0 terms.
LevelTable build_next_level(const LevelTable& prev);

/// Levels 0..height of the transform.
std::vector<LevelTable> build_all_levels(const DescendingSequence& ds);
std::vector<LevelTable> build_all_levels(const OrderSpec& spec, unsigned height,
                                         std::span<const Term> values);

/// Product order of ℕ^k × ω^X_{n-k}: coordinates componentwise, term by ⪯.
bool product_leq(const LevelValue& a, const LevelValue& b);

GoodnessVerdict level_goodness(const LevelTable& table, unsigned jobs = 1);

/// The consequences drawn from f_{k+1}(r∪s) <= f_{k+1}(s∪t) when showing that
/// badness propagates upward.
struct ProofStepEcho {
  bool premise = false;        // f_{k+1}(r∪s) <= f_{k+1}(s∪t)
  bool coords_leq = false;     // f⁰_k(r) <= f⁰_k(s) componentwise
  bool j_leq = false;          // j(f¹_k(r), f¹_k(s)) <= j(f¹_k(s), f¹_k(t))
  bool c_leq = false;          // c(f¹_k(r), f¹_k(s)) ⪯ c(f¹_k(s), f¹_k(t))
  bool projects_good = false;  // f_k(r) <= f_k(s), i.e. (r, s) is good for f_k

  bool holds() const { return premise && coords_leq && j_leq && c_leq && projects_good; }
};

/// Evaluates the echo for a good pair lo ◁ hi of `next` (lo = r∪s, hi = s∪t).
ProofStepEcho echo_proof_step(const LevelTable& prev, const LevelTable& next, const Node& lo,
                              const Node& hi);

struct LevelVerdict {
  std::size_t level = 0;
  GoodnessVerdict verdict;
  double build_seconds = 0;
  double scan_seconds = 0;
};

/// Result of one pipeline run. Verdicts are relative to the window.
struct WitnessReport {
  OrderSpec spec;
  unsigned height = 0;
  Natural window = 0;
  std::string source;
  std::vector<LevelVerdict> levels;
  /// Levels k with f_k bad on the window but f_{k+1} good.
  std::vector<std::size_t> proposition_violations;
  /// Levels k+1 whose witness fails echo_proof_step against level k.
  std::vector<std::size_t> echo_failures;

  bool proposition_holds() const {
    return proposition_violations.empty() && echo_failures.empty();
  }
};

struct PipelineOptions {
  unsigned jobs = 1;
  std::string source = "sequence";
};

/// Throws WindowTooLarge if the level tables for `window` values at this
/// height would exceed WindowIndex::kMaxNodes.
void require_window_fits(unsigned height, Natural window);

/// Builds every level, scans each for goodness, and checks that badness
/// propagates from each level to the next. Throws WindowTooSmall unless the
/// window holds at least height+2 values.
WitnessReport run_pipeline(const DescendingSequence& ds, const PipelineOptions& options = {});

/// Descent generated by repeatedly stepping `start`: at height 0 an ω-part
/// leaf n steps to n-1; above, a trailing zero child is dropped and any other
/// trailing child is replaced by `fuel` copies of its step. Returns at most
/// `steps` terms, fewer if the least term is reached.
DescendingSequence canonical_descent(const OrderSpec& spec, unsigned height, const Term& start,
                                     std::size_t fuel, std::size_t steps);

/// One application of the step rule.
Term descent_step(const OrderSpec& spec, const Term& t, std::size_t fuel);

}  // namespace wqo
