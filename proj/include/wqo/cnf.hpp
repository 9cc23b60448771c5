#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wqo/base_order.hpp"

namespace wqo {

/// Element of the tower ω^X_n: a balanced, leaf-labelled tree of height n.
///
/// Height 0 is a leaf carrying a BaseElem; height n > 0 is a finite sequence
/// of height-(n-1) children. Terms are immutable and share subtrees, so
/// copies are cheap. Construction enforces balance only; the ordering of
/// children and the validity of leaves are checked by validate_term.
class Term {
 public:

  static Term leaf(BaseElem e);
  /// Throws HeightMismatch if a child does not have height `height - 1`.
  static Term node(unsigned height, std::vector<Term> children);

  unsigned height() const { return rep_->height; }
  bool is_leaf() const { return rep_->height == 0; }

  /// Precondition: is_leaf().
  BaseElem elem() const { return rep_->elem; }

  std::span<const Term> children() const { return rep_->children; }
  std::size_t length() const { return rep_->children.size(); }
  const Term& operator[](std::size_t i) const { return rep_->children[i]; }

  /// Structural equality (agrees with lex_compare == EQ).
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Rep {
    unsigned height = 0;
    BaseElem elem{};
    std::vector<Term> children;
  };
  Term(unsigned height, std::vector<Term> children);
  explicit Term(BaseElem e);

  std::shared_ptr<const Rep> rep_;
};

/// First offending position found by validate_term.
struct TermViolation {
  /// Child indices from the root to the offending position.
  std::vector<std::size_t> path;
  std::string reason;

  std::string describe() const;
};

/// Checks balance, that every leaf belongs to `spec`, and that every child
/// sequence is non-increasing. Returns the first violation in preorder.
std::optional<TermViolation> validate_term(const OrderSpec& spec, const Term& t);

/// Throws InvalidTerm carrying the violation description.
void require_valid_term(const OrderSpec& spec, const Term& t);

/// Least term of height `height`: ⟨⟩ for height >= 1, the zero of X for 0.
Term zero_term(const OrderSpec& spec, unsigned height);

/// min({ j < min(l(a), l(b)) | a_j != b_j } ∪ { min(l(a), l(b)) }).
std::size_t j_index(const Term& a, const Term& b);

/// Lexicographic order on terms of equal height (compare_base on leaves).
std::strong_ordering lex_compare(const Term& a, const Term& b);

/// 1+t on ω^X_height: successor on the initial segment ⟨0,...,0⟩, identity
/// elsewhere. Height 0 delegates to one_plus and needs ω+Y form.
Term one_plus_term(const OrderSpec& spec, const Term& t);

/// 1+a_j if j < l(a), otherwise the zero of the child level.
Term bar_entry(const OrderSpec& spec, const Term& a, std::size_t j);

/// bar_entry(a, j_index(a, b)). Height drops by one.
Term c_value(const OrderSpec& spec, const Term& a, const Term& b);

/// Replaces every leaf z by e(z).
Term lift_embedding(const BaseEmbedding& e, const Term& t);

}  // namespace wqo
