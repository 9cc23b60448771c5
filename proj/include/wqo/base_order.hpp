#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wqo/error.hpp"

namespace wqo {

using Natural = std::uint64_t;

std::string_view ordering_name(std::strong_ordering ord);

/// A constructible linear order: `Finite(k)`, `Omega`, or `OmegaPlus(tail)`.
///
/// Stored flattened as a tower of `OmegaPlus` wrappers over a bottom order
/// that is either `Finite(k)` or `Omega`. `Omega` and `OmegaPlus(Finite(0))`
/// are distinct values with identical carriers; `normalized()` maps the
/// second onto the first.
class OrderSpec {
 public:
  static OrderSpec finite(Natural size);
  static OrderSpec omega();
  static OrderSpec omega_plus(const OrderSpec& tail);

  bool is_finite() const { return tower_ == 0 && !bottom_omega_; }
  bool is_omega() const { return tower_ == 0 && bottom_omega_; }
  bool is_omega_plus() const { return tower_ > 0; }

  /// True for `Omega` and `OmegaPlus(_)`: the order has a least element 0
  /// and the strictly increasing map x -> 1+x.
  bool has_omega_plus_form() const { return tower_ > 0 || bottom_omega_; }

  /// Number of `OmegaPlus` wrappers around the bottom order.
  unsigned tower() const { return tower_; }
  bool bottom_is_omega() const { return bottom_omega_; }
  Natural finite_size() const { return finite_size_; }

  /// Tail order Y of `OmegaPlus(Y)`. Precondition: is_omega_plus().
  OrderSpec tail() const;

  OrderSpec normalized() const;

  bool empty() const { return tower_ == 0 && !bottom_omega_ && finite_size_ == 0; }

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

 private:
  unsigned tower_ = 0;
  bool bottom_omega_ = true;
  Natural finite_size_ = 0;
};

/// Element of an `OrderSpec`.
///
/// `depth` counts the right injections `(1, _)` taken down the `OmegaPlus`
/// tower; `value` is the natural at the place where the path stops, i.e. the
/// `n` of a left pair `(0, n)` or an element of the bottom order. Under this
/// encoding the order of every spec is lexicographic on (depth, value).
struct BaseElem {
  unsigned depth = 0;
  Natural value = 0;

  static constexpr BaseElem left(Natural n) { return BaseElem{0, n}; }
  static constexpr BaseElem right(BaseElem inner) {
    return BaseElem{inner.depth + 1, inner.value};
  }

  friend constexpr auto operator<=>(const BaseElem&, const BaseElem&) = default;
};

bool is_valid_elem(const OrderSpec& spec, BaseElem e);
void require_valid_elem(const OrderSpec& spec, BaseElem e);

std::strong_ordering compare_base(const OrderSpec& spec, BaseElem a, BaseElem b);

/// Least element `(0,0)` of an order of the form ω+Y.
BaseElem zero_elem(const OrderSpec& spec);

/// Least element of any non-empty order (also defined for `Finite(k>0)`).
std::optional<BaseElem> least_elem(const OrderSpec& spec);

/// 1+(0,n) = (0,1+n) and 1+(1,y) = (1,y).
BaseElem one_plus(const OrderSpec& spec, BaseElem x);

// ---------------------------------------------------------------------------
// Embeddings between base orders.

/// Explicit images for the elements 0..k-1 of a `Finite(k)` source.
struct TableMapping {
  std::vector<BaseElem> targets;
};
/// Same encoded element on both sides (e.g. ω into ω+Y via n -> (0,n)).
struct InclusionRule {};
/// z -> (1,z), the canonical embedding of Z into ω+Z.
struct TailRule {};

using BaseMapping = std::variant<TableMapping, InclusionRule, TailRule>;

class NotMonotoneError : public Error {
 public:
  NotMonotoneError(const std::string& message, BaseElem lo, BaseElem hi)
      : Error(ErrorKind::NotMonotone, message), pair_(lo, hi) {}
  /// Source elements lo < hi whose images are not strictly ordered.
  std::pair<BaseElem, BaseElem> pair() const { return pair_; }

 private:
  std::pair<BaseElem, BaseElem> pair_;
};

/// A validated order embedding `from -> into`.
class BaseEmbedding {
 public:
  const OrderSpec& from() const { return from_; }
  const OrderSpec& into() const { return into_; }
  const BaseMapping& mapping() const { return mapping_; }

  BaseElem operator()(BaseElem z) const;

 private:
  friend BaseEmbedding embed_base(const OrderSpec&, const OrderSpec&, BaseMapping,
                                  Natural);
  BaseEmbedding(OrderSpec from, OrderSpec into, BaseMapping mapping)
      : from_(from), into_(into), mapping_(std::move(mapping)) {}

  OrderSpec from_;
  OrderSpec into_;
  BaseMapping mapping_;
};

/// Validates `mapping` and returns the embedding handle.
///
/// Tables over a finite source are checked on every pair. Rules over an
/// infinite source are checked on a sample: at each tower depth, the values
/// below `sample_bound`. Throws NotMonotoneError with the first offending
/// pair, or InvalidElement if an image falls outside `into`.
BaseEmbedding embed_base(const OrderSpec& from, const OrderSpec& into, BaseMapping mapping,
                         Natural sample_bound = 64);

}  // namespace wqo
