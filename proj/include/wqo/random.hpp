#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wqo/base_order.hpp"
#include "wqo/cnf.hpp"

namespace wqo {

/// Seeded generator of orders' elements and terms. Draws use the raw
/// mt19937_64 output so a seed reproduces the same values on every platform.
class TermGenerator {
 public:
  explicit TermGenerator(std::uint64_t seed, Natural leaf_bound = 6)
      : engine_(seed), leaf_bound_(leaf_bound) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  /// Uniform tower depth, then a value below leaf_bound (or the finite size).
  BaseElem elem(const OrderSpec& spec);

  /// Child counts are geometric with mean 3 capped at 8; children are drawn
  /// recursively and sorted non-increasing.
  Term term(const OrderSpec& spec, unsigned height);

  /// Up to `count` distinct terms in strictly descending order. Fewer are
  /// returned when the order runs out of distinct values within the attempt
  /// budget.
  std::vector<Term> descending(const OrderSpec& spec, unsigned height, std::size_t count);

 private:
  std::mt19937_64 engine_;
  Natural leaf_bound_;
};

}  // namespace wqo
