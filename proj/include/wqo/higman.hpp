#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "wqo/barrier.hpp"
#include "wqo/base_order.hpp"
#include "wqo/cnf.hpp"

namespace wqo {

/// Element of ℕ^k × Q: k natural coordinates and a tail value.
template <class Tail>
struct ProductElem {
  std::vector<Natural> coords;
  Tail tail;
};

/// Finite quasi order on {0, ..., size-1} given by its relation matrix.
class FiniteQuasiOrder {
 public:
  /// Throws InvalidQuasiOrder unless `leq` is square, reflexive and transitive.
  FiniteQuasiOrder(std::size_t size, std::vector<std::vector<bool>> leq);

  /// Reflexive-transitive closure of the listed pairs (a, b) meaning a <= b.
  static FiniteQuasiOrder from_pairs(std::size_t size,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return size_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size_ + b]; }

 private:
  std::size_t size_;
  std::vector<bool> leq_;
};

/// Grammar of quasi orders used as codomains of arrays and sequence entries.
class QuasiOrder {
 public:
  enum class Kind { Base, TermOrder, Product, SeqOver, Finite };

  static QuasiOrder base(const OrderSpec& spec);
  static QuasiOrder term_order(const OrderSpec& spec, unsigned height);
  static QuasiOrder product(std::size_t arity, QuasiOrder tail);
  static QuasiOrder seq_over(QuasiOrder tail);
  static QuasiOrder finite(FiniteQuasiOrder order);

  Kind kind() const { return kind_; }
  const OrderSpec& spec() const { return spec_; }
  unsigned height() const { return height_; }
  std::size_t arity() const { return arity_; }
  const QuasiOrder& tail() const { return *tail_; }
  const FiniteQuasiOrder& finite_order() const { return *finite_; }

 private:
  QuasiOrder() = default;

  Kind kind_ = Kind::Base;
  OrderSpec spec_;
  unsigned height_ = 0;
  std::size_t arity_ = 0;
  std::shared_ptr<const QuasiOrder> tail_;
  std::shared_ptr<const FiniteQuasiOrder> finite_;
};

/// Dynamically typed element of a QuasiOrder.
struct QValue {
  struct FiniteIndex {
    std::size_t index;
  };
  using ProductPtr = std::shared_ptr<const ProductElem<QValue>>;
  using SeqPtr = std::shared_ptr<const std::vector<QValue>>;

  std::variant<BaseElem, Term, ProductPtr, SeqPtr, FiniteIndex> value;

  static QValue base(BaseElem e) { return QValue{e}; }
  static QValue term(Term t) { return QValue{std::move(t)}; }
  static QValue product(std::vector<Natural> coords, QValue tail);
  static QValue seq(std::vector<QValue> entries);
  static QValue finite(std::size_t index) { return QValue{FiniteIndex{index}}; }
};

/// Throws InvalidElement or ArityMismatch if `v` is not an element of `q`.
void require_qo_elem(const QuasiOrder& q, const QValue& v);

bool qo_leq(const QuasiOrder& q, const QValue& a, const QValue& b);

/// Higman's embedding: some strictly increasing f with s_i <= t_{f(i)}.
/// Greedy: each s_i is matched to the earliest remaining position of t.
bool higman_leq(const QuasiOrder& q, const std::vector<QValue>& s,
                const std::vector<QValue>& t);

/// Outcome of a window-bounded goodness scan. An empty witness means no ◁-pair
/// with entries below the window witnesses goodness; it says nothing beyond
/// the window.
struct GoodnessVerdict {
  std::optional<std::pair<Node, Node>> witness;

  bool good() const { return witness.has_value(); }
  bool bad_on_window() const { return !witness; }
};

/// Scans all ◁-pairs (s, t) of [ℕ]^k inside `index`'s window in (t, s)
/// lexicographic order and returns the ranks of the first pair with
/// leq(s_rank, t_rank). The t-range is split across `jobs` threads; the
/// answer does not depend on `jobs`.
template <class Leq>
std::optional<std::pair<std::size_t, std::size_t>> scan_triangle_pairs(const WindowIndex& index,
                                                                      Leq&& leq,
                                                                      unsigned jobs = 1) {
  const std::size_t total = index.size();
  const std::size_t m = index.length();
  const Natural window = index.window();
  if (total == 0) return std::nullopt;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(total)));

  using Hit = std::optional<std::pair<std::size_t, std::size_t>>;
  std::vector<Hit> hits(jobs);
  std::atomic<std::size_t> first_hit_chunk{jobs};

  auto run_chunk = [&](unsigned chunk) {
    const std::size_t begin = total * chunk / jobs;
    const std::size_t end = total * (chunk + 1) / jobs;
    if (begin == end) return;
    std::vector<Natural> t = index.unrank(begin);
    for (std::size_t t_rank = begin; t_rank < end; ++t_rank) {
      if (first_hit_chunk.load(std::memory_order_relaxed) < chunk) return;
      // rank(s) = C(N,m) - 1 - C(N-1-s0, m) - Σ_{i>=1} C(N-1-t_{i-1}, m-i)
      std::uint64_t shared = 0;
      for (std::size_t i = 1; i < m; ++i) shared += index.choose(window - 1 - t[i - 1], m - i);
      for (Natural s0 = 0; s0 < t[0]; ++s0) {
        const std::size_t s_rank = total - 1 - index.choose(window - 1 - s0, m) - shared;
        if (leq(s_rank, t_rank)) {
          hits[chunk] = std::make_pair(s_rank, t_rank);
          std::size_t prev = first_hit_chunk.load();
          while (chunk < prev && !first_hit_chunk.compare_exchange_weak(prev, chunk)) {
          }
          return;
        }
      }
      if (t_rank + 1 < end) index.next(t);
    }
  };

  if (jobs == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned c = 0; c < jobs; ++c) workers.emplace_back(run_chunk, c);
  }
  for (const Hit& h : hits) {
    if (h) return h;
  }
  return std::nullopt;
}

/// Goodness of `arr` restricted to nodes with entries < window. Throws
/// MissingValue if `arr` has no value at some node of that window.
GoodnessVerdict goodness_on_window(const QuasiOrder& q, const WindowTable<QValue>& arr,
                                   Natural window, unsigned jobs = 1);

}  // namespace wqo
