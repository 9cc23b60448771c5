#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wqo/base_order.hpp"

namespace wqo {

/// Element of the barrier [ℕ]^k: a strictly increasing tuple of length k >= 1.
class Node {
 public:
  /// Throws InvalidNode unless `entries` is non-empty and strictly increasing.
  explicit Node(std::vector<Natural> entries);
  Node(std::initializer_list<Natural> entries) : Node(std::vector<Natural>(entries)) {}

  std::size_t length() const { return entries_.size(); }
  std::span<const Natural> entries() const { return entries_; }
  Natural operator[](std::size_t i) const { return entries_[i]; }
  Natural front() const { return entries_.front(); }
  Natural back() const { return entries_.back(); }

  friend auto operator<=>(const Node&, const Node&) = default;

 private:
  std::vector<Natural> entries_;
};

/// s ◁ t: s_0 < t_0 and s_{i+1} = t_i for all i < k-1.
bool triangle(const Node& s, const Node& t);

/// s ∪ t for s ◁ t: s followed by the last entry of t.
Node node_union(const Node& s, const Node& t);

/// The unique (s, t) with s ◁ t and s ∪ t = u.
std::pair<Node, Node> split(const Node& u);

/// C(n, k), saturating at the maximum of std::uint64_t.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Lexicographic ranking of the nodes of [ℕ]^k with entries < window.
class WindowIndex {
 public:
  /// Windows with more nodes than this are rejected with WindowTooLarge.
  static constexpr std::uint64_t kMaxNodes = std::uint64_t{1} << 28;

  WindowIndex(std::size_t length, Natural window);

  std::size_t length() const { return length_; }
  Natural window() const { return window_; }
  std::size_t size() const { return size_; }

  /// Position of `entries` in the lexicographic enumeration. Precondition:
  /// strictly increasing, of this length, entries < window.
  std::size_t rank(std::span<const Natural> entries) const;
  std::vector<Natural> unrank(std::size_t rank) const;

  bool contains(const Node& n) const {
    return n.length() == length_ && n.back() < window_;
  }

  /// Advances `entries` to its lexicographic successor; false at the end.
  bool next(std::span<Natural> entries) const;

  /// C(n, k) from the precomputed table. Precondition: n <= window, k <= length.
  std::uint64_t choose(Natural n, std::size_t k) const;

 private:
  std::size_t length_;
  Natural window_;
  std::size_t size_;
  // binom_[n * (length_ + 1) + k] = C(n, k) for n <= window, k <= length.
  std::vector<std::uint64_t> binom_;
};

/// All strictly increasing k-tuples with entries < window, in lexicographic
/// order. There are C(window, k) of them.
std::vector<Node> enumerate_window(std::size_t k, Natural window);

/// Every ◁-pair of [ℕ]^k with entries < window, ordered by (t, s).
std::vector<std::pair<Node, Node>> enumerate_pairs(std::size_t k, Natural window);

/// A map from the window of [ℕ]^k to values, stored densely by lexicographic
/// rank. Entries may be absent until filled.
template <class V>
class WindowTable {
 public:
  WindowTable(std::size_t length, Natural window)
      : index_(length, window), values_(index_.size()) {}

  const WindowIndex& index() const { return index_; }
  std::size_t length() const { return index_.length(); }
  Natural window() const { return index_.window(); }
  std::size_t size() const { return values_.size(); }

  void set(const Node& n, V value) { values_[checked_rank(n)] = std::move(value); }
  void set_at(std::size_t rank, V value) { values_[rank] = std::move(value); }

  const std::optional<V>& find(const Node& n) const { return values_[checked_rank(n)]; }
  const std::optional<V>& at_rank(std::size_t rank) const { return values_[rank]; }

  /// Throws MissingValue naming the first node without a value.
  void require_total() const {
    for (std::size_t r = 0; r < values_.size(); ++r) {
      if (!values_[r]) {
        throw Error(ErrorKind::MissingValue, "array has no value at node " +
                                                 describe_node(index_.unrank(r)));
      }
    }
  }

 private:
  static std::string describe_node(const std::vector<Natural>& entries) {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries[i]);
    }
    return out;
  }

  std::size_t checked_rank(const Node& n) const {
    if (!index_.contains(n)) {
      throw Error(ErrorKind::InvalidNode, "node " + describe_node({n.entries().begin(),
                                                                   n.entries().end()}) +
                                              " lies outside the table window");
    }
    return index_.rank(n.entries());
  }

  WindowIndex index_;
  std::vector<std::optional<V>> values_;
};

}  // namespace wqo
