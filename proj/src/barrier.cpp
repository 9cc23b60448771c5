#include "wqo/barrier.hpp"

#include <limits>

#include "wqo/text.hpp"

namespace wqo {

Node::Node(std::vector<Natural> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::InvalidNode, "a node needs at least one entry");
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (!(entries_[i - 1] < entries_[i])) {
      throw Error(ErrorKind::InvalidNode, "node entries must be strictly increasing, got " +
                                              std::to_string(entries_[i - 1]) + " before " +
                                              std::to_string(entries_[i]));
    }
  }
}

bool triangle(const Node& s, const Node& t) {
  if (s.length() != t.length()) {
    throw Error(ErrorKind::LengthMismatch, "triangle needs nodes of equal length, got " +
                                               format_node(s) + " and " + format_node(t));
  }
  if (!(s.front() < t.front())) return false;
  for (std::size_t i = 0; i + 1 < s.length(); ++i) {
    if (s[i + 1] != t[i]) return false;
  }
  return true;
}

Node node_union(const Node& s, const Node& t) {
  if (!triangle(s, t)) {
    throw Error(ErrorKind::NotTriangleRelated,
                format_node(s) + " is not triangle-related to " + format_node(t));
  }
  std::vector<Natural> out(s.entries().begin(), s.entries().end());
  out.push_back(t.back());
  return Node(std::move(out));
}

std::pair<Node, Node> split(const Node& u) {
  if (u.length() < 2) {
    throw Error(ErrorKind::TooShort, "node " + format_node(u) + " has no decomposition");
  }
  auto e = u.entries();
  return {Node(std::vector<Natural>(e.begin(), e.end() - 1)),
          Node(std::vector<Natural>(e.begin() + 1, e.end()))};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > cap) return cap;
  }
  return static_cast<std::uint64_t>(acc);
}

WindowIndex::WindowIndex(std::size_t length, Natural window)
    : length_(length), window_(window) {
  if (length == 0) throw Error(ErrorKind::InvalidNode, "barrier length must be >= 1");
  binom_.resize((window + 1) * (length + 1));
  for (Natural n = 0; n <= window; ++n) {
    for (std::size_t k = 0; k <= length; ++k) binom_[n * (length + 1) + k] = binomial(n, k);
  }
  const std::uint64_t count = choose(window, length);
  if (count > kMaxNodes) {
    throw Error(ErrorKind::WindowTooLarge, "window " + std::to_string(window) + " holds " +
                                               std::to_string(count) + " nodes of length " +
                                               std::to_string(length));
  }
  size_ = count;
}

std::uint64_t WindowIndex::choose(Natural n, std::size_t k) const {
  return binom_[n * (length_ + 1) + k];
}

std::size_t WindowIndex::rank(std::span<const Natural> entries) const {
  // Lexicographic rank = C(N,m) - 1 - Σ C(N-1-c_i, m-i).
  std::uint64_t tail = 0;
  for (std::size_t i = 0; i < length_; ++i) tail += choose(window_ - 1 - entries[i], length_ - i);
  return size_ - 1 - tail;
}

std::vector<Natural> WindowIndex::unrank(std::size_t rank) const {
  std::vector<Natural> out(length_);
  Natural x = 0;
  for (std::size_t i = 0; i < length_; ++i) {
    for (;; ++x) {
      const std::uint64_t count = choose(window_ - 1 - x, length_ - i - 1);
      if (rank < count) break;
      rank -= count;
    }
    out[i] = x++;
  }
  return out;
}

bool WindowIndex::next(std::span<Natural> entries) const {
  std::size_t i = length_;
  while (i > 0) {
    --i;
    if (entries[i] < window_ - length_ + i) {
      ++entries[i];
      for (std::size_t k = i + 1; k < length_; ++k) entries[k] = entries[k - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<Node> enumerate_window(std::size_t k, Natural window) {
  std::vector<Node> out;
  if (k == 0) throw Error(ErrorKind::InvalidNode, "barrier length must be >= 1");
  if (window < k) return out;
  WindowIndex index(k, window);
  out.reserve(index.size());
  std::vector<Natural> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  do {
    out.emplace_back(cur);
  } while (index.next(cur));
  return out;
}

std::vector<std::pair<Node, Node>> enumerate_pairs(std::size_t k, Natural window) {
  std::vector<std::pair<Node, Node>> out;
  for (const Node& t : enumerate_window(k, window)) {
    std::vector<Natural> s(k);
    for (std::size_t i = 1; i < k; ++i) s[i] = t[i - 1];
    for (Natural s0 = 0; s0 < t.front(); ++s0) {
      s[0] = s0;
      out.emplace_back(Node(s), t);
    }
  }
  return out;
}

}  // namespace wqo
