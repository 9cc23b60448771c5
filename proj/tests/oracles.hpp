#pragma once

// Reference evaluations used only by tests. Each one follows the defining
// formula directly and avoids the library's fast paths (common-prefix scans,
// greedy matching, rank arithmetic, tabulated recursion).

#include <functional>
#include <set>
#include <vector>

#include "wqo/barrier.hpp"
#include "wqo/cnf.hpp"
#include "wqo/higman.hpp"
#include "wqo/text.hpp"

namespace oracle {

using wqo::BaseElem;
using wqo::Natural;
using wqo::OrderSpec;
using wqo::Term;

// Order on encoded elements spelled out on the ω+Y pairs: walk down the
// tower; a left pair (0,n) precedes every right pair (1,y).
inline int compare_elem(BaseElem a, BaseElem b) {
  unsigned level = 0;
  for (;;) {
    const bool a_left = a.depth == level;
    const bool b_left = b.depth == level;
    if (a_left && b_left) return a.value < b.value ? -1 : (a.value > b.value ? 1 : 0);
    if (a_left) return -1;
    if (b_left) return 1;
    ++level;
  }
}

int compare(const Term& a, const Term& b);

// j(α,β) as the minimum of the displayed set.
inline std::size_t first_diff(const Term& a, const Term& b) {
  const std::size_t m = std::min(a.length(), b.length());
  std::set<std::size_t> candidates{m};
  for (std::size_t j = 0; j < m; ++j) {
    if (compare(a[j], b[j]) != 0) candidates.insert(j);
  }
  return *candidates.begin();
}

// α ≺ β iff (j < min lengths and α_j < β_j) or j = l(α) < l(β).
inline bool less(const Term& a, const Term& b) {
  if (a.is_leaf()) return compare_elem(a.elem(), b.elem()) < 0;
  const std::size_t j = first_diff(a, b);
  const std::size_t m = std::min(a.length(), b.length());
  if (j < m) return less(a[j], b[j]);
  return j == a.length() && a.length() < b.length();
}

inline int compare(const Term& a, const Term& b) {
  if (less(a, b)) return -1;
  if (less(b, a)) return 1;
  return 0;
}

inline Term zero(unsigned height) {
  return height == 0 ? Term::leaf(BaseElem{0, 0}) : Term::node(height, {});
}

// 1+x for ω+Y-form X at height 0; successor on ⟨0,...,0⟩ above.
inline Term one_plus(const Term& t) {
  if (t.is_leaf()) {
    BaseElem e = t.elem();
    return Term::leaf(e.depth == 0 ? BaseElem{0, e.value + 1} : e);
  }
  std::vector<Term> kids(t.children().begin(), t.children().end());
  for (const Term& c : kids) {
    if (compare(c, zero(t.height() - 1)) != 0) return t;
  }
  kids.push_back(zero(t.height() - 1));
  return Term::node(t.height(), std::move(kids));
}

inline Term bar(const Term& a, std::size_t j) {
  return j < a.length() ? one_plus(a[j]) : zero(a.height() - 1);
}

inline Term c_value(const Term& a, const Term& b) { return bar(a, first_diff(a, b)); }

// f_k(u) evaluated by direct recursion on u, with no tables.
struct LevelValue {
  std::vector<Natural> coords;
  Term term;
};

inline LevelValue f(const std::vector<Term>& seq, const std::vector<Natural>& u) {
  if (u.size() == 1) return {{}, seq[u[0]]};
  std::vector<Natural> s(u.begin(), u.end() - 1);
  std::vector<Natural> t(u.begin() + 1, u.end());
  LevelValue fs = f(seq, s);
  LevelValue ft = f(seq, t);
  LevelValue out{fs.coords, c_value(fs.term, ft.term)};
  out.coords.push_back(first_diff(fs.term, ft.term));
  return out;
}

inline bool leq(const LevelValue& a, const LevelValue& b) {
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] > b.coords[i]) return false;
  }
  return compare(a.term, b.term) <= 0;
}

// All strictly increasing tuples of length k below n, by nested recursion.
inline void for_each_tuple(std::size_t k, Natural n,
                           const std::function<void(const std::vector<Natural>&)>& fn) {
  std::vector<Natural> cur;
  std::function<void(Natural)> rec = [&](Natural from) {
    if (cur.size() == k) {
      fn(cur);
      return;
    }
    for (Natural x = from; x < n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// First (s, t) with s ◁ t, entries < n and leq(f(s), f(t)), scanning t then s
// in lexicographic order. Brute force over all pairs of tuples.
inline std::optional<std::pair<std::vector<Natural>, std::vector<Natural>>> first_good_pair(
    std::size_t k, Natural n,
    const std::function<bool(const std::vector<Natural>&, const std::vector<Natural>&)>& leq) {
  std::vector<std::vector<Natural>> all;
  for_each_tuple(k, n, [&](const std::vector<Natural>& x) { all.push_back(x); });
  for (const auto& t : all) {
    for (const auto& s : all) {
      bool tri = s[0] < t[0];
      for (std::size_t i = 0; i + 1 < k; ++i) tri = tri && s[i + 1] == t[i];
      if (tri && leq(s, t)) return std::make_pair(s, t);
    }
  }
  return std::nullopt;
}

// Higman embedding by trying every strictly increasing map l(s) -> l(t).
inline bool higman_exhaustive(const std::function<bool(std::size_t, std::size_t)>& leq,
                              std::size_t ls, std::size_t lt) {
  bool found = false;
  for_each_tuple(ls, lt, [&](const std::vector<Natural>& image) {
    if (found) return;
    bool ok = true;
    for (std::size_t i = 0; i < ls && ok; ++i) ok = leq(i, image[i]);
    found = ok;
  });
  if (ls == 0) return true;
  return found;
}

// C(n, k) from Pascal's triangle.
inline std::uint64_t pascal(std::uint64_t n, std::uint64_t k) {
  std::vector<std::vector<std::uint64_t>> row(n + 1, std::vector<std::uint64_t>(n + 2, 0));
  for (std::uint64_t i = 0; i <= n; ++i) {
    row[i][0] = 1;
    for (std::uint64_t j = 1; j <= i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
  }
  return k > n ? 0 : row[n][k];
}

}  // namespace oracle

// Terse parse helpers for test literals.
inline wqo::Term T(const wqo::OrderSpec& spec, unsigned height, std::string_view text) {
  return wqo::parse_valid_term(spec, height, text);
}
inline wqo::BaseElem E(std::string_view text) {
  return wqo::parse_elem(wqo::OrderSpec::omega_plus(wqo::OrderSpec::omega_plus(
                             wqo::OrderSpec::omega_plus(wqo::OrderSpec::omega()))),
                         text);
}
