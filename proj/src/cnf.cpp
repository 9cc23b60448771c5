#include "wqo/cnf.hpp"

#include <cassert>

#include "wqo/text.hpp"

namespace wqo {

Term::Term(unsigned height, std::vector<Term> children) {
  auto rep = std::make_shared<Rep>();
  rep->height = height;
  rep->children = std::move(children);
  rep_ = std::move(rep);
}

Term::Term(BaseElem e) {
  auto rep = std::make_shared<Rep>();
  rep->elem = e;
  rep_ = std::move(rep);
}

Term Term::leaf(BaseElem e) { return Term(e); }

Term Term::node(unsigned height, std::vector<Term> children) {
  if (height == 0) {
    throw Error(ErrorKind::HeightMismatch, "a node must have height >= 1");
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (children[i].height() != height - 1) {
      throw Error(ErrorKind::HeightMismatch,
                  "child " + std::to_string(i) + " has height " +
                      std::to_string(children[i].height()) + ", expected " +
                      std::to_string(height - 1));
    }
  }
  return Term(height, std::move(children));
}

bool operator==(const Term& a, const Term& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.height() != b.height()) return false;
  if (a.is_leaf()) return a.elem() == b.elem();
  if (a.length() != b.length()) return false;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

namespace {

void require_same_height(const Term& a, const Term& b) {
  if (a.height() != b.height()) {
    throw Error(ErrorKind::HeightMismatch, "cannot compare terms of heights " +
                                               std::to_string(a.height()) + " and " +
                                               std::to_string(b.height()));
  }
}

std::strong_ordering compare_unchecked(const Term& a, const Term& b) {
  if (a.is_leaf()) return a.elem() <=> b.elem();
  const std::size_t common = std::min(a.length(), b.length());
  for (std::size_t i = 0; i < common; ++i) {
    auto ord = compare_unchecked(a[i], b[i]);
    if (ord != 0) return ord;
  }
  return a.length() <=> b.length();
}

std::optional<TermViolation> validate_at(const OrderSpec& spec, const Term& t,
                                         std::vector<std::size_t>& path) {
  if (t.is_leaf()) {
    if (!is_valid_elem(spec, t.elem())) {
      return TermViolation{path, format_elem(t.elem()) + " is not an element of " +
                                     format_spec(spec)};
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < t.length(); ++i) {
    path.push_back(i);
    if (auto v = validate_at(spec, t[i], path)) return v;
    if (i > 0 && compare_unchecked(t[i - 1], t[i]) < 0) {
      return TermViolation{path, "entry " + format_term(t[i]) + " exceeds preceding entry " +
                                     format_term(t[i - 1])};
    }
    path.pop_back();
  }
  return std::nullopt;
}

bool is_zero_run(const OrderSpec& spec, const Term& t) {
  // t = ⟨0,...,0⟩ over the child-level zero.
  if (t.length() == 0) return true;
  const Term zero = zero_term(spec, t.height() - 1);
  for (const Term& c : t.children()) {
    if (!(c == zero)) return false;
  }
  return true;
}

}  // namespace

std::string TermViolation::describe() const {
  std::string where;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) where += '.';
    where += std::to_string(path[i]);
  }
  if (where.empty()) where = "root";
  return "violation at index " + where + ": " + reason;
}

std::optional<TermViolation> validate_term(const OrderSpec& spec, const Term& t) {
  std::vector<std::size_t> path;
  return validate_at(spec, t, path);
}

void require_valid_term(const OrderSpec& spec, const Term& t) {
  if (auto v = validate_term(spec, t)) {
    throw Error(ErrorKind::InvalidTerm, v->describe());
  }
}

Term zero_term(const OrderSpec& spec, unsigned height) {
  if (height > 0) return Term::node(height, {});
  auto least = least_elem(spec);
  if (!least) {
    throw Error(ErrorKind::EmptyOrder, format_spec(spec) + " has no least element");
  }
  return Term::leaf(*least);
}

std::size_t j_index(const Term& a, const Term& b) {
  require_same_height(a, b);
  if (a.is_leaf()) {
    throw Error(ErrorKind::HeightMismatch, "j_index needs terms of height >= 1");
  }
  const std::size_t common = std::min(a.length(), b.length());
  for (std::size_t j = 0; j < common; ++j) {
    if (compare_unchecked(a[j], b[j]) != 0) return j;
  }
  return common;
}

std::strong_ordering lex_compare(const Term& a, const Term& b) {
  require_same_height(a, b);
  auto ord = compare_unchecked(a, b);
#ifndef NDEBUG
  if (!a.is_leaf()) {
    // Cross-check against the two-clause definition through j.
    const std::size_t j = j_index(a, b);
    const std::size_t common = std::min(a.length(), b.length());
    std::strong_ordering expected = std::strong_ordering::equal;
    if (j < common) {
      expected = compare_unchecked(a[j], b[j]);
    } else {
      expected = a.length() <=> b.length();
    }
    assert(ord == expected);
  }
#endif
  return ord;
}

Term one_plus_term(const OrderSpec& spec, const Term& t) {
  if (t.is_leaf()) return Term::leaf(one_plus(spec, t.elem()));
  if (!is_zero_run(spec, t)) return t;
  std::vector<Term> children(t.children().begin(), t.children().end());
  children.push_back(zero_term(spec, t.height() - 1));
  return Term::node(t.height(), std::move(children));
}

Term bar_entry(const OrderSpec& spec, const Term& a, std::size_t j) {
  if (a.is_leaf()) {
    throw Error(ErrorKind::HeightMismatch, "bar_entry needs a term of height >= 1");
  }
  if (a.height() == 1 && !spec.has_omega_plus_form()) {
    throw Error(ErrorKind::NotOmegaPlusForm,
                format_spec(spec) + " does not have the form omega+Y");
  }
  if (j < a.length()) return one_plus_term(spec, a[j]);
  return zero_term(spec, a.height() - 1);
}

Term c_value(const OrderSpec& spec, const Term& a, const Term& b) {
  return bar_entry(spec, a, j_index(a, b));
}

Term lift_embedding(const BaseEmbedding& e, const Term& t) {
  if (t.is_leaf()) return Term::leaf(e(t.elem()));
  std::vector<Term> children;
  children.reserve(t.length());
  for (const Term& c : t.children()) children.push_back(lift_embedding(e, c));
  return Term::node(t.height(), std::move(children));
}

}  // namespace wqo
