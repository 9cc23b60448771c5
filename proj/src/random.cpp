#include "wqo/random.hpp"

#include <algorithm>

#include "wqo/text.hpp"

namespace wqo {

BaseElem TermGenerator::elem(const OrderSpec& spec) {
  if (spec.empty()) throw Error(ErrorKind::EmptyOrder, format_spec(spec) + " has no elements");
  for (;;) {
    const auto depth = static_cast<unsigned>(below(spec.tower() + 1));
    if (depth < spec.tower() || spec.bottom_is_omega()) return BaseElem{depth, below(leaf_bound_)};
    if (spec.finite_size() > 0) return BaseElem{depth, below(spec.finite_size())};
  }
}

Term TermGenerator::term(const OrderSpec& spec, unsigned height) {
  if (height == 0) return Term::leaf(elem(spec));
  std::size_t length = 0;
  if (!(height == 1 && spec.empty())) {
    while (length < 8 && below(4) != 0) ++length;
  }
  std::vector<Term> children;
  children.reserve(length);
  for (std::size_t i = 0; i < length; ++i) children.push_back(term(spec, height - 1));
  std::sort(children.begin(), children.end(),
            [](const Term& a, const Term& b) { return lex_compare(a, b) > 0; });
  return Term::node(height, std::move(children));
}

std::vector<Term> TermGenerator::descending(const OrderSpec& spec, unsigned height,
                                            std::size_t count) {
  std::vector<Term> pool;
  auto less = [](const Term& a, const Term& b) { return lex_compare(a, b) > 0; };
  for (std::size_t attempt = 0; pool.size() < count && attempt < 64 * count + 64; ++attempt) {
    Term t = term(spec, height);
    auto it = std::lower_bound(pool.begin(), pool.end(), t, less);
    if (it != pool.end() && lex_compare(*it, t) == 0) continue;
    pool.insert(it, std::move(t));
  }
  return pool;
}

}  // namespace wqo
