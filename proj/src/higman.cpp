#include "wqo/higman.hpp"

#include "wqo/text.hpp"

namespace wqo {

FiniteQuasiOrder::FiniteQuasiOrder(std::size_t size, std::vector<std::vector<bool>> leq)
    : size_(size), leq_(size * size) {
  if (leq.size() != size) {
    throw Error(ErrorKind::InvalidQuasiOrder, "relation matrix has the wrong number of rows");
  }
  for (std::size_t a = 0; a < size; ++a) {
    if (leq[a].size() != size) {
      throw Error(ErrorKind::InvalidQuasiOrder, "relation matrix is not square");
    }
    for (std::size_t b = 0; b < size; ++b) leq_[a * size + b] = leq[a][b];
  }
  for (std::size_t a = 0; a < size; ++a) {
    if (!this->leq(a, a)) {
      throw Error(ErrorKind::InvalidQuasiOrder,
                  "relation is not reflexive at " + std::to_string(a));
    }
  }
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (!this->leq(a, b)) continue;
      for (std::size_t c = 0; c < size; ++c) {
        if (this->leq(b, c) && !this->leq(a, c)) {
          throw Error(ErrorKind::InvalidQuasiOrder,
                      "relation is not transitive: " + std::to_string(a) + "<=" +
                          std::to_string(b) + "<=" + std::to_string(c));
        }
      }
    }
  }
}

FiniteQuasiOrder FiniteQuasiOrder::from_pairs(
    std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::vector<bool>> m(size, std::vector<bool>(size, false));
  for (std::size_t a = 0; a < size; ++a) m[a][a] = true;
  for (auto [a, b] : pairs) {
    if (a >= size || b >= size) {
      throw Error(ErrorKind::InvalidQuasiOrder, "pair " + std::to_string(a) + "-" +
                                                    std::to_string(b) + " is out of range");
    }
    m[a][b] = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t a = 0; a < size; ++a)
      if (m[a][k])
        for (std::size_t b = 0; b < size; ++b)
          if (m[k][b]) m[a][b] = true;
  return FiniteQuasiOrder(size, std::move(m));
}

QuasiOrder QuasiOrder::base(const OrderSpec& spec) {
  QuasiOrder q;
  q.kind_ = Kind::Base;
  q.spec_ = spec;
  return q;
}

QuasiOrder QuasiOrder::term_order(const OrderSpec& spec, unsigned height) {
  QuasiOrder q;
  q.kind_ = Kind::TermOrder;
  q.spec_ = spec;
  q.height_ = height;
  return q;
}

QuasiOrder QuasiOrder::product(std::size_t arity, QuasiOrder tail) {
  QuasiOrder q;
  q.kind_ = Kind::Product;
  q.arity_ = arity;
  q.tail_ = std::make_shared<const QuasiOrder>(std::move(tail));
  return q;
}

QuasiOrder QuasiOrder::seq_over(QuasiOrder tail) {
  QuasiOrder q;
  q.kind_ = Kind::SeqOver;
  q.tail_ = std::make_shared<const QuasiOrder>(std::move(tail));
  return q;
}

QuasiOrder QuasiOrder::finite(FiniteQuasiOrder order) {
  QuasiOrder q;
  q.kind_ = Kind::Finite;
  q.finite_ = std::make_shared<const FiniteQuasiOrder>(std::move(order));
  return q;
}

QValue QValue::product(std::vector<Natural> coords, QValue tail) {
  return QValue{std::make_shared<const ProductElem<QValue>>(
      ProductElem<QValue>{std::move(coords), std::move(tail)})};
}

QValue QValue::seq(std::vector<QValue> entries) {
  return QValue{std::make_shared<const std::vector<QValue>>(std::move(entries))};
}

namespace {

[[noreturn]] void wrong_shape(const QuasiOrder& q) {
  throw Error(ErrorKind::InvalidElement, "value does not belong to " + format_qo(q));
}

template <class T>
const T& expect(const QuasiOrder& q, const QValue& v) {
  if (const T* p = std::get_if<T>(&v.value)) return *p;
  wrong_shape(q);
}

bool leq_unchecked(const QuasiOrder& q, const QValue& a, const QValue& b);

bool seq_leq_unchecked(const QuasiOrder& q, const std::vector<QValue>& s,
                       const std::vector<QValue>& t) {
  std::size_t pos = 0;
  for (const QValue& x : s) {
    while (pos < t.size() && !leq_unchecked(q, x, t[pos])) ++pos;
    if (pos == t.size()) return false;
    ++pos;
  }
  return true;
}

bool leq_unchecked(const QuasiOrder& q, const QValue& a, const QValue& b) {
  switch (q.kind()) {
    case QuasiOrder::Kind::Base:
      return std::get<BaseElem>(a.value) <= std::get<BaseElem>(b.value);
    case QuasiOrder::Kind::TermOrder:
      return lex_compare(std::get<Term>(a.value), std::get<Term>(b.value)) <= 0;
    case QuasiOrder::Kind::Product: {
      const auto& pa = *std::get<QValue::ProductPtr>(a.value);
      const auto& pb = *std::get<QValue::ProductPtr>(b.value);
      for (std::size_t i = 0; i < q.arity(); ++i) {
        if (pa.coords[i] > pb.coords[i]) return false;
      }
      return leq_unchecked(q.tail(), pa.tail, pb.tail);
    }
    case QuasiOrder::Kind::SeqOver:
      return seq_leq_unchecked(q.tail(), *std::get<QValue::SeqPtr>(a.value),
                               *std::get<QValue::SeqPtr>(b.value));
    case QuasiOrder::Kind::Finite:
      return q.finite_order().leq(std::get<QValue::FiniteIndex>(a.value).index,
                                  std::get<QValue::FiniteIndex>(b.value).index);
  }
  return false;
}

}  // namespace

void require_qo_elem(const QuasiOrder& q, const QValue& v) {
  switch (q.kind()) {
    case QuasiOrder::Kind::Base:
      require_valid_elem(q.spec(), expect<BaseElem>(q, v));
      return;
    case QuasiOrder::Kind::TermOrder: {
      const Term& t = expect<Term>(q, v);
      if (t.height() != q.height()) {
        throw Error(ErrorKind::HeightMismatch, "term has height " + std::to_string(t.height()) +
                                                   ", expected " + std::to_string(q.height()));
      }
      if (auto violation = validate_term(q.spec(), t)) {
        throw Error(ErrorKind::InvalidElement, violation->describe());
      }
      return;
    }
    case QuasiOrder::Kind::Product: {
      const auto& p = expect<QValue::ProductPtr>(q, v);
      if (p->coords.size() != q.arity()) {
        throw Error(ErrorKind::ArityMismatch, "product element has " +
                                                  std::to_string(p->coords.size()) +
                                                  " coordinates, expected " +
                                                  std::to_string(q.arity()));
      }
      require_qo_elem(q.tail(), p->tail);
      return;
    }
    case QuasiOrder::Kind::SeqOver:
      for (const QValue& x : *expect<QValue::SeqPtr>(q, v)) require_qo_elem(q.tail(), x);
      return;
    case QuasiOrder::Kind::Finite:
      if (expect<QValue::FiniteIndex>(q, v).index >= q.finite_order().size()) wrong_shape(q);
      return;
  }
}

bool qo_leq(const QuasiOrder& q, const QValue& a, const QValue& b) {
  require_qo_elem(q, a);
  require_qo_elem(q, b);
  return leq_unchecked(q, a, b);
}

bool higman_leq(const QuasiOrder& q, const std::vector<QValue>& s,
                const std::vector<QValue>& t) {
  for (const QValue& x : s) require_qo_elem(q, x);
  for (const QValue& x : t) require_qo_elem(q, x);
  return seq_leq_unchecked(q, s, t);
}

GoodnessVerdict goodness_on_window(const QuasiOrder& q, const WindowTable<QValue>& arr,
                                   Natural window, unsigned jobs) {
  if (window > arr.window()) {
    throw Error(ErrorKind::MissingValue, "array is only tabulated below " +
                                             std::to_string(arr.window()) + ", window is " +
                                             std::to_string(window));
  }
  const WindowIndex index(arr.length(), window);
  // Values of the window in its own lexicographic order.
  std::vector<const QValue*> values;
  values.reserve(index.size());
  if (index.size() > 0) {
    std::vector<Natural> cur = index.unrank(0);
    do {
      const auto& v = arr.at_rank(arr.index().rank(cur));
      if (!v) {
        throw Error(ErrorKind::MissingValue, "array has no value at node " + format_node(Node(cur)));
      }
      require_qo_elem(q, *v);
      values.push_back(&*v);
    } while (index.next(cur));
  }
  auto hit = scan_triangle_pairs(
      index, [&](std::size_t s, std::size_t t) { return leq_unchecked(q, *values[s], *values[t]); },
      jobs);
  GoodnessVerdict verdict;
  if (hit) verdict.witness.emplace(Node(index.unrank(hit->first)), Node(index.unrank(hit->second)));
  return verdict;
}

}  // namespace wqo
