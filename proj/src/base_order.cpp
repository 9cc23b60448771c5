#include "wqo/base_order.hpp"

#include <algorithm>

#include "wqo/text.hpp"

namespace wqo {

std::string_view ordering_name(std::strong_ordering ord) {
  if (ord < 0) return "LT";
  if (ord > 0) return "GT";
  return "EQ";
}

OrderSpec OrderSpec::finite(Natural size) {
  OrderSpec s;
  s.bottom_omega_ = false;
  s.finite_size_ = size;
  return s;
}

OrderSpec OrderSpec::omega() { return OrderSpec{}; }

OrderSpec OrderSpec::omega_plus(const OrderSpec& tail) {
  OrderSpec s = tail;
  ++s.tower_;
  return s;
}

OrderSpec OrderSpec::tail() const {
  if (tower_ == 0) {
    throw Error(ErrorKind::NotOmegaPlusForm, format_spec(*this) + " has no tail order");
  }
  OrderSpec s = *this;
  --s.tower_;
  return s;
}

OrderSpec OrderSpec::normalized() const {
  // omega+(...omega+(fin:0)) collapses one level onto omega.
  if (tower_ > 0 && !bottom_omega_ && finite_size_ == 0) {
    OrderSpec s;
    s.tower_ = tower_ - 1;
    return s;
  }
  return *this;
}

bool is_valid_elem(const OrderSpec& spec, BaseElem e) {
  if (e.depth < spec.tower()) return true;
  if (e.depth > spec.tower()) return false;
  return spec.bottom_is_omega() || e.value < spec.finite_size();
}

void require_valid_elem(const OrderSpec& spec, BaseElem e) {
  if (!is_valid_elem(spec, e)) {
    throw Error(ErrorKind::InvalidElement,
                format_elem(e) + " is not an element of " + format_spec(spec));
  }
}

std::strong_ordering compare_base(const OrderSpec& spec, BaseElem a, BaseElem b) {
  require_valid_elem(spec, a);
  require_valid_elem(spec, b);
  return a <=> b;
}

BaseElem zero_elem(const OrderSpec& spec) {
  if (!spec.has_omega_plus_form()) {
    throw Error(ErrorKind::NotOmegaPlusForm,
                format_spec(spec) + " does not have the form omega+Y");
  }
  return BaseElem::left(0);
}

std::optional<BaseElem> least_elem(const OrderSpec& spec) {
  if (spec.empty()) return std::nullopt;
  return BaseElem::left(0);
}

BaseElem one_plus(const OrderSpec& spec, BaseElem x) {
  if (!spec.has_omega_plus_form()) {
    throw Error(ErrorKind::NotOmegaPlusForm,
                format_spec(spec) + " does not have the form omega+Y");
  }
  require_valid_elem(spec, x);
  if (x.depth == 0) return BaseElem::left(x.value + 1);
  return x;
}

BaseElem BaseEmbedding::operator()(BaseElem z) const {
  require_valid_elem(from_, z);
  return std::visit(
      [z](const auto& m) -> BaseElem {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, TableMapping>) {
          return m.targets[z.value];
        } else if constexpr (std::is_same_v<M, InclusionRule>) {
          return z;
        } else {
          return BaseElem::right(z);
        }
      },
      mapping_);
}

namespace {

// Sorted sample of `spec`: every element with value < bound at each depth.
std::vector<BaseElem> sample_elements(const OrderSpec& spec, Natural bound) {
  std::vector<BaseElem> out;
  for (unsigned d = 0; d <= spec.tower(); ++d) {
    Natural limit = bound;
    if (d == spec.tower() && !spec.bottom_is_omega()) {
      limit = std::min(limit, spec.finite_size());
    }
    for (Natural v = 0; v < limit; ++v) out.push_back(BaseElem{d, v});
  }
  return out;
}

}  // namespace

BaseEmbedding embed_base(const OrderSpec& from, const OrderSpec& into, BaseMapping mapping,
                         Natural sample_bound) {
  std::vector<BaseElem> domain;
  if (const auto* table = std::get_if<TableMapping>(&mapping)) {
    if (!from.is_finite()) {
      throw Error(ErrorKind::InvalidElement,
                  "table mappings need a finite source order, got " + format_spec(from));
    }
    if (table->targets.size() < from.finite_size()) {
      throw Error(ErrorKind::InvalidElement,
                  "table lists " + std::to_string(table->targets.size()) +
                      " targets for " + format_spec(from));
    }
    domain = sample_elements(from, from.finite_size());
  } else {
    domain = sample_elements(from, sample_bound);
  }

  BaseEmbedding emb(from, into, std::move(mapping));
  std::vector<BaseElem> images;
  images.reserve(domain.size());
  for (BaseElem z : domain) {
    BaseElem x = emb(z);
    if (!is_valid_elem(into, x)) {
      throw Error(ErrorKind::InvalidElement, "image " + format_elem(x) + " of " +
                                                 format_elem(z) + " is not an element of " +
                                                 format_spec(into));
    }
    images.push_back(x);
  }
  // The domain is sorted, so strictness on all pairs reduces to scanning for
  // the first pair (i, j) in lexicographic order with images[i] >= images[j].
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      if (!(images[i] < images[j])) {
        throw NotMonotoneError("mapping is not monotone on pair (" + format_elem(domain[i]) +
                                   ", " + format_elem(domain[j]) + ")",
                               domain[i], domain[j]);
      }
    }
  }
  return emb;
}

}  // namespace wqo
