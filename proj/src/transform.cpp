#include "wqo/transform.hpp"

#include <chrono>

#include "wqo/text.hpp"

namespace wqo {

DescendingSequence::DescendingSequence(OrderSpec spec, unsigned height, std::vector<Term> values)
    : spec_(spec), height_(height), values_(std::move(values)) {
  if (!spec_.has_omega_plus_form()) {
    throw Error(ErrorKind::NotOmegaPlusForm,
                format_spec(spec_) + " does not have the form omega+Y");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].height() != height_) {
      throw Error(ErrorKind::HeightMismatch, "value " + std::to_string(i) + " has height " +
                                                 std::to_string(values_[i].height()) +
                                                 ", expected " + std::to_string(height_));
    }
    if (auto v = validate_term(spec_, values_[i])) {
      throw Error(ErrorKind::InvalidTerm, "value " + std::to_string(i) + ": " + v->describe());
    }
  }
  for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
    if (lex_compare(values_[i], values_[i + 1]) <= 0) {
      throw Error(ErrorKind::NotDescending,
                  "sequence is not strictly descending at index " + std::to_string(i) + ": " +
                      format_term(values_[i]) + " is not above " + format_term(values_[i + 1]));
    }
  }
}

DescendingSequence DescendingSequence::over_canonical_host(const OrderSpec& spec, unsigned height,
                                                           std::vector<Term> values) {
  if (spec.has_omega_plus_form()) return DescendingSequence(spec, height, std::move(values));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (auto v = validate_term(spec, values[i])) {
      throw Error(ErrorKind::InvalidTerm, "value " + std::to_string(i) + ": " + v->describe());
    }
  }
  const OrderSpec host = OrderSpec::omega_plus(spec);
  const BaseEmbedding e = embed_base(spec, host, TailRule{});
  for (Term& t : values) t = lift_embedding(e, t);
  return DescendingSequence(host, height, std::move(values));
}

const LevelValue& LevelTable::at(const Node& node) const {
  const auto& v = values.find(node);
  if (!v) throw Error(ErrorKind::MissingValue, "level " + std::to_string(level) +
                                                   " has no value at node " + format_node(node));
  return *v;
}

LevelTable build_level0(const OrderSpec& spec, unsigned height, std::span<const Term> values) {
  LevelTable table{spec, 0, height, WindowTable<LevelValue>(1, values.size())};
  for (std::size_t i = 0; i < values.size(); ++i) {
    table.values.set_at(i, LevelValue{{}, values[i]});
  }
  return table;
}

LevelTable build_level0(const DescendingSequence& ds) {
  return build_level0(ds.spec(), ds.height(), ds.values());
}

LevelTable build_next_level(const LevelTable& prev) {
  if (prev.term_height == 0) {
    throw Error(ErrorKind::HeightExhausted,
                "level " + std::to_string(prev.level) + " already maps into the base order");
  }
  prev.values.require_total();
  const WindowIndex& prev_index = prev.values.index();
  LevelTable next{prev.spec, prev.level + 1, prev.term_height - 1,
                  WindowTable<LevelValue>(prev.level + 2, prev.window())};
  const WindowIndex& index = next.values.index();
  if (index.size() == 0) return next;

  const std::size_t m = index.length();
  std::vector<Natural> u = index.unrank(0);
  std::size_t rank = 0;
  do {
    // u = s ∪ t with s = u minus its last entry and t = u minus its first.
    const LevelValue& s = *prev.values.at_rank(prev_index.rank(std::span(u).first(m - 1)));
    const LevelValue& t = *prev.values.at_rank(prev_index.rank(std::span(u).last(m - 1)));
    const std::size_t j = j_index(s.tail, t.tail);
    LevelValue value{s.coords, bar_entry(prev.spec, s.tail, j)};
    value.coords.push_back(j);
    next.values.set_at(rank++, std::move(value));
  } while (index.next(u));
  return next;
}

std::vector<LevelTable> build_all_levels(const OrderSpec& spec, unsigned height,
                                         std::span<const Term> values) {
  std::vector<LevelTable> levels;
  levels.reserve(height + 1);
  levels.push_back(build_level0(spec, height, values));
  for (unsigned k = 0; k < height; ++k) levels.push_back(build_next_level(levels.back()));
  return levels;
}

std::vector<LevelTable> build_all_levels(const DescendingSequence& ds) {
  return build_all_levels(ds.spec(), ds.height(), ds.values());
}

bool product_leq(const LevelValue& a, const LevelValue& b) {
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] > b.coords[i]) return false;
  }
  return lex_compare(a.tail, b.tail) <= 0;
}

GoodnessVerdict level_goodness(const LevelTable& table, unsigned jobs) {
  table.values.require_total();
  const WindowIndex& index = table.values.index();
  auto hit = scan_triangle_pairs(
      index,
      [&](std::size_t s, std::size_t t) {
        return product_leq(*table.values.at_rank(s), *table.values.at_rank(t));
      },
      jobs);
  GoodnessVerdict verdict;
  if (hit) verdict.witness.emplace(Node(index.unrank(hit->first)), Node(index.unrank(hit->second)));
  return verdict;
}

ProofStepEcho echo_proof_step(const LevelTable& prev, const LevelTable& next, const Node& lo,
                              const Node& hi) {
  const auto [r, s] = split(lo);
  const auto [s2, t] = split(hi);
  if (!(s == s2) || !triangle(lo, hi)) {
    throw Error(ErrorKind::NotTriangleRelated,
                format_node(lo) + " is not triangle-related to " + format_node(hi));
  }
  const LevelValue& fr = prev.at(r);
  const LevelValue& fs = prev.at(s);
  const LevelValue& ft = prev.at(t);

  ProofStepEcho echo;
  echo.premise = product_leq(next.at(lo), next.at(hi));
  echo.coords_leq = true;
  for (std::size_t i = 0; i < fr.coords.size(); ++i) {
    if (fr.coords[i] > fs.coords[i]) echo.coords_leq = false;
  }
  echo.j_leq = j_index(fr.tail, fs.tail) <= j_index(fs.tail, ft.tail);
  echo.c_leq = lex_compare(c_value(prev.spec, fr.tail, fs.tail),
                           c_value(prev.spec, fs.tail, ft.tail)) <= 0;
  echo.projects_good = product_leq(fr, fs);
  return echo;
}

void require_window_fits(unsigned height, Natural window) {
  for (unsigned k = 0; k <= height; ++k) {
    if (binomial(window, k + 1) > WindowIndex::kMaxNodes) {
      throw Error(ErrorKind::WindowTooLarge,
                  "window " + std::to_string(window) + " needs more than " +
                      std::to_string(WindowIndex::kMaxNodes) + " nodes at level " +
                      std::to_string(k));
    }
  }
}

WitnessReport run_pipeline(const DescendingSequence& ds, const PipelineOptions& options) {
  const unsigned n = ds.height();
  require_window_fits(n, ds.size());
  if (ds.size() < static_cast<std::size_t>(n) + 2) {
    throw Error(ErrorKind::WindowTooSmall,
                "window " + std::to_string(ds.size()) + " has no triangle pair at level " +
                    std::to_string(n) + "; need at least " + std::to_string(n + 2) + " values");
  }
  using Clock = std::chrono::steady_clock;
  auto seconds_since = [](Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  };

  WitnessReport report;
  report.spec = ds.spec();
  report.height = n;
  report.window = ds.size();
  report.source = options.source;

  std::vector<LevelTable> levels;
  for (unsigned k = 0; k <= n; ++k) {
    auto t0 = Clock::now();
    levels.push_back(k == 0 ? build_level0(ds) : build_next_level(levels.back()));
    LevelVerdict lv;
    lv.level = k;
    lv.build_seconds = seconds_since(t0);
    t0 = Clock::now();
    lv.verdict = level_goodness(levels.back(), options.jobs);
    lv.scan_seconds = seconds_since(t0);
    report.levels.push_back(std::move(lv));
  }

  for (unsigned k = 0; k < n; ++k) {
    if (report.levels[k].verdict.bad_on_window() && report.levels[k + 1].verdict.good()) {
      report.proposition_violations.push_back(k);
    }
  }
  for (unsigned k = 1; k <= n; ++k) {
    const auto& w = report.levels[k].verdict.witness;
    if (w && !echo_proof_step(levels[k - 1], levels[k], w->first, w->second).holds()) {
      report.echo_failures.push_back(k);
    }
  }
  return report;
}

Term descent_step(const OrderSpec& spec, const Term& t, std::size_t fuel) {
  if (t.is_leaf()) {
    if (!spec.has_omega_plus_form()) {
      throw Error(ErrorKind::NotOmegaPlusForm,
                  format_spec(spec) + " does not have the form omega+Y");
    }
    const BaseElem e = t.elem();
    if (e.depth > 0) {
      throw Error(ErrorKind::UnsupportedLeafDescent,
                  "leaf " + format_elem(e) + " lies outside the omega part; supply the descent "
                  "as a sequence file");
    }
    if (e.value == 0) throw Error(ErrorKind::AlreadyMinimal, "leaf w.0 is minimal");
    return Term::leaf(BaseElem::left(e.value - 1));
  }
  if (t.length() == 0) throw Error(ErrorKind::AlreadyMinimal, "[] is minimal");
  std::vector<Term> children(t.children().begin(), t.children().end());
  const Term last = children.back();
  children.pop_back();
  if (!(last == zero_term(spec, t.height() - 1))) {
    const Term smaller = descent_step(spec, last, fuel);
    children.insert(children.end(), fuel, smaller);
  }
  return Term::node(t.height(), std::move(children));
}

DescendingSequence canonical_descent(const OrderSpec& spec, unsigned height, const Term& start,
                                     std::size_t fuel, std::size_t steps) {
  if (fuel == 0) throw Error(ErrorKind::InvalidTerm, "fuel must be at least 1");
  if (!spec.has_omega_plus_form()) {
    throw Error(ErrorKind::NotOmegaPlusForm,
                format_spec(spec) + " does not have the form omega+Y");
  }
  if (start.height() != height) {
    throw Error(ErrorKind::HeightMismatch, "start has height " + std::to_string(start.height()) +
                                               ", expected " + std::to_string(height));
  }
  require_valid_term(spec, start);
  const Term zero = zero_term(spec, height);
  if (start == zero) {
    throw Error(ErrorKind::AlreadyMinimal, format_term(start) + " is the least term");
  }
  std::vector<Term> values;
  if (steps > 0) values.push_back(start);
  while (values.size() < steps && !(values.back() == zero)) {
    values.push_back(descent_step(spec, values.back(), fuel));
  }
  return DescendingSequence(spec, height, std::move(values));
}

}  // namespace wqo
