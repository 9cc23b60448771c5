#include "wqo/text.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "wqo/transform.hpp"

namespace wqo {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t line = 1) : text_(text), line_(line) {}

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool consume(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Natural natural() {
    skip_ws();
    Natural value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected a natural number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at line " + std::to_string(line_) + ", column " +
                         std::to_string(pos_ + 1),
                     line_, pos_ + 1);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

OrderSpec read_spec(Cursor& in) {
  if (in.consume("fin:")) return OrderSpec::finite(in.natural());
  if (in.consume("omega")) {
    if (in.consume('+')) {
      in.expect('(');
      OrderSpec tail = read_spec(in);
      in.expect(')');
      return OrderSpec::omega_plus(tail);
    }
    return OrderSpec::omega();
  }
  in.fail("expected an order spec (fin:<k>, omega, omega+(<spec>))");
}

BaseElem read_elem(Cursor& in) {
  unsigned depth = 0;
  while (in.consume("y.")) ++depth;
  in.consume("w.");
  return BaseElem{depth, in.natural()};
}

Term read_term(Cursor& in, unsigned height) {
  if (height == 0) return Term::leaf(read_elem(in));
  in.expect('[');
  std::vector<Term> children;
  if (!in.consume(']')) {
    do {
      children.push_back(read_term(in, height - 1));
    } while (in.consume(','));
    in.expect(']');
  }
  return Term::node(height, std::move(children));
}

std::vector<Natural> read_naturals(Cursor& in) {
  std::vector<Natural> out;
  if (!in.at_digit()) return out;
  out.push_back(in.natural());
  while (in.consume(',')) {
    if (!in.at_digit()) break;  // trailing comma of a singleton
    out.push_back(in.natural());
  }
  return out;
}

QuasiOrder read_qo(Cursor& in) {
  if (in.consume("term(")) {
    const Natural height = in.natural();
    in.expect(',');
    OrderSpec spec = read_spec(in);
    in.expect(')');
    return QuasiOrder::term_order(spec, static_cast<unsigned>(height));
  }
  if (in.consume("prod(")) {
    const Natural arity = in.natural();
    in.expect(',');
    QuasiOrder tail = read_qo(in);
    in.expect(')');
    return QuasiOrder::product(arity, std::move(tail));
  }
  if (in.consume("seq(")) {
    QuasiOrder tail = read_qo(in);
    in.expect(')');
    return QuasiOrder::seq_over(std::move(tail));
  }
  if (in.consume("fqo(")) {
    const Natural size = in.natural();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (in.consume(';')) {
      do {
        const Natural a = in.natural();
        in.expect('-');
        pairs.emplace_back(a, in.natural());
      } while (in.consume(','));
    }
    in.expect(')');
    return QuasiOrder::finite(FiniteQuasiOrder::from_pairs(size, pairs));
  }
  return QuasiOrder::base(read_spec(in));
}

QValue read_qvalue(Cursor& in, const QuasiOrder& q) {
  switch (q.kind()) {
    case QuasiOrder::Kind::Base:
      return QValue::base(read_elem(in));
    case QuasiOrder::Kind::TermOrder:
      return QValue::term(read_term(in, q.height()));
    case QuasiOrder::Kind::Product: {
      in.expect('(');
      std::vector<Natural> coords = read_naturals(in);
      in.expect(';');
      QValue tail = read_qvalue(in, q.tail());
      in.expect(')');
      return QValue::product(std::move(coords), std::move(tail));
    }
    case QuasiOrder::Kind::SeqOver: {
      in.expect('[');
      std::vector<QValue> entries;
      if (!in.consume(']')) {
        do {
          entries.push_back(read_qvalue(in, q.tail()));
        } while (in.consume(','));
        in.expect(']');
      }
      return QValue::seq(std::move(entries));
    }
    case QuasiOrder::Kind::Finite:
      return QValue::finite(in.natural());
  }
  in.fail("unknown quasi order");
}

void write_term(std::string& out, const Term& t) {
  if (t.is_leaf()) {
    out += format_elem(t.elem());
    return;
  }
  out += '[';
  for (std::size_t i = 0; i < t.length(); ++i) {
    if (i) out += ',';
    write_term(out, t[i]);
  }
  out += ']';
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

std::string format_spec(const OrderSpec& spec) {
  std::string bottom =
      spec.bottom_is_omega() ? "omega" : "fin:" + std::to_string(spec.finite_size());
  std::string out;
  for (unsigned i = 0; i < spec.tower(); ++i) out += "omega+(";
  out += bottom;
  out.append(spec.tower(), ')');
  return out;
}

OrderSpec parse_spec(std::string_view text) {
  Cursor in(text);
  OrderSpec spec = read_spec(in);
  in.expect_end();
  return spec;
}

std::string format_elem(BaseElem e) {
  std::string out;
  for (unsigned i = 0; i < e.depth; ++i) out += "y.";
  return out + "w." + std::to_string(e.value);
}

BaseElem parse_elem(const OrderSpec& spec, std::string_view text) {
  Cursor in(text);
  BaseElem e = read_elem(in);
  in.expect_end();
  require_valid_elem(spec, e);
  return e;
}

std::string format_term(const Term& t) {
  std::string out;
  write_term(out, t);
  return out;
}

Term parse_term(unsigned height, std::string_view text) {
  Cursor in(text);
  Term t = read_term(in, height);
  in.expect_end();
  return t;
}

Term parse_valid_term(const OrderSpec& spec, unsigned height, std::string_view text) {
  Term t = parse_term(height, text);
  require_valid_term(spec, t);
  return t;
}

std::string format_node(const Node& n) {
  std::string out;
  for (std::size_t i = 0; i < n.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(n[i]);
  }
  return out;
}

Node parse_node(std::string_view text) {
  Cursor in(text);
  std::vector<Natural> entries = read_naturals(in);
  in.expect_end();
  return Node(std::move(entries));
}

std::string format_pair(const Node& s, const Node& t) {
  return format_node(s) + ",|" + format_node(t);
}

std::pair<Node, Node> parse_pair(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected '<s>,|<t>'", 1, text.size() + 1);
  return {parse_node(text.substr(0, bar)), parse_node(text.substr(bar + 1))};
}

std::string format_qo(const QuasiOrder& q) {
  switch (q.kind()) {
    case QuasiOrder::Kind::Base:
      return format_spec(q.spec());
    case QuasiOrder::Kind::TermOrder:
      return "term(" + std::to_string(q.height()) + "," + format_spec(q.spec()) + ")";
    case QuasiOrder::Kind::Product:
      return "prod(" + std::to_string(q.arity()) + "," + format_qo(q.tail()) + ")";
    case QuasiOrder::Kind::SeqOver:
      return "seq(" + format_qo(q.tail()) + ")";
    case QuasiOrder::Kind::Finite: {
      const FiniteQuasiOrder& f = q.finite_order();
      std::string out = "fqo(" + std::to_string(f.size());
      char sep = ';';
      for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = 0; b < f.size(); ++b) {
          if (a != b && f.leq(a, b)) {
            out += sep;
            out += std::to_string(a) + "-" + std::to_string(b);
            sep = ',';
          }
        }
      }
      return out + ")";
    }
  }
  return {};
}

QuasiOrder parse_qo(std::string_view text) {
  Cursor in(text);
  QuasiOrder q = read_qo(in);
  in.expect_end();
  return q;
}

std::string format_qvalue(const QuasiOrder& q, const QValue& v) {
  switch (q.kind()) {
    case QuasiOrder::Kind::Base:
      return format_elem(std::get<BaseElem>(v.value));
    case QuasiOrder::Kind::TermOrder:
      return format_term(std::get<Term>(v.value));
    case QuasiOrder::Kind::Product: {
      const auto& p = *std::get<QValue::ProductPtr>(v.value);
      std::string out = "(";
      for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.coords[i]);
      }
      return out + ";" + format_qvalue(q.tail(), p.tail) + ")";
    }
    case QuasiOrder::Kind::SeqOver: {
      const auto& s = *std::get<QValue::SeqPtr>(v.value);
      std::string out = "[";
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += format_qvalue(q.tail(), s[i]);
      }
      return out + "]";
    }
    case QuasiOrder::Kind::Finite:
      return std::to_string(std::get<QValue::FiniteIndex>(v.value).index);
  }
  return {};
}

QValue parse_qvalue(const QuasiOrder& q, std::string_view text) {
  Cursor in(text);
  QValue v = read_qvalue(in, q);
  in.expect_end();
  require_qo_elem(q, v);
  return v;
}

std::string format_level_value(const ProductElem<Term>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v.coords[i]);
  }
  return out + ";" + format_term(v.tail) + ")";
}

std::string format_level_table(const LevelTable& table) {
  std::string out;
  const WindowIndex& index = table.values.index();
  if (index.size() == 0) return out;
  std::vector<Natural> cur = index.unrank(0);
  std::size_t rank = 0;
  do {
    out += format_node(Node(cur));
    out += " -> ";
    out += format_level_value(*table.values.at_rank(rank++));
    out += '\n';
  } while (index.next(cur));
  return out;
}

LevelTable parse_level_table(const OrderSpec& spec, std::size_t level, unsigned term_height,
                             Natural window, std::string_view text) {
  LevelTable table{spec, level, term_height, WindowTable<LevelValue>(level + 1, window)};
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_blank(lines[i]) || lines[i].front() == '#') continue;
    Cursor in(lines[i], i + 1);
    std::vector<Natural> entries = read_naturals(in);
    if (!in.consume("->")) in.fail("expected '->'");
    in.expect('(');
    std::vector<Natural> coords = read_naturals(in);
    in.expect(';');
    Term t = read_term(in, term_height);
    in.expect(')');
    in.expect_end();
    if (coords.size() != level) {
      throw Error(ErrorKind::ArityMismatch, "line " + std::to_string(i + 1) + ": expected " +
                                                std::to_string(level) + " coordinates");
    }
    table.values.set(Node(std::move(entries)), LevelValue{std::move(coords), std::move(t)});
  }
  return table;
}

SequenceFile parse_sequence_file(std::string_view text) {
  const auto lines = split_lines(text);
  SequenceFile file;
  bool have_header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (is_blank(line) || line.find_first_not_of(" \t") == line.find('#')) continue;
    Cursor in(line, i + 1);
    if (!have_header) {
      if (!in.consume("spec=")) in.fail("expected header 'spec=<spec> height=<n>'");
      file.spec = read_spec(in);
      if (!in.consume("height=")) in.fail("expected 'height=<n>'");
      file.height = static_cast<unsigned>(in.natural());
      in.expect_end();
      have_header = true;
      continue;
    }
    file.terms.push_back(read_term(in, file.height));
    in.expect_end();
  }
  if (!have_header) throw ParseError("missing header 'spec=<spec> height=<n>'", 1, 1);
  return file;
}

std::string format_sequence_file(const OrderSpec& spec, unsigned height,
                                 std::span<const Term> terms) {
  std::string out = "spec=" + format_spec(spec) + " height=" + std::to_string(height) + "\n";
  for (const Term& t : terms) out += format_term(t) + "\n";
  return out;
}

}  // namespace wqo
