#include <doctest.h>

#include "oracles.hpp"
#include "wqo/random.hpp"
#include "wqo/text.hpp"
#include "wqo/transform.hpp"

using namespace wqo;

namespace {

const OrderSpec kOmega = OrderSpec::omega();
const OrderSpec kOmegaFin3 = OrderSpec::omega_plus(OrderSpec::finite(3));

std::pair<std::size_t, std::size_t> parse_error_at(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("no ParseError");
  return {0, 0};
}

}  // namespace

TEST_CASE("specs") {
  CHECK(format_spec(OrderSpec::finite(3)) == "fin:3");
  CHECK(format_spec(kOmega) == "omega");
  CHECK(format_spec(kOmegaFin3) == "omega+(fin:3)");
  for (const char* s : {"fin:0", "fin:7", "omega", "omega+(omega)", "omega+(omega+(fin:2))"}) {
    CHECK(format_spec(parse_spec(s)) == s);
  }
  CHECK_THROWS_AS(parse_spec("fin:"), ParseError);
  CHECK_THROWS_AS(parse_spec("omega+(fin:2"), ParseError);
  CHECK_THROWS_AS(parse_spec("omega junk"), ParseError);
}

TEST_CASE("elements") {
  CHECK(format_elem(BaseElem::left(4)) == "w.4");
  CHECK(format_elem(BaseElem::right(BaseElem::left(2))) == "y.w.2");
  CHECK(parse_elem(kOmega, "5") == BaseElem::left(5));
  CHECK(parse_elem(kOmegaFin3, "y.w.2") == BaseElem{1, 2});
  CHECK_THROWS_AS(parse_elem(kOmegaFin3, "y.w.3"), Error);
  CHECK_THROWS_AS(parse_elem(kOmega, "y.w.0"), Error);
  CHECK_THROWS_AS(parse_elem(kOmega, "x.1"), ParseError);
}

TEST_CASE("terms") {
  CHECK(format_term(T(kOmega, 1, "[2,1]")) == "[w.2,w.1]");
  CHECK(format_term(T(kOmega, 2, "[]")) == "[]");
  CHECK(format_term(T(kOmega, 2, "[[1],[]]")) == "[[w.1],[]]");
  CHECK(parse_term(1, " [ 1 , 3 ] ").length() == 2);
  CHECK_THROWS_AS(parse_valid_term(kOmega, 1, "[1,3]"), Error);
  CHECK(parse_error_at([] { parse_term(2, "[[1],2]"); }).second == 6);
  CHECK_THROWS_AS(parse_term(1, "[1"), ParseError);
  CHECK_THROWS_AS(parse_term(1, "[1]]"), ParseError);
}

TEST_CASE("nodes and pairs") {
  CHECK(format_node(Node{1, 3, 7}) == "1,3,7");
  CHECK(parse_node("1,3,7,") == Node{1, 3, 7});
  CHECK(format_pair(Node{0}, Node{1}) == "0,|1");
  auto [s, t] = parse_pair("0,1,|1,4");
  CHECK(s == Node{0, 1});
  CHECK(t == Node{1, 4});
  CHECK_THROWS_AS(parse_node("3,1"), Error);
  CHECK_THROWS_AS(parse_node(""), Error);
}

TEST_CASE("quasi orders and their values") {
  for (const char* s : {"omega", "term(2,omega+(fin:3))", "prod(2,omega)", "seq(prod(1,fin:3))",
                        "fqo(3)"}) {
    CHECK(format_qo(parse_qo(s)) == s);
  }
  const QuasiOrder chain = parse_qo("fqo(3;0-1,1-2)");
  CHECK(chain.finite_order().leq(0, 2));
  CHECK_FALSE(chain.finite_order().leq(2, 0));
  CHECK(parse_qo(format_qo(chain)).finite_order().leq(0, 2));

  const QuasiOrder p = parse_qo("prod(2,omega)");
  const QValue v = parse_qvalue(p, "(1,4;w.3)");
  CHECK(format_qvalue(p, v) == "(1,4;w.3)");
  CHECK_THROWS_AS(parse_qvalue(p, "(1;w.3)"), Error);
  const QuasiOrder sq = parse_qo("seq(omega)");
  CHECK(format_qvalue(sq, parse_qvalue(sq, "[3,1,4]")) == "[w.3,w.1,w.4]");
}

TEST_CASE("round trips on random values") {
  TermGenerator gen(99);
  for (const OrderSpec& spec : {kOmega, kOmegaFin3, OrderSpec::finite(4),
                                OrderSpec::omega_plus(OrderSpec::omega_plus(OrderSpec::omega()))}) {
    for (unsigned h = 0; h <= 3; ++h) {
      for (int i = 0; i < 300; ++i) {
        const Term t = gen.term(spec, h);
        REQUIRE(parse_valid_term(spec, h, format_term(t)) == t);
      }
    }
    for (int i = 0; i < 300; ++i) {
      const BaseElem e = gen.elem(spec);
      REQUIRE(parse_elem(spec, format_elem(e)) == e);
    }
  }
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = 1 + gen.below(5);
    const Natural n = k + 1 + gen.below(10);
    const WindowIndex idx(k, n);
    const Node node(idx.unrank(gen.below(idx.size())));
    REQUIRE(parse_node(format_node(node)) == node);
  }
}

TEST_CASE("level tables round trip") {
  auto ds = canonical_descent(kOmega, 2, T(kOmega, 2, "[[2]]"), 2, 8);
  auto levels = build_all_levels(ds);
  for (const auto& table : levels) {
    const std::string text = format_level_table(table);
    auto back = parse_level_table(kOmega, table.level, table.term_height, table.window(), text);
    REQUIRE(format_level_table(back) == text);
    for (const Node& n : enumerate_window(table.level + 1, table.window())) {
      REQUIRE(back.at(n).coords == table.at(n).coords);
      REQUIRE(back.at(n).tail == table.at(n).tail);
    }
  }
  CHECK(format_level_value(levels[1].at(Node{0, 1})).starts_with("("));
}

TEST_CASE("sequence files") {
  const std::string text =
      "# descent\n"
      "spec=omega height=1\n"
      "\n"
      "[2]\n"
      "  # comment\n"
      "[1,1]\n"
      "[0]\n";
  auto file = parse_sequence_file(text);
  CHECK(file.spec == kOmega);
  CHECK(file.height == 1);
  REQUIRE(file.terms.size() == 3);
  CHECK(file.terms[1] == T(kOmega, 1, "[1,1]"));
  CHECK(parse_sequence_file(format_sequence_file(kOmega, 1, file.terms)).terms == file.terms);

  CHECK(parse_error_at([] { parse_sequence_file("spec=omega height=1\n[1]\n[1,x]\n"); }) ==
        std::pair<std::size_t, std::size_t>{3, 4});
  CHECK(parse_error_at([] { parse_sequence_file("height=1\n"); }).first == 1);
  CHECK(parse_error_at([] { parse_sequence_file("# only a comment\n"); }).first == 1);
  CHECK(parse_error_at([] { parse_sequence_file("\nspec=omeg height=1\n"); }).first == 2);
}
