#include <doctest.h>

#include "oracles.hpp"
#include "wqo/base_order.hpp"
#include "wqo/random.hpp"
#include "wqo/text.hpp"

using namespace wqo;

namespace {

const OrderSpec kOmega = OrderSpec::omega();
const OrderSpec kOmegaFin2 = OrderSpec::omega_plus(OrderSpec::finite(2));
const OrderSpec kOmegaFin3 = OrderSpec::omega_plus(OrderSpec::finite(3));

std::vector<OrderSpec> property_specs() {
  return {kOmega, kOmegaFin3, OrderSpec::finite(5),
          OrderSpec::omega_plus(OrderSpec::omega_plus(OrderSpec::finite(2))),
          OrderSpec::omega_plus(OrderSpec::omega())};
}

}  // namespace

TEST_CASE("compare_base examples") {
  CHECK(compare_base(kOmegaFin2, parse_elem(kOmegaFin2, "w.5"), parse_elem(kOmegaFin2, "y.0")) < 0);
  CHECK(compare_base(kOmegaFin2, parse_elem(kOmegaFin2, "y.1"), parse_elem(kOmegaFin2, "y.1")) == 0);
  CHECK(compare_base(kOmega, BaseElem::left(3), BaseElem::left(7)) < 0);
}

TEST_CASE("compare_base rejects invalid elements") {
  CHECK_THROWS_AS(compare_base(kOmegaFin2, BaseElem{1, 2}, BaseElem::left(0)), Error);
  CHECK_THROWS_AS(compare_base(OrderSpec::finite(3), BaseElem::left(3), BaseElem::left(0)), Error);
  CHECK_THROWS_AS(compare_base(kOmega, BaseElem{1, 0}, BaseElem::left(0)), Error);
  try {
    compare_base(OrderSpec::finite(1), BaseElem::left(1), BaseElem::left(0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidElement);
  }
}

TEST_CASE("zero_elem") {
  CHECK(zero_elem(kOmegaFin3) == BaseElem::left(0));
  CHECK(format_elem(zero_elem(kOmegaFin3)) == "w.0");
  CHECK(zero_elem(kOmega) == BaseElem::left(0));
  try {
    zero_elem(OrderSpec::finite(4));
    FAIL("expected NotOmegaPlusForm");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOmegaPlusForm);
  }
}

TEST_CASE("one_plus") {
  CHECK(one_plus(kOmegaFin2, parse_elem(kOmegaFin2, "w.4")) == parse_elem(kOmegaFin2, "w.5"));
  CHECK(one_plus(kOmegaFin2, parse_elem(kOmegaFin2, "y.1")) == parse_elem(kOmegaFin2, "y.1"));
  CHECK(one_plus(kOmega, BaseElem::left(0)) == BaseElem::left(1));
  CHECK_THROWS_AS(one_plus(OrderSpec::finite(3), BaseElem::left(0)), Error);
}

TEST_CASE("Omega and OmegaPlus(Finite(0)) are compare-compatible") {
  const OrderSpec alt = OrderSpec::omega_plus(OrderSpec::finite(0));
  CHECK_FALSE(alt == kOmega);
  CHECK(alt.normalized() == kOmega);
  CHECK(OrderSpec::omega_plus(alt).normalized() == OrderSpec::omega_plus(kOmega));
  for (Natural a = 0; a < 6; ++a) {
    for (Natural b = 0; b < 6; ++b) {
      CHECK(compare_base(alt, BaseElem::left(a), BaseElem::left(b)) ==
            compare_base(kOmega, BaseElem::left(a), BaseElem::left(b)));
    }
  }
  CHECK(zero_elem(alt) == zero_elem(kOmega));
  CHECK_FALSE(is_valid_elem(alt, BaseElem{1, 0}));
}

TEST_CASE("order laws on random samples") {
  for (const OrderSpec& spec : property_specs()) {
    CAPTURE(format_spec(spec));
    TermGenerator gen(17);
    for (int i = 0; i < 10000; ++i) {
      const BaseElem a = gen.elem(spec), b = gen.elem(spec), c = gen.elem(spec);
      const auto ab = compare_base(spec, a, b);
      REQUIRE(ab == (0 <=> compare_base(spec, b, a)));
      REQUIRE((ab < 0 ? -1 : ab > 0 ? 1 : 0) == oracle::compare_elem(a, b));
      if (ab < 0 && compare_base(spec, b, c) < 0) REQUIRE(compare_base(spec, a, c) < 0);
      if (spec.has_omega_plus_form()) {
        if (ab < 0) REQUIRE(one_plus(spec, a) < one_plus(spec, b));
        REQUIRE(compare_base(spec, zero_elem(spec), one_plus(spec, a)) < 0);
        REQUIRE(compare_base(spec, zero_elem(spec), a) <= 0);
      }
    }
  }
}

TEST_CASE("embed_base tables") {
  const OrderSpec fin2 = OrderSpec::finite(2);
  auto id = embed_base(fin2, kOmega, TableMapping{{BaseElem::left(0), BaseElem::left(1)}});
  CHECK(id(BaseElem::left(1)) == BaseElem::left(1));

  // Both pairs of the image checked by compare_base: (1,0) < (1,1).
  REQUIRE(compare_base(kOmegaFin2, BaseElem{1, 0}, BaseElem{1, 1}) < 0);
  auto into_tail = embed_base(fin2, kOmegaFin2, TableMapping{{BaseElem{1, 0}, BaseElem{1, 1}}});
  CHECK(into_tail(BaseElem::left(0)) == BaseElem{1, 0});

  try {
    embed_base(fin2, kOmega, TableMapping{{BaseElem::left(5), BaseElem::left(3)}});
    FAIL("expected NotMonotone");
  } catch (const NotMonotoneError& e) {
    CHECK(e.kind() == ErrorKind::NotMonotone);
    CHECK(e.pair() == std::pair{BaseElem::left(0), BaseElem::left(1)});
  }
  CHECK_THROWS_AS(embed_base(fin2, kOmegaFin2, TableMapping{{BaseElem{1, 0}, BaseElem{1, 2}}}),
                  Error);
  CHECK_THROWS_AS(embed_base(fin2, kOmega, TableMapping{{BaseElem::left(0)}}), Error);
}

TEST_CASE("embed_base rules") {
  auto inc = embed_base(kOmega, kOmegaFin3, InclusionRule{});
  CHECK(inc(BaseElem::left(9)) == BaseElem::left(9));
  auto tail = embed_base(kOmegaFin3, OrderSpec::omega_plus(kOmegaFin3), TailRule{});
  CHECK(tail(BaseElem{1, 2}) == BaseElem{2, 2});
  // Omega does not fit inside fin:3: the sample reaches w.3.
  CHECK_THROWS_AS(embed_base(kOmega, OrderSpec::finite(3), InclusionRule{}), Error);
  // ω+fin:3 into ω: the right part has no image.
  CHECK_THROWS_AS(embed_base(kOmegaFin3, kOmega, InclusionRule{}), Error);
}
