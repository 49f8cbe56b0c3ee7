#include <catch2/catch_amalgamated.hpp>

#include "pi/comb_hat.hpp"
#include "pi/parser.hpp"
#include "pi/pipeline.hpp"
#include "pi/printer.hpp"
#include "pi/semantics.hpp"

using namespace pi;

namespace {

TypeRef two() { return type_bool(); }
TypeRef three() { return type_sum(type_one(), type_bool()); }

// one representative instantiation per primitive
std::vector<CombRef> primitive_sweep() {
  return {
      make_id(three()),
      make_prim(CombKind::UnitePlusL, type_sum(type_zero(), two())),
      make_prim(CombKind::UnitiPlusL, two()),
      make_prim(CombKind::UnitePlusR, type_sum(two(), type_zero())),
      make_prim(CombKind::UnitiPlusR, two()),
      make_prim(CombKind::SwapPlus, type_sum(two(), three())),
      make_prim(CombKind::AssoclPlus,
                type_sum(two(), type_sum(type_one(), two()))),
      make_prim(CombKind::AssocrPlus,
                type_sum(type_sum(two(), type_one()), two())),
      make_prim(CombKind::UniteStarL, type_prod(type_one(), two())),
      make_prim(CombKind::UnitiStarL, two()),
      make_prim(CombKind::UniteStarR, type_prod(two(), type_one())),
      make_prim(CombKind::UnitiStarR, two()),
      make_prim(CombKind::SwapStar, type_prod(two(), three())),
      make_prim(CombKind::AssoclStar,
                type_prod(two(), type_prod(three(), two()))),
      make_prim(CombKind::AssocrStar,
                type_prod(type_prod(two(), three()), two())),
      make_prim(CombKind::Absorbr, type_prod(type_zero(), two())),
      make_factorzl(two()),
      make_prim(CombKind::Absorbl, type_prod(two(), type_zero())),
      make_factorzr(two()),
      make_prim(CombKind::Dist, type_prod(type_sum(two(), type_one()), two())),
      make_prim(CombKind::Factor,
                type_sum(type_prod(two(), three()), type_prod(type_one(), three()))),
  };
}

}  // namespace

TEST_CASE("every primitive composes with its partner to the identity") {
  for (const CombRef& c : primitive_sweep()) {
    CAPTURE(comb_kind_name(c->kind));
    CHECK(denote_comb(make_seq(c, invert(c))).is_identity());
    CHECK(denote_comb(make_seq(invert(c), c)).is_identity());
    CHECK(cardinality(c->source) == cardinality(c->target));
  }
}

TEST_CASE("every primitive survives the print/parse round trip") {
  for (const CombRef& c : primitive_sweep()) {
    CAPTURE(print_comb(c));
    CombRef back = parse_comb(print_comb(c), c->source, c->target);
    CHECK(comb_equal(back, c));
  }
}

TEST_CASE("type and value text round trips") {
  for (const CombRef& c : primitive_sweep()) {
    TypeRef t = c->source;
    CHECK(type_equal(parse_type(show_type(t)), t));
    for (const ValueRef& v : enumerate(t).elements)
      CHECK(value_equal(parse_value(show_value(v), t), v));
  }
}

TEST_CASE("every primitive translates denotation-preservingly") {
  for (const CombRef& c : primitive_sweep()) {
    CAPTURE(comb_kind_name(c->kind));
    PlusRef h = eval_pi_to_plus(c);
    CHECK(denote_comb(plus_to_comb(h)) == denote_comb(c));
    CHECK(hat_denote(eval_plus_to_hat(h)) == denote_comb(c));
    CHECK(interp(c) == denote_comb(c));
  }
}

TEST_CASE("the pipeline handles empty types") {
  CombRef z = make_seq(make_factorzl(type_bool()), invert(make_factorzl(type_bool())));
  CHECK(interp(z).size() == 0);
  EquivResult r = equiv(z, make_id(type_zero()));
  CHECK(r.equivalent);
  CHECK(r.normal_form->kind == PlusKind::Id);
  CHECK(plus_equal(norm1(z), norm1(make_id(type_zero()))));
}

TEST_CASE("malformed surface text is rejected, never crashes") {
  CHECK(parse_program("").empty());
  CHECK(parse_program("# only a comment\n").empty());
  const char* bad[] = {
      "f",
      "f :",
      "f : 1 <-> 1 =",
      "f : 1 <-> 1 = nonsense",
      "f : 1 + <-> 1 = id",
      "f : 1 <-> 1 = id ; ",
      "f : 1 <-> 1 = (id",
      "f : 1 <-> 1 = cif(id)",
      "f : 2 <-> 2 = id",       // 2 is not a type literal
      "f : 1 <-> 1 = idx",
      "f : 1 <-> 1 = swap+l",
      "f : 1 + 1 <-> 1 + 1 = x (+)",
      "f : 0 <-> 0 = factorzl",  // ambiguous target
      "f : 1 <-> 1 = id = id",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_program(text), std::exception);
  }
}

TEST_CASE("hat constructors enforce their size side conditions") {
  CHECK_THROWS_AS(hat_swap(1), std::invalid_argument);
  CHECK_THROWS_AS(hat_seq(hat_id(2), hat_id(3)), std::invalid_argument);
  CHECK(hat_lift(hat_id(2))->size == 3);
  CHECK(pad_right(hat_swap(2), 2)->size == 4);
}

TEST_CASE("permutation tables reject non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 2}), std::invalid_argument);
  Permutation p({1, 2, 0});
  CHECK(p.inverse().then(p).is_identity());
}
