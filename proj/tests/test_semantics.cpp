#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "pi/axioms.hpp"
#include "pi/formats.hpp"
#include "pi/gates.hpp"
#include "pi/parser.hpp"
#include "pi/semantics.hpp"

using namespace pi;

namespace {

const ValueRef tru = val_inl(val_tt());
const ValueRef fls = val_inr(val_tt());

}  // namespace

TEST_CASE("enumeration is canonical") {
  Enumeration two = enumerate(type_bool());
  REQUIRE(two.elements.size() == 2);
  CHECK(value_equal(two.elements[0], tru));
  CHECK(value_equal(two.elements[1], fls));

  Enumeration four = enumerate(type_prod(type_bool(), type_bool()));
  REQUIRE(four.elements.size() == 4);
  CHECK(value_equal(four.elements[0], val_pair(tru, tru)));
  CHECK(value_equal(four.elements[1], val_pair(tru, fls)));
  CHECK(value_equal(four.elements[2], val_pair(fls, tru)));
  CHECK(value_equal(four.elements[3], val_pair(fls, fls)));

  CHECK(enumerate(type_bits(3)).elements.size() == 8);
  CHECK(enumerate(type_zero()).elements.empty());
}

TEST_CASE("value_index inverts the enumeration") {
  oracle::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    TypeRef t = oracle::gen_type(rng, 12);
    Enumeration e = enumerate(t);
    for (std::size_t k = 0; k < e.elements.size(); ++k) {
      CHECK(value_index(t, e.elements[k]) == k);
      CHECK(value_equal(value_at(t, k), e.elements[k]));
    }
  }
}

TEST_CASE("swap+ and id evaluate per the big-step clauses") {
  CHECK(value_equal(eval_value(gate_x(), val_inl(val_tt())), val_inr(val_tt())));
  CombRef idc = make_id(type_bits(2));
  ValueRef v = val_pair(tru, fls);
  CHECK(value_equal(eval_value(idc, v), v));
}

TEST_CASE("cx maps (true, true) to (true, false)") {
  // hand-unfolded: dist . ((id x swap+) (+) (id x id)) . factor on (inl,(inl))
  ValueRef out = eval_value(gate_cx(), val_pair(tru, tru));
  CHECK(value_equal(out, val_pair(tru, fls)));
  CHECK(value_equal(eval_value(gate_cx(), val_pair(fls, tru)),
                    val_pair(fls, tru)));
}

TEST_CASE("unitor directions on 0 + A and A + 0") {
  TypeRef za = type_sum(type_zero(), type_bool());
  CombRef ul = make_prim(CombKind::UnitePlusL, za);
  CHECK(value_equal(eval_value(ul, val_inr(tru)), tru));
  CombRef uil = make_prim(CombKind::UnitiPlusL, type_bool());
  CHECK(value_equal(eval_value(uil, tru), val_inr(tru)));
  CombRef ur = make_prim(CombKind::UnitePlusR, type_sum(type_bool(), type_zero()));
  CHECK(value_equal(eval_value(ur, val_inl(fls)), fls));
}

TEST_CASE("eval rejects ill-typed inputs") {
  CHECK_THROWS_AS(eval_value(gate_x(), val_tt()), std::invalid_argument);
}

TEST_CASE("denote of id is the identity table") {
  CHECK(denote_comb(make_id(type_bits(3))).is_identity());
}

TEST_CASE("swap* at 2x3 sends i*3+j to j*2+i") {
  TypeRef three = type_sum(type_one(), type_bool());
  CombRef sw = make_prim(CombKind::SwapStar, type_prod(type_bool(), three));
  Permutation p = denote_comb(sw);
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 3; ++j)
      CHECK(p(i * 3 + j) == j * 2 + i);
}

TEST_CASE("seq composes and plus/times are block sum and tensor") {
  oracle::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    CombRef c1 = oracle::gen_comb(rng, 3, 8);
    CombRef c2 = oracle::gen_comb_from(rng, c1->target, 3);
    Permutation p1 = denote_comb(c1);
    Permutation p2 = denote_comb(c2);
    CHECK(denote_comb(make_seq(c1, c2)) == p1.then(p2));

    CombRef d = oracle::gen_comb(rng, 3, 6);
    Permutation q = denote_comb(d);
    Permutation ps = denote_comb(make_plus(c1, d));
    for (std::size_t k = 0; k < p1.size(); ++k) CHECK(ps(k) == p1(k));
    for (std::size_t k = 0; k < q.size(); ++k)
      CHECK(ps(p1.size() + k) == p1.size() + q(k));

    Permutation pt = denote_comb(make_times(c1, d));
    std::size_t m = q.size();
    for (std::size_t a = 0; a < p1.size(); ++a)
      for (std::size_t b = 0; b < m; ++b)
        CHECK(pt(a * m + b) == p1(a) * m + q(b));
  }
}

TEST_CASE("inverse composes to the identity") {
  oracle::Rng rng(23);
  for (int i = 0; i < 150; ++i) {
    CombRef c = oracle::gen_comb(rng, 4, 10);
    CHECK(denote_comb(make_seq(c, invert(c))).is_identity());
    CHECK(denote_comb(invert(c)) == denote_comb(c).inverse());
  }
}

TEST_CASE("reversibleOr denotes the expected table under the bits codec") {
  auto defs = parse_program(read_file(std::string(PI_DATA_DIR) + "/or1.pi"));
  REQUIRE(defs.size() == 1);
  Permutation p = to_bits_table(defs[0].comb->source, denote_comb(defs[0].comb));
  CHECK(p.table() ==
        std::vector<std::uint32_t>{0, 5, 6, 7, 4, 1, 2, 3});
}

TEST_CASE("bits codec round trips and reindexes") {
  TypeRef b3 = type_bits(3);
  for (std::uint64_t b = 0; b < 8; ++b)
    CHECK(bits_of_value(b3, value_of_bits(3, b)) == b);
  // (false, true, true) is encoded as 011 or 3
  ValueRef v = val_pair(fls, val_pair(tru, tru));
  CHECK(bits_of_value(b3, v) == 3);
  CHECK(show_bits(3, 3) == "011");
  // reindexing is inverse to itself
  oracle::Rng rng(4);
  Permutation p = denote_comb(oracle::gen_comb_from(rng, b3, 4));
  CHECK(from_bits_table(b3, to_bits_table(b3, p)) == p);
}

TEST_CASE("triangle, identity and hexagon axioms hold on small types") {
  TypeRef two = type_bool();
  CHECK(check_axiom2(ax_triangle_plus_l(two, two)));
  CHECK(check_axiom2(ax_idl_seq_l(gate_x())));
  CHECK(check_axiom2(ax_hexagonr_plus_l(type_one(), type_one(), type_one())));
}

TEST_CASE("every axiom family holds under random instantiation") {
  oracle::Rng rng(31);
  auto c_at = [&](const TypeRef& t) { return oracle::gen_comb_from(rng, t, 3); };
  auto c_any = [&] { return oracle::gen_comb(rng, 3, 8); };
  auto t_any = [&] { return oracle::gen_type(rng, 8); };
  auto zero_endo = [&] {
    CombRef c = oracle::gen_comb_from(rng, type_zero(), 2);
    return make_seq(c, invert(c));
  };
  for (int i = 0; i < 40; ++i) {
    CombRef c1 = c_any();
    CombRef c2 = c_at(c1->target);
    CombRef c3 = c_at(c2->target);
    CHECK(check_axiom2(ax_assoc_seq_l(c1, c2, c3)));
    CHECK(check_axiom2(ax_assoc_seq_r(c1, c2, c3)));
    CHECK(check_axiom2(ax_assocl_plus_l(c_any(), c_any(), c_any())));
    CHECK(check_axiom2(ax_assocr_plus_r(c_any(), c_any(), c_any())));
    CHECK(check_axiom2(ax_idl_seq_l(c_any())));
    CHECK(check_axiom2(ax_idr_seq_l(c_any())));
    CHECK(check_axiom2(ax_linv_seq_l(c_any())));
    CHECK(check_axiom2(ax_rinv_seq_l(c_any())));
    CombRef z = zero_endo();
    CHECK(check_axiom2(ax_unite_plus_l_l(z, c_any())));
    CHECK(check_axiom2(ax_uniti_plus_l_l(z, c_any())));
    CHECK(check_axiom2(ax_swapl_plus(c_any(), c_any())));
    CHECK(check_axiom2(ax_id_plus_id(t_any(), t_any())));
    CombRef f = c_any();
    CHECK(check_axiom2(ax_hom_plus_seq(c1, f, c2, c_at(f->target))));
    CHECK(check_axiom2(ax_triangle_plus_l(t_any(), t_any())));
    CHECK(check_axiom2(ax_pentagon_plus_l(t_any(), t_any(), t_any(), t_any())));
    CHECK(check_axiom2(ax_unite_l_coh_l(t_any())));
    CHECK(check_axiom2(ax_hexagonr_plus_l(t_any(), t_any(), t_any())));
    CHECK(check_axiom2(ax_hexagonl_plus_l(t_any(), t_any(), t_any())));
  }
}
