#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "pi/formats.hpp"
#include "pi/parser.hpp"
#include "pi/pipeline.hpp"
#include "pi/printer.hpp"
#include "pi/semantics.hpp"

using namespace pi;

namespace {

CombRef load(const std::string& file) {
  auto defs = parse_program(read_file(std::string(PI_DATA_DIR) + "/" + file));
  REQUIRE(!defs.empty());
  return defs.front().comb;
}

Permutation random_perm(oracle::Rng& rng, std::size_t n) {
  std::vector<std::uint32_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(t[i - 1], t[pick(rng)]);
  }
  return Permutation(std::move(t));
}

// the word the normal form is built from, read back off its blocks
std::vector<std::uint32_t> block_letters(const PlusRef& c) {
  std::vector<std::uint32_t> letters;
  PlusRef cur = c;
  while (cur->kind == PlusKind::Seq) {
    PlusRef blk = cur->first;
    std::uint32_t lifts = 0;
    while (blk->kind == PlusKind::Plus && blk->first->kind == PlusKind::Id &&
           type_equal(blk->first->source, type_one())) {
      ++lifts;
      blk = blk->second;
    }
    REQUIRE(blk->kind == PlusKind::Seq);  // the assocl/swap/assocr block
    REQUIRE(blk->first->kind == PlusKind::Assocl);
    letters.push_back(lifts);
    cur = cur->second;
  }
  REQUIRE(cur->kind == PlusKind::Id);  // trailing id
  return letters;
}

}  // namespace

TEST_CASE("interp agrees with the big-step interpreter") {
  CHECK(interp(make_id(type_bits(3))).is_identity());
  oracle::Rng rng(103);
  for (int i = 0; i < 300; ++i) {
    CombRef c = oracle::gen_comb(rng, 4, 12);
    CHECK(interp(c) == denote_comb(c));
  }
}

TEST_CASE("interp is a homomorphism") {
  oracle::Rng rng(107);
  for (int i = 0; i < 100; ++i) {
    CombRef c1 = oracle::gen_comb(rng, 3, 10);
    CombRef c2 = oracle::gen_comb_from(rng, c1->target, 3);
    CHECK(interp(make_seq(c1, c2)) == interp(c1).then(interp(c2)));
    CHECK(interp(invert(c1)) == interp(c1).inverse());
  }
}

TEST_CASE("reversibleOr interprets to the disjunction truth table") {
  CombRef or1 = load("or1.pi");
  Permutation p = to_bits_table(or1->source, interp(or1));
  CHECK(p.table() == std::vector<std::uint32_t>{0, 5, 6, 7, 4, 1, 2, 3});
}

TEST_CASE("norm1 produces the reversibleOrNorm block sequence") {
  CombRef or1 = load("or1.pi");
  CombRef or2 = load("or2.pi");
  PlusRef n1 = norm1(or1);
  PlusRef n2 = norm1(or2);
  CHECK(plus_equal(n1, n2));
  CHECK(block_letters(n1) ==
        std::vector<std::uint32_t>{2, 1, 0, 3, 2, 1, 0, 4, 3, 2, 1, 5, 4, 3, 2});
  CHECK(denote_comb(plus_to_comb(n1)) == interp(or1));
}

TEST_CASE("norm1 of the identity and of cancelling swaps") {
  PlusRef n = norm1(make_id(type_bool()));
  CHECK(n->kind == PlusKind::Id);
  CHECK(denote_comb(plus_to_comb(n)).is_identity());

  CombRef sw = make_prim(CombKind::SwapPlus, type_bool());
  CHECK(plus_equal(norm1(make_seq(sw, sw)), norm1(make_id(type_bool()))));
}

TEST_CASE("equiv decides program equivalence") {
  CombRef or1 = load("or1.pi");
  CombRef or2 = load("or2.pi");
  CHECK(equiv(or1, or2).equivalent);

  EquivResult r = equiv(make_id(type_bool()),
                        make_prim(CombKind::SwapPlus, type_bool()));
  CHECK_FALSE(r.equivalent);
  CHECK(r.witness == 0);

  CombRef i1 = load("intro1.pi");
  CombRef i2 = load("intro2.pi");
  CHECK(equiv(i1, i2).equivalent);
}

TEST_CASE("adequacy in both directions on random pairs") {
  oracle::Rng rng(109);
  for (int i = 0; i < 200; ++i) {
    CombRef c1 = oracle::gen_comb(rng, 3, 10);
    CombRef c2 = oracle::gen_comb_from(rng, c1->source, 3);
    CHECK(equiv(c1, c2).equivalent == (denote_comb(c1) == denote_comb(c2)));
    // a pair constructed to be equal
    CombRef padded = make_seq(c1, make_id(c1->target));
    CHECK(equiv(c1, padded).equivalent);
  }
}

TEST_CASE("synth round trips through interp") {
  CHECK(interp(plus_to_comb(synth(Permutation::identity(8)))).is_identity());
  oracle::Rng rng(113);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<std::size_t> nd(1, 10);
    Permutation p = random_perm(rng, nd(rng));
    CHECK(interp(plus_to_comb(synth(p))) == p);
  }
}

TEST_CASE("synth regenerates the normal form of the table it came from") {
  CombRef or1 = load("or1.pi");
  Permutation p = interp(or1);
  CHECK(plus_equal(synth(p), norm1(or1)));
}

TEST_CASE("synth at a structured type reshapes onto it") {
  oracle::Rng rng(127);
  for (int i = 0; i < 50; ++i) {
    TypeRef t = oracle::gen_type(rng, 10);
    if (cardinality(t) == 0) continue;
    Permutation p = random_perm(rng, cardinality(t));
    CombRef c = synth_at(p, t);
    CHECK(type_equal(c->source, t));
    CHECK(type_equal(c->target, t));
    CHECK(denote_comb(c) == p);
  }
  CHECK_THROWS_AS(synth_at(Permutation::identity(3), type_bool()), TypeError);
}

TEST_CASE("printed normal forms re-parse to the same denotation") {
  oracle::Rng rng(137);
  for (int i = 0; i < 50; ++i) {
    CombRef c = oracle::gen_comb(rng, 4, 10);
    PlusRef n = norm1(c);
    CombRef back = parse_comb(print_comb_plus(n), n->source, n->target);
    CHECK(denote_comb(back) == interp(c));
  }
}

TEST_CASE("normal forms re-normalize to themselves") {
  oracle::Rng rng(131);
  for (int i = 0; i < 100; ++i) {
    CombRef c = oracle::gen_comb(rng, 4, 10);
    PlusRef n = norm1(c);
    CHECK(plus_equal(norm1(plus_to_comb(n)), n));
  }
}
