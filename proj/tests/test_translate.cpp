#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "pi/lehmer.hpp"
#include "pi/rewrite.hpp"
#include "pi/semantics.hpp"
#include "pi/translate.hpp"

using namespace pi;

namespace {

Permutation denote_plus(const PlusRef& c) { return denote_comb(plus_to_comb(c)); }

}  // namespace

TEST_CASE("times_encode unfolds multiplication as repeated addition") {
  TypeRef two = type_bool();
  CHECK(type_equal(times_encode(type_zero(), two), type_zero()));
  CHECK(type_equal(times_encode(type_one(), two), two));
  CHECK(type_equal(times_encode(two, two),
                   type_sum(two, two)));  // (1+1)+(1+1)
}

TEST_CASE("eval0 preserves cardinality") {
  oracle::Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    TypeRef t = oracle::gen_type(rng, 16);
    TypeRef e = eval0(t);
    CHECK(is_additive(e));
    CHECK(cardinality(e) == cardinality(t));
  }
}

TEST_CASE("the additive fragment maps homomorphically") {
  CombRef sw = make_prim(CombKind::SwapPlus, type_bool());
  PlusRef h = eval_pi_to_plus(sw);
  CHECK(h->kind == PlusKind::Swap);
}

TEST_CASE("dist at an expanded type is the literal identity") {
  TypeRef y = type_bool();
  CombRef d = make_prim(CombKind::Dist, type_prod(type_bool(), y));
  PlusRef h = eval_pi_to_plus(d);
  CHECK(h->kind == PlusKind::Id);
  CHECK(denote_plus(h) == denote_comb(d));
}

TEST_CASE("swap* at 2x2 denotes (0,2,1,3)") {
  CombRef sw = make_prim(CombKind::SwapStar, type_prod(type_bool(), type_bool()));
  PlusRef h = eval_pi_to_plus(sw);
  CHECK(denote_plus(h).table() == std::vector<std::uint32_t>{0, 2, 1, 3});
  CHECK(denote_plus(h) == denote_comb(sw));
}

TEST_CASE("pi to pi+ preserves denotation") {
  oracle::Rng rng(73);
  for (int i = 0; i < 300; ++i) {
    CombRef c = oracle::gen_comb(rng, 4, 12);
    PlusRef h = eval_pi_to_plus(c);
    CHECK(type_equal(h->source, eval0(c->source)));
    CHECK(type_equal(h->target, eval0(c->target)));
    CHECK(denote_plus(h) == denote_comb(c));
  }
}

TEST_CASE("big_swap structure and denotation") {
  CHECK(big_swap(1, 1)->kind == HatKind::Swap);
  CHECK(big_swap(0, 3)->kind == HatKind::Id);
  CHECK(big_swap(3, 0)->kind == HatKind::Id);
  CHECK(hat_denote(big_swap(1, 2)).table() ==
        std::vector<std::uint32_t>{2, 0, 1});
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; m <= 4; ++m) {
      Permutation p = hat_denote(big_swap(n, m));
      for (std::size_t i = 0; i < n; ++i) CHECK(p(i) == m + i);
      for (std::size_t j = 0; j < m; ++j) CHECK(p(n + j) == j);
      // symmetry of the braiding
      CHECK(hat_denote(hat_seq(big_swap(n, m), big_swap(m, n))).is_identity());
    }
}

TEST_CASE("pi+ to pi^ preserves denotation") {
  // assoc and unitors become identities
  TypeRef abc = type_sum(type_bool(), type_sum(type_one(), type_bool()));
  PlusRef al = plus_prim(PlusKind::Assocl, abc);
  CHECK(eval_plus_to_hat(al)->kind == HatKind::Id);

  PlusRef sw2 = plus_prim(PlusKind::Swap, type_sum(type_one(), type_one()));
  CHECK(eval_plus_to_hat(sw2)->kind == HatKind::Swap);

  PlusRef sw21 = plus_prim(PlusKind::Swap, type_sum(type_bool(), type_one()));
  CHECK(hat_denote(eval_plus_to_hat(sw21)).table() ==
        std::vector<std::uint32_t>{1, 2, 0});

  oracle::Rng rng(79);
  for (int i = 0; i < 300; ++i) {
    CombRef c = oracle::gen_comb(rng, 4, 12);
    PlusRef h = eval_pi_to_plus(c);
    HatRef k = eval_plus_to_hat(h);
    CHECK(k->size == cardinality(h->source));
    CHECK(hat_denote(k) == denote_plus(h));
  }
}

TEST_CASE("quote types are right-nested unit sums") {
  CHECK(type_equal(rlist_type(2), type_sum(type_one(), type_sum(type_one(), type_zero()))));
  CHECK(cardinality(rlist_type(7)) == 7);
}

TEST_CASE("quote of swap is the assocl-swap-assocr block") {
  PlusRef q = quote_hat_to_plus(hat_lift(hat_swap(2)));
  // id (+) (assocl+ ; (swap+ (+) id) ; assocr+)
  REQUIRE(q->kind == PlusKind::Plus);
  CHECK(q->first->kind == PlusKind::Id);
  const PlusRef& block = q->second;
  REQUIRE(block->kind == PlusKind::Seq);
  CHECK(block->first->kind == PlusKind::Assocl);
  REQUIRE(block->second->kind == PlusKind::Seq);
  CHECK(block->second->first->kind == PlusKind::Plus);
  CHECK(block->second->first->first->kind == PlusKind::Swap);
  CHECK(block->second->second->kind == PlusKind::Assocr);

  CHECK(quote_hat_to_plus(hat_id(3))->kind == PlusKind::Id);
}

TEST_CASE("pi^ to pi+ quote preserves denotation") {
  oracle::Rng rng(83);
  for (int i = 0; i < 200; ++i) {
    Word w = oracle::gen_word(rng, 6, 10);
    HatRef h = word_to_hat(w, 7);
    CHECK(denote_plus(quote_hat_to_plus(h)) == hat_denote(h));
  }
}

TEST_CASE("hat words round trip") {
  CHECK(hat_to_word(hat_lift(hat_swap(2))).letters ==
        std::vector<std::uint32_t>{1});
  oracle::Rng rng(89);
  for (int i = 0; i < 200; ++i) {
    Word w = oracle::gen_word(rng, 5, 10);
    CHECK(hat_to_word(word_to_hat(w, 6)) == w);
  }
  CHECK_THROWS_AS(word_to_hat(make_word(5, {4}), 4), std::invalid_argument);
}

TEST_CASE("word_to_hat denotes the reversal on three elements") {
  HatRef h = word_to_hat(make_word(2, {0, 1, 0}), 3);
  CHECK(hat_denote(h).table() == std::vector<std::uint32_t>{2, 1, 0});
}

TEST_CASE("hat denotation fixes one inversion at the word boundary") {
  CHECK(hat_denote(hat_id(4)).is_identity());
  CHECK(hat_denote(hat_swap(2)).table() == std::vector<std::uint32_t>{1, 0});
  oracle::Rng rng(97);
  for (int i = 0; i < 200; ++i) {
    Word w = oracle::gen_word(rng, 5, 12);
    // sequence-order semantics reads the word inverted relative to the
    // position-list action
    CHECK(hat_denote(word_to_hat(w, 6)) == word_to_perm(w).inverse());
  }
  // in particular the braiding's word normalizes to the canonical word of the
  // inverse block swap
  Word bw = hat_to_word(big_swap(1, 2));
  CHECK(nf(bw) == perm_to_word(hat_denote(big_swap(1, 2)).inverse()));
}

TEST_CASE("reshape onto the right-nested sum denotes the identity") {
  oracle::Rng rng(101);
  for (int i = 0; i < 100; ++i) {
    TypeRef t = oracle::gen_type(rng, 12);
    CombRef r = reshape_to_rlist(t);
    CHECK(type_equal(r->source, t));
    CHECK(type_equal(r->target, rlist_type(cardinality(t))));
    CHECK(denote_comb(r).is_identity());
  }
}
