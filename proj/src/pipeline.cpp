#include "pi/pipeline.hpp"

#include "pi/lehmer.hpp"

namespace pi {

Permutation interp(const CombRef& c) {
  return hat_denote(eval_plus_to_hat(eval_pi_to_plus(c)));
}

PlusRef quote_perm(const Permutation& p) {
  Word w = perm_to_word(p.inverse());
  return quote_hat_to_plus(word_to_hat(w, p.size()));
}

PlusRef norm1(const CombRef& c) { return quote_perm(interp(c)); }

EquivResult equiv(const CombRef& c1, const CombRef& c2) {
  if (cardinality(c1->source) != cardinality(c2->source) ||
      cardinality(c1->target) != cardinality(c2->target))
    throw TypeError("equiv: cardinality mismatch (" +
                    std::to_string(cardinality(c1->source)) + " vs " +
                    std::to_string(cardinality(c2->source)) + ")");
  Permutation p1 = interp(c1);
  Permutation p2 = interp(c2);
  EquivResult r{false, nullptr};
  if (p1 == p2) {
    r.equivalent = true;
    r.normal_form = quote_perm(p1);
    return r;
  }
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (p1(i) != p2(i)) {
      r.witness = i;
      r.lhs_image = p1(i);
      r.rhs_image = p2(i);
      break;
    }
  }
  return r;
}

PlusRef synth(const Permutation& p) { return quote_perm(p); }

CombRef synth_at(const Permutation& p, const TypeRef& target_type) {
  if (cardinality(target_type) != p.size())
    throw TypeError("synth: type " + show_type(target_type) + " has " +
                    std::to_string(cardinality(target_type)) +
                    " elements, table has " + std::to_string(p.size()));
  CombRef reshape = reshape_to_rlist(target_type);
  CombRef core = plus_to_comb(quote_perm(p));
  return make_seq(reshape, make_seq(core, invert(reshape)));
}

}  // namespace pi
