#ifndef PI_PIPELINE_HPP
#define PI_PIPELINE_HPP

#include <optional>

#include "pi/comb.hpp"
#include "pi/comb_plus.hpp"
#include "pi/permutation.hpp"
#include "pi/translate.hpp"

namespace pi {

// Normalization-by-evaluation semantics: hat_denote . eval_plus_to_hat .
// eval_pi_to_plus. Agrees with denote_comb as a table.
Permutation interp(const CombRef& c);

// Quote direction of the NbE round trip on tables. The table is inverted
// before Lehmer encoding; together with hat_denote's sequence-order reading
// this is the single directional inversion at the word boundary (the quoted
// program reads its blocks first-to-last while words act last-letter-first).
PlusRef quote_perm(const Permutation& p);

// quote_perm . interp: the canonical Pi+ normal form of c. Structurally equal
// outputs exactly when the interpretations coincide.
PlusRef norm1(const CombRef& c);

struct EquivResult {
  bool equivalent;
  PlusRef normal_form;               // shared normal form when equivalent
  std::size_t witness = 0;           // least differing input index otherwise
  std::uint32_t lhs_image = 0;
  std::uint32_t rhs_image = 0;
};

EquivResult equiv(const CombRef& c1, const CombRef& c2);

// Program synthesis from a permutation table; denotes exactly p. With a
// target type (|target| == p.size()) the result is reshaped onto that type.
PlusRef synth(const Permutation& p);
CombRef synth_at(const Permutation& p, const TypeRef& target_type);

}  // namespace pi

#endif
