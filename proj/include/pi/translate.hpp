#ifndef PI_TRANSLATE_HPP
#define PI_TRANSLATE_HPP

#include "pi/comb.hpp"
#include "pi/comb_hat.hpp"
#include "pi/comb_plus.hpp"

namespace pi {

// Multiplication as repeated addition on additive types:
//   0 * Y = 0,  1 * Y = Y,  (X1 + X2) * Y = X1 * Y + X2 * Y
TypeRef times_encode(const TypeRef& x, const TypeRef& y);

// Type part of the Pi -> Pi+ translation: products expand via times_encode.
TypeRef eval0(const TypeRef& t);

// Pi -> Pi+: additive structure maps homomorphically, multiplicative
// primitives become additive composites over the times_encode-expanded types.
// Denotation-preserving: denote(plus_to_comb(result)) == denote_comb(c).
PlusRef eval_pi_to_plus(const CombRef& c);

// Pi+ -> Pi^: sizes remember only cardinality; unitors and associators become
// identities, swap+ becomes a braiding built from adjacent transpositions.
HatRef eval_plus_to_hat(const PlusRef& c);

// Block braiding n + m <-> m + n from adjacent transpositions: sends i to m+i
// for i < n and n+j to j for j < m.
HatRef big_swap(std::size_t n, std::size_t m);

// The right-nested sum 1 + (1 + ... + 0) with n ones.
TypeRef rlist_type(std::size_t n);

// Pi^ -> Pi+: Swap becomes assocl+ . (swap+ (+) id) . assocr+, Lift becomes
// id (+) -, sizes become rlist types.
PlusRef quote_hat_to_plus(const HatRef& c);

// Canonical reshaping T <-> rlist(|T|); denotes the identity table under the
// canonical enumerations.
CombRef reshape_to_rlist(const TypeRef& t);

}  // namespace pi

#endif
