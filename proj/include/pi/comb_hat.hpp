#ifndef PI_COMB_HAT_HPP
#define PI_COMB_HAT_HPP

#include <cstddef>
#include <memory>

#include "pi/permutation.hpp"
#include "pi/word.hpp"

namespace pi {

// The skeletal variant over naturals: Id(n); Swap at size n >= 2, transposing
// indices 0 and 1; Seq; Lift padding one fixed element in front.
enum class HatKind { Id, Swap, Seq, Lift };

struct CombHat;
using HatRef = std::shared_ptr<const CombHat>;

struct CombHat {
  HatKind kind;
  std::size_t size;
  HatRef first;
  HatRef second;  // Seq only
};

HatRef hat_id(std::size_t n);
HatRef hat_swap(std::size_t n);  // n >= 2
HatRef hat_seq(HatRef a, HatRef b);
HatRef hat_lift(HatRef c);
HatRef hat_lift_n(HatRef c, std::size_t k);

// Grows the ambient size without moving any index (Swap and Id absorb the
// padding; Lift/Seq distribute it).
HatRef pad_right(const HatRef& c, std::size_t extra);

// Sequence-order semantics: Seq(a, b) applies a first. Equal to
// word_to_perm(hat_to_word(c)) inverted -- the one directional inversion at
// this boundary; see hat_to_word.
Permutation hat_denote(const HatRef& c);

// Id -> [], Swap -> [0], Lift(c) -> map (+1), Seq -> concatenation.
Word hat_to_word(const HatRef& c);

// Letter k becomes Lift^k(Swap) padded to the declared size, joined by Seq in
// word order; rejects letters with k + 2 > size.
HatRef word_to_hat(const Word& w, std::size_t size);

std::size_t hat_node_count(const HatRef& c);

}  // namespace pi

#endif
