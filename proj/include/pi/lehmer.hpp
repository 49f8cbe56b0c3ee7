#ifndef PI_LEHMER_HPP
#define PI_LEHMER_HPP

#include <string>
#include <vector>

#include "pi/permutation.hpp"
#include "pi/word.hpp"

namespace pi {

// Inversion-count digits of a permutation on n+1 elements: digits[i] <= i,
// digits[0] == 0. The normal-form certificate.
struct LehmerCode {
  std::vector<std::uint32_t> digits;

  friend bool operator==(const LehmerCode& a, const LehmerCode& b) {
    return a.digits == b.digits;
  }
  friend bool operator!=(const LehmerCode& a, const LehmerCode& b) {
    return !(a == b);
  }
};

LehmerCode make_code(std::vector<std::uint32_t> digits);  // checks invariants

// digit i counts the values j < i placed after value i in the one-line form
LehmerCode lehmer_encode(const Permutation& p);

// Insertion decoding: start from the sorted list; shift the element holding
// value k left by digits[k] places, k = 1..n.
Permutation lehmer_decode(const LehmerCode& c);

// The intermediate list after each k = 1..n (the decode table rows).
std::vector<std::vector<std::uint32_t>> lehmer_decode_trace(const LehmerCode& c);

// Canonical normal word of a code: the concatenation over k = 1..n of
// swoop(k - d_k, d_k). Always irreducible.
Word lehmer_em(const LehmerCode& c);

// em . encode: the unique normal word acting as p.
Word perm_to_word(const Permutation& p);

std::string show_code(const LehmerCode& c);  // "(0,1,2,0,2)"

}  // namespace pi

#endif
