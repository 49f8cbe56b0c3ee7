#ifndef PI_WORD_HPP
#define PI_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pi/permutation.hpp"

namespace pi {

// A word over the Coxeter generators of S_{n+1}: letters drawn from
// {0..degree-1}, letter k transposing positions k and k+1 of a list of
// degree+1 elements.
struct Word {
  std::size_t degree = 0;
  std::vector<std::uint32_t> letters;

  friend bool operator==(const Word& a, const Word& b) {
    return a.degree == b.degree && a.letters == b.letters;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

Word make_word(std::size_t degree, std::vector<std::uint32_t> letters);

// length-major, then lexicographic; the termination measure
bool shortlex_lt(const Word& a, const Word& b);

// Start from the sorted list [0..n]; each letter t swaps positions t and t+1;
// the result is the one-line form read as p(i) = L[i].
Permutation word_to_perm(const Word& w);

Word word_mul(const Word& a, const Word& b);  // append
Word word_inv(const Word& w);                 // reverse

// The descending run [k-1+n, ..., n] of length k (degree n+k): the
// transposition sequence moving the element at index k+n left by k places.
Word swoop(std::size_t n, std::size_t k);

std::string show_word(const Word& w);  // "n=4 [0,1,0,3,2]"

}  // namespace pi

#endif
