#include "pi/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace pi {

Word make_word(std::size_t degree, std::vector<std::uint32_t> letters) {
  for (std::uint32_t t : letters)
    if (t >= degree)
      throw std::invalid_argument("letter " + std::to_string(t) +
                                  " out of range for degree " +
                                  std::to_string(degree));
  return Word{degree, std::move(letters)};
}

bool shortlex_lt(const Word& a, const Word& b) {
  if (a.degree != b.degree) throw std::invalid_argument("degree mismatch");
  if (a.letters.size() != b.letters.size())
    return a.letters.size() < b.letters.size();
  return std::lexicographical_compare(a.letters.begin(), a.letters.end(),
                                      b.letters.begin(), b.letters.end());
}

Permutation word_to_perm(const Word& w) {
  std::vector<std::uint32_t> line(w.degree + 1);
  for (std::size_t i = 0; i <= w.degree; ++i)
    line[i] = static_cast<std::uint32_t>(i);
  for (std::uint32_t t : w.letters) std::swap(line[t], line[t + 1]);
  return Permutation(std::move(line));
}

Word word_mul(const Word& a, const Word& b) {
  if (a.degree != b.degree) throw std::invalid_argument("degree mismatch");
  Word r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

Word swoop(std::size_t n, std::size_t k) {
  Word w;
  w.degree = n + k;
  for (std::size_t i = k; i-- > 0;)
    w.letters.push_back(static_cast<std::uint32_t>(i + n));
  return w;
}

Word word_inv(const Word& w) {
  Word r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

std::string show_word(const Word& w) {
  std::string s = "n=" + std::to_string(w.degree) + " [";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.letters[i]);
  }
  s += ']';
  return s;
}

}  // namespace pi
