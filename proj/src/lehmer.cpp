#include "pi/lehmer.hpp"

#include <stdexcept>

namespace pi {

LehmerCode make_code(std::vector<std::uint32_t> digits) {
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[i] > i)
      throw std::invalid_argument("lehmer digit " + std::to_string(digits[i]) +
                                  " exceeds its position " + std::to_string(i));
  return LehmerCode{std::move(digits)};
}

LehmerCode lehmer_encode(const Permutation& p) {
  const auto& pos = p.inverse_table();  // pos[v] = position of value v
  std::size_t n = p.size();
  std::vector<std::uint32_t> digits(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t d = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (pos[j] > pos[i]) ++d;
    digits[i] = d;
  }
  return LehmerCode{std::move(digits)};
}

std::vector<std::vector<std::uint32_t>> lehmer_decode_trace(
    const LehmerCode& code) {
  make_code(code.digits);  // validate
  std::size_t n = code.digits.size();
  std::vector<std::uint32_t> line(n);
  for (std::size_t i = 0; i < n; ++i) line[i] = static_cast<std::uint32_t>(i);
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t k = 1; k < n; ++k) {
    std::size_t at = 0;
    while (line[at] != k) ++at;
    std::size_t to = at - code.digits[k];
    for (std::size_t j = at; j > to; --j) line[j] = line[j - 1];
    line[to] = static_cast<std::uint32_t>(k);
    rows.push_back(line);
  }
  return rows;
}

Permutation lehmer_decode(const LehmerCode& code) {
  if (code.digits.empty()) return Permutation(std::vector<std::uint32_t>{});
  auto rows = lehmer_decode_trace(code);
  if (rows.empty()) return Permutation::identity(code.digits.size());
  return Permutation(rows.back());
}

Word lehmer_em(const LehmerCode& code) {
  make_code(code.digits);
  std::size_t n = code.digits.size();
  Word w;
  w.degree = n > 0 ? n - 1 : 0;
  for (std::size_t k = 1; k < n; ++k) {
    std::uint32_t d = code.digits[k];
    // swoop(k - d, d) = [k-1, ..., k-d]
    for (std::uint32_t i = 0; i < d; ++i)
      w.letters.push_back(static_cast<std::uint32_t>(k - 1 - i));
  }
  return w;
}

Word perm_to_word(const Permutation& p) {
  return lehmer_em(lehmer_encode(p));
}

std::string show_code(const LehmerCode& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.digits.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c.digits[i]);
  }
  s += ')';
  return s;
}

}  // namespace pi
