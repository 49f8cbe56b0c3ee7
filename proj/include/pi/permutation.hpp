#ifndef PI_PERMUTATION_HPP
#define PI_PERMUTATION_HPP

#include <cstdint>
#include <vector>

namespace pi {

// Total bijective lookup table on {0..n-1}: table[i] is the image of i.
// Bijectivity is checked at construction; the inverse is cached.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> table);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t k);  // swaps k, k+1

  std::size_t size() const { return table_.size(); }
  std::uint32_t operator()(std::size_t i) const { return table_[i]; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  const std::vector<std::uint32_t>& inverse_table() const { return inv_; }

  // apply *this first, then q
  Permutation then(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.table_ == b.table_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }

 private:
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
};

}  // namespace pi

#endif
