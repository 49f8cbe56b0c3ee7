#include "pi/permutation.hpp"

#include <stdexcept>
#include <string>

namespace pi {

Permutation::Permutation(std::vector<std::uint32_t> table)
    : table_(std::move(table)), inv_(table_.size(), 0) {
  std::vector<bool> seen(table_.size(), false);
  for (std::size_t i = 0; i < table_.size(); ++i) {
    std::uint32_t v = table_[i];
    if (v >= table_.size() || seen[v])
      throw std::invalid_argument("not a bijection on {0.." +
                                  std::to_string(table_.size()) + "-1}");
    seen[v] = true;
    inv_[v] = static_cast<std::uint32_t>(i);
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(t));
}

Permutation Permutation::transposition(std::size_t n, std::size_t k) {
  if (k + 1 >= n) throw std::invalid_argument("transposition out of range");
  Permutation p = identity(n);
  std::swap(p.table_[k], p.table_[k + 1]);
  std::swap(p.inv_[k], p.inv_[k + 1]);
  return p;
}

Permutation Permutation::then(const Permutation& q) const {
  if (size() != q.size()) throw std::invalid_argument("size mismatch");
  std::vector<std::uint32_t> t(size());
  for (std::size_t i = 0; i < size(); ++i) t[i] = q.table_[table_[i]];
  return Permutation(std::move(t));
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.table_ = inv_;
  p.inv_ = table_;
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] != i) return false;
  return true;
}

}  // namespace pi
