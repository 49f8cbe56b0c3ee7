#include "pi/comb_hat.hpp"

#include <stdexcept>
#include <string>

namespace pi {

namespace {

HatRef node(HatKind k, std::size_t size, HatRef a = nullptr, HatRef b = nullptr) {
  return std::make_shared<CombHat>(CombHat{k, size, std::move(a), std::move(b)});
}

}  // namespace

HatRef hat_id(std::size_t n) { return node(HatKind::Id, n); }

HatRef hat_swap(std::size_t n) {
  if (n < 2) throw std::invalid_argument("swap requires size >= 2");
  return node(HatKind::Swap, n);
}

HatRef hat_seq(HatRef a, HatRef b) {
  if (a->size != b->size)
    throw std::invalid_argument("seq: size " + std::to_string(a->size) +
                                " vs " + std::to_string(b->size));
  std::size_t n = a->size;
  return node(HatKind::Seq, n, std::move(a), std::move(b));
}

HatRef hat_lift(HatRef c) {
  std::size_t n = c->size + 1;
  return node(HatKind::Lift, n, std::move(c));
}

HatRef hat_lift_n(HatRef c, std::size_t k) {
  HatRef r = std::move(c);
  for (std::size_t i = 0; i < k; ++i) r = hat_lift(r);
  return r;
}

HatRef pad_right(const HatRef& c, std::size_t extra) {
  if (extra == 0) return c;
  switch (c->kind) {
    case HatKind::Id: return hat_id(c->size + extra);
    case HatKind::Swap: return hat_swap(c->size + extra);
    case HatKind::Seq:
      return hat_seq(pad_right(c->first, extra), pad_right(c->second, extra));
    case HatKind::Lift: return hat_lift(pad_right(c->first, extra));
  }
  throw std::logic_error("bad HatKind");
}

namespace {

// offset-shifted action of c on the running table
void denote_into(const HatRef& c, std::size_t offset,
                 std::vector<std::uint32_t>& table) {
  switch (c->kind) {
    case HatKind::Id:
      return;
    case HatKind::Swap: {
      std::uint32_t a = static_cast<std::uint32_t>(offset);
      for (auto& x : table) {
        if (x == a) x = a + 1;
        else if (x == a + 1) x = a;
      }
      return;
    }
    case HatKind::Seq:
      denote_into(c->first, offset, table);
      denote_into(c->second, offset, table);
      return;
    case HatKind::Lift:
      denote_into(c->first, offset + 1, table);
      return;
  }
  throw std::logic_error("bad HatKind");
}

}  // namespace

Permutation hat_denote(const HatRef& c) {
  std::vector<std::uint32_t> table(c->size);
  for (std::size_t i = 0; i < c->size; ++i)
    table[i] = static_cast<std::uint32_t>(i);
  denote_into(c, 0, table);
  return Permutation(std::move(table));
}

namespace {

void collect_word(const HatRef& c, std::uint32_t shift,
                  std::vector<std::uint32_t>& out) {
  switch (c->kind) {
    case HatKind::Id: return;
    case HatKind::Swap: out.push_back(shift); return;
    case HatKind::Seq:
      collect_word(c->first, shift, out);
      collect_word(c->second, shift, out);
      return;
    case HatKind::Lift:
      collect_word(c->first, shift + 1, out);
      return;
  }
}

}  // namespace

Word hat_to_word(const HatRef& c) {
  Word w;
  w.degree = c->size > 0 ? c->size - 1 : 0;
  collect_word(c, 0, w.letters);
  return w;
}

HatRef word_to_hat(const Word& w, std::size_t size) {
  // right-nested chain ending in an explicit id block
  HatRef chain = hat_id(size);
  for (std::size_t i = w.letters.size(); i-- > 0;) {
    std::uint32_t k = w.letters[i];
    if (k + 2 > size)
      throw std::invalid_argument("letter " + std::to_string(k) +
                                  " out of range for size " +
                                  std::to_string(size));
    chain = hat_seq(hat_lift_n(hat_swap(size - k), k), std::move(chain));
  }
  return chain;
}

std::size_t hat_node_count(const HatRef& c) {
  switch (c->kind) {
    case HatKind::Id:
    case HatKind::Swap: return 1;
    case HatKind::Seq:
      return 1 + hat_node_count(c->first) + hat_node_count(c->second);
    case HatKind::Lift: return 1 + hat_node_count(c->first);
  }
  return 0;
}

}  // namespace pi
