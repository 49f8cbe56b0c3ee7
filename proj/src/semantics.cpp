#include "pi/semantics.hpp"

#include <stdexcept>
#include <string>

namespace pi {

Enumeration enumerate(const TypeRef& t) {
  Enumeration e;
  e.type = t;
  switch (t->kind) {
    case TypeKind::Zero:
      break;
    case TypeKind::One:
      e.elements.push_back(val_tt());
      break;
    case TypeKind::Sum: {
      for (const auto& v : enumerate(t->left).elements)
        e.elements.push_back(val_inl(v));
      for (const auto& v : enumerate(t->right).elements)
        e.elements.push_back(val_inr(v));
      break;
    }
    case TypeKind::Prod: {
      Enumeration a = enumerate(t->left);
      Enumeration b = enumerate(t->right);
      for (const auto& va : a.elements)
        for (const auto& vb : b.elements) e.elements.push_back(val_pair(va, vb));
      break;
    }
  }
  return e;
}

std::uint64_t value_index(const TypeRef& t, const ValueRef& v) {
  switch (t->kind) {
    case TypeKind::Zero:
      throw std::invalid_argument("no value inhabits 0");
    case TypeKind::One:
      return 0;
    case TypeKind::Sum:
      if (v->kind == ValueKind::Inl) return value_index(t->left, v->left);
      if (v->kind == ValueKind::Inr)
        return cardinality(t->left) + value_index(t->right, v->left);
      throw std::invalid_argument("value does not inhabit sum type");
    case TypeKind::Prod:
      if (v->kind != ValueKind::Pair)
        throw std::invalid_argument("value does not inhabit product type");
      return value_index(t->left, v->left) * cardinality(t->right) +
             value_index(t->right, v->right);
  }
  throw std::logic_error("bad TypeKind");
}

ValueRef value_at(const TypeRef& t, std::uint64_t index) {
  switch (t->kind) {
    case TypeKind::Zero:
      throw std::invalid_argument("no value inhabits 0");
    case TypeKind::One:
      if (index != 0) throw std::invalid_argument("index out of range");
      return val_tt();
    case TypeKind::Sum: {
      std::uint64_t nl = cardinality(t->left);
      if (index < nl) return val_inl(value_at(t->left, index));
      return val_inr(value_at(t->right, index - nl));
    }
    case TypeKind::Prod: {
      std::uint64_t nr = cardinality(t->right);
      return val_pair(value_at(t->left, index / nr),
                      value_at(t->right, index % nr));
    }
  }
  throw std::logic_error("bad TypeKind");
}

namespace {

[[noreturn]] void stuck(const CombRef& c, const ValueRef& v) {
  throw std::logic_error(std::string("eval: ") + comb_kind_name(c->kind) +
                         " applied to " + show_value(v));
}

ValueRef eval_rec(const CombRef& c, const ValueRef& v) {
  switch (c->kind) {
    case CombKind::Id:
      return v;
    case CombKind::UnitePlusL:
      if (v->kind == ValueKind::Inr) return v->left;
      stuck(c, v);  // inl into 0 + A is impossible
    case CombKind::UnitiPlusL:
      return val_inr(v);
    case CombKind::UnitePlusR:
      if (v->kind == ValueKind::Inl) return v->left;
      stuck(c, v);
    case CombKind::UnitiPlusR:
      return val_inl(v);
    case CombKind::SwapPlus:
      if (v->kind == ValueKind::Inl) return val_inr(v->left);
      if (v->kind == ValueKind::Inr) return val_inl(v->left);
      stuck(c, v);
    case CombKind::AssoclPlus:
      if (v->kind == ValueKind::Inl) return val_inl(val_inl(v->left));
      if (v->kind == ValueKind::Inr && v->left->kind == ValueKind::Inl)
        return val_inl(val_inr(v->left->left));
      if (v->kind == ValueKind::Inr && v->left->kind == ValueKind::Inr)
        return val_inr(v->left->left);
      stuck(c, v);
    case CombKind::AssocrPlus:
      if (v->kind == ValueKind::Inl && v->left->kind == ValueKind::Inl)
        return val_inl(v->left->left);
      if (v->kind == ValueKind::Inl && v->left->kind == ValueKind::Inr)
        return val_inr(val_inl(v->left->left));
      if (v->kind == ValueKind::Inr) return val_inr(val_inr(v->left));
      stuck(c, v);
    case CombKind::UniteStarL:
      return v->right;
    case CombKind::UnitiStarL:
      return val_pair(val_tt(), v);
    case CombKind::UniteStarR:
      return v->left;
    case CombKind::UnitiStarR:
      return val_pair(v, val_tt());
    case CombKind::SwapStar:
      return val_pair(v->right, v->left);
    case CombKind::AssoclStar:
      return val_pair(val_pair(v->left, v->right->left), v->right->right);
    case CombKind::AssocrStar:
      return val_pair(v->left->left, val_pair(v->left->right, v->right));
    case CombKind::Absorbr:
    case CombKind::Absorbl:
    case CombKind::Factorzl:
    case CombKind::Factorzr:
      stuck(c, v);  // domain is empty
    case CombKind::Dist:
      if (v->left->kind == ValueKind::Inl)
        return val_inl(val_pair(v->left->left, v->right));
      if (v->left->kind == ValueKind::Inr)
        return val_inr(val_pair(v->left->left, v->right));
      stuck(c, v);
    case CombKind::Factor:
      if (v->kind == ValueKind::Inl)
        return val_pair(val_inl(v->left->left), v->left->right);
      if (v->kind == ValueKind::Inr)
        return val_pair(val_inr(v->left->left), v->left->right);
      stuck(c, v);
    case CombKind::Seq:
      return eval_rec(c->second, eval_rec(c->first, v));
    case CombKind::Plus:
      if (v->kind == ValueKind::Inl) return val_inl(eval_rec(c->first, v->left));
      if (v->kind == ValueKind::Inr)
        return val_inr(eval_rec(c->second, v->left));
      stuck(c, v);
    case CombKind::Times:
      return val_pair(eval_rec(c->first, v->left), eval_rec(c->second, v->right));
  }
  throw std::logic_error("bad CombKind");
}

}  // namespace

ValueRef eval_value(const CombRef& c, const ValueRef& v) {
  if (!has_type(v, c->source))
    throw std::invalid_argument("eval: value " + show_value(v) +
                                " does not inhabit " + show_type(c->source));
  return eval_rec(c, v);
}

Permutation denote_comb(const CombRef& c) {
  Enumeration src = enumerate(c->source);
  std::vector<std::uint32_t> table(src.elements.size());
  for (std::size_t i = 0; i < src.elements.size(); ++i)
    table[i] = static_cast<std::uint32_t>(
        value_index(c->target, eval_rec(c, src.elements[i])));
  return Permutation(std::move(table));  // throws if not bijective
}

bool denotes_equal(const CombRef& lhs, const CombRef& rhs) {
  if (!type_equal(lhs->source, rhs->source) ||
      !type_equal(lhs->target, rhs->target))
    throw TypeError("denotes_equal: sides have different types");
  return denote_comb(lhs) == denote_comb(rhs);
}

bool is_bits_type(const TypeRef& t, std::size_t* nbits) {
  std::size_t n = 0;
  const PiType* cur = t.get();
  for (;;) {
    if (cur->kind == TypeKind::Sum && cur->left->kind == TypeKind::One &&
        cur->right->kind == TypeKind::One) {
      ++n;
      break;
    }
    if (cur->kind == TypeKind::Prod && cur->left->kind == TypeKind::Sum &&
        cur->left->left->kind == TypeKind::One &&
        cur->left->right->kind == TypeKind::One) {
      ++n;
      cur = cur->right.get();
      continue;
    }
    return false;
  }
  if (nbits) *nbits = n;
  return true;
}

std::uint64_t bits_of_value(const TypeRef& t, const ValueRef& v) {
  std::size_t n = 0;
  if (!is_bits_type(t, &n)) throw std::invalid_argument("not a B(n) type");
  std::uint64_t bits = 0;
  const Value* cur = v.get();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Value* comp = cur->left.get();
    bits = (bits << 1) | (comp->kind == ValueKind::Inl ? 1u : 0u);
    cur = cur->right.get();
  }
  bits = (bits << 1) | (cur->kind == ValueKind::Inl ? 1u : 0u);
  return bits;
}

ValueRef value_of_bits(std::size_t nbits, std::uint64_t bits) {
  if (nbits == 0) throw std::invalid_argument("B(n) requires n >= 1");
  auto bit_value = [&](std::size_t i) {
    bool set = (bits >> (nbits - 1 - i)) & 1u;
    return set ? val_inl(val_tt()) : val_inr(val_tt());
  };
  ValueRef v = bit_value(nbits - 1);
  for (std::size_t i = nbits - 1; i-- > 0;) v = val_pair(bit_value(i), v);
  return v;
}

std::string show_bits(std::size_t nbits, std::uint64_t bits) {
  std::string s(nbits, '0');
  for (std::size_t i = 0; i < nbits; ++i)
    if ((bits >> (nbits - 1 - i)) & 1u) s[i] = '1';
  return s;
}

namespace {

// canonical index -> bits index
Permutation bits_reindex(const TypeRef& t) {
  std::size_t n = 0;
  if (!is_bits_type(t, &n)) throw std::invalid_argument("not a B(n) type");
  Enumeration e = enumerate(t);
  std::vector<std::uint32_t> r(e.elements.size());
  for (std::size_t i = 0; i < e.elements.size(); ++i)
    r[i] = static_cast<std::uint32_t>(bits_of_value(t, e.elements[i]));
  return Permutation(std::move(r));
}

}  // namespace

Permutation to_bits_table(const TypeRef& t, const Permutation& p) {
  Permutation r = bits_reindex(t);
  return r.inverse().then(p).then(r);
}

Permutation from_bits_table(const TypeRef& t, const Permutation& p) {
  Permutation r = bits_reindex(t);
  return r.then(p).then(r.inverse());
}

}  // namespace pi
