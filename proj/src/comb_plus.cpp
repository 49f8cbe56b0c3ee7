#include "pi/comb_plus.hpp"

namespace pi {

namespace {

PlusRef node(PlusKind k, TypeRef s, TypeRef t, PlusRef a = nullptr,
             PlusRef b = nullptr) {
  return std::make_shared<CombPlus>(
      CombPlus{k, std::move(s), std::move(t), std::move(a), std::move(b)});
}

CombKind to_comb_kind(PlusKind k) {
  switch (k) {
    case PlusKind::Id: return CombKind::Id;
    case PlusKind::Unite: return CombKind::UnitePlusL;
    case PlusKind::Uniti: return CombKind::UnitiPlusL;
    case PlusKind::Swap: return CombKind::SwapPlus;
    case PlusKind::Assocl: return CombKind::AssoclPlus;
    case PlusKind::Assocr: return CombKind::AssocrPlus;
    case PlusKind::Seq: return CombKind::Seq;
    case PlusKind::Plus: return CombKind::Plus;
  }
  throw std::logic_error("bad PlusKind");
}

}  // namespace

bool is_additive(const TypeRef& t) {
  switch (t->kind) {
    case TypeKind::Zero:
    case TypeKind::One: return true;
    case TypeKind::Sum: return is_additive(t->left) && is_additive(t->right);
    case TypeKind::Prod: return false;
  }
  return false;
}

PlusRef plus_prim(PlusKind k, const TypeRef& source) {
  if (!is_additive(source))
    throw TypeError("additive combinator at non-additive type " +
                    show_type(source));
  switch (k) {
    case PlusKind::Id:
      return node(k, source, source);
    case PlusKind::Uniti:
      return node(k, source, type_sum(type_zero(), source));
    default:
      return node(k, source, prim_target(to_comb_kind(k), source));
  }
}

PlusRef plus_id(const TypeRef& a) { return plus_prim(PlusKind::Id, a); }

PlusRef plus_seq(PlusRef a, PlusRef b) {
  if (!type_equal(a->target, b->source))
    throw TypeError("seq: target " + show_type(a->target) +
                    " does not match source " + show_type(b->source));
  TypeRef s = a->source, t = b->target;
  return node(PlusKind::Seq, std::move(s), std::move(t), std::move(a),
              std::move(b));
}

PlusRef plus_plus(PlusRef a, PlusRef b) {
  TypeRef s = type_sum(a->source, b->source);
  TypeRef t = type_sum(a->target, b->target);
  return node(PlusKind::Plus, std::move(s), std::move(t), std::move(a),
              std::move(b));
}

PlusRef plus_invert(const PlusRef& c) {
  switch (c->kind) {
    case PlusKind::Id: return c;
    case PlusKind::Unite: return node(PlusKind::Uniti, c->target, c->source);
    case PlusKind::Uniti: return node(PlusKind::Unite, c->target, c->source);
    case PlusKind::Swap: return node(PlusKind::Swap, c->target, c->source);
    case PlusKind::Assocl: return node(PlusKind::Assocr, c->target, c->source);
    case PlusKind::Assocr: return node(PlusKind::Assocl, c->target, c->source);
    case PlusKind::Seq:
      return node(PlusKind::Seq, c->target, c->source, plus_invert(c->second),
                  plus_invert(c->first));
    case PlusKind::Plus:
      return node(PlusKind::Plus, c->target, c->source, plus_invert(c->first),
                  plus_invert(c->second));
  }
  throw std::logic_error("bad PlusKind");
}

bool plus_equal(const PlusRef& a, const PlusRef& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  if (!type_equal(a->source, b->source) || !type_equal(a->target, b->target))
    return false;
  if (a->kind == PlusKind::Seq || a->kind == PlusKind::Plus)
    return plus_equal(a->first, b->first) && plus_equal(a->second, b->second);
  return true;
}

CombRef plus_to_comb(const PlusRef& c) {
  switch (c->kind) {
    case PlusKind::Seq:
      return make_seq(plus_to_comb(c->first), plus_to_comb(c->second));
    case PlusKind::Plus:
      return make_plus(plus_to_comb(c->first), plus_to_comb(c->second));
    case PlusKind::Id:
      return make_id(c->source);
    default:
      return make_prim(to_comb_kind(c->kind), c->source);
  }
}

const char* plus_kind_name(PlusKind k) {
  switch (k) {
    case PlusKind::Id: return "id";
    case PlusKind::Unite: return "unite+l";
    case PlusKind::Uniti: return "uniti+l";
    case PlusKind::Swap: return "swap+";
    case PlusKind::Assocl: return "assocl+";
    case PlusKind::Assocr: return "assocr+";
    case PlusKind::Seq: return "seq";
    case PlusKind::Plus: return "plus";
  }
  return "?";
}

}  // namespace pi
