#include "pi/comb.hpp"

namespace pi {

namespace {

CombRef node(CombKind k, TypeRef src, TypeRef tgt, CombRef a = nullptr,
             CombRef b = nullptr) {
  return std::make_shared<Comb>(
      Comb{k, std::move(src), std::move(tgt), std::move(a), std::move(b)});
}

[[noreturn]] void shape_error(CombKind k, const TypeRef& t, const char* need) {
  throw TypeError(std::string(comb_kind_name(k)) + ": expected " + need +
                  ", got " + show_type(t));
}

bool is_sum(const TypeRef& t) { return t->kind == TypeKind::Sum; }
bool is_prod(const TypeRef& t) { return t->kind == TypeKind::Prod; }
bool is_zero(const TypeRef& t) { return t->kind == TypeKind::Zero; }
bool is_one(const TypeRef& t) { return t->kind == TypeKind::One; }

}  // namespace

const char* comb_kind_name(CombKind k) {
  switch (k) {
    case CombKind::Id: return "id";
    case CombKind::UnitePlusL: return "unite+l";
    case CombKind::UnitiPlusL: return "uniti+l";
    case CombKind::UnitePlusR: return "unite+r";
    case CombKind::UnitiPlusR: return "uniti+r";
    case CombKind::SwapPlus: return "swap+";
    case CombKind::AssoclPlus: return "assocl+";
    case CombKind::AssocrPlus: return "assocr+";
    case CombKind::UniteStarL: return "unite*l";
    case CombKind::UnitiStarL: return "uniti*l";
    case CombKind::UniteStarR: return "unite*r";
    case CombKind::UnitiStarR: return "uniti*r";
    case CombKind::SwapStar: return "swap*";
    case CombKind::AssoclStar: return "assocl*";
    case CombKind::AssocrStar: return "assocr*";
    case CombKind::Absorbr: return "absorbr";
    case CombKind::Factorzl: return "factorzl";
    case CombKind::Absorbl: return "absorbl";
    case CombKind::Factorzr: return "factorzr";
    case CombKind::Dist: return "dist";
    case CombKind::Factor: return "factor";
    case CombKind::Seq: return "seq";
    case CombKind::Plus: return "plus";
    case CombKind::Times: return "times";
  }
  return "?";
}

TypeRef prim_target(CombKind k, const TypeRef& s) {
  switch (k) {
    case CombKind::Id:
      return s;
    case CombKind::UnitePlusL:
      if (!is_sum(s) || !is_zero(s->left)) shape_error(k, s, "0 + A");
      return s->right;
    case CombKind::UnitiPlusL:
      return type_sum(type_zero(), s);
    case CombKind::UnitePlusR:
      if (!is_sum(s) || !is_zero(s->right)) shape_error(k, s, "A + 0");
      return s->left;
    case CombKind::UnitiPlusR:
      return type_sum(s, type_zero());
    case CombKind::SwapPlus:
      if (!is_sum(s)) shape_error(k, s, "A + B");
      return type_sum(s->right, s->left);
    case CombKind::AssoclPlus:
      if (!is_sum(s) || !is_sum(s->right)) shape_error(k, s, "A + (B + C)");
      return type_sum(type_sum(s->left, s->right->left), s->right->right);
    case CombKind::AssocrPlus:
      if (!is_sum(s) || !is_sum(s->left)) shape_error(k, s, "(A + B) + C");
      return type_sum(s->left->left, type_sum(s->left->right, s->right));
    case CombKind::UniteStarL:
      if (!is_prod(s) || !is_one(s->left)) shape_error(k, s, "1 * A");
      return s->right;
    case CombKind::UnitiStarL:
      return type_prod(type_one(), s);
    case CombKind::UniteStarR:
      if (!is_prod(s) || !is_one(s->right)) shape_error(k, s, "A * 1");
      return s->left;
    case CombKind::UnitiStarR:
      return type_prod(s, type_one());
    case CombKind::SwapStar:
      if (!is_prod(s)) shape_error(k, s, "A * B");
      return type_prod(s->right, s->left);
    case CombKind::AssoclStar:
      if (!is_prod(s) || !is_prod(s->right)) shape_error(k, s, "A * (B * C)");
      return type_prod(type_prod(s->left, s->right->left), s->right->right);
    case CombKind::AssocrStar:
      if (!is_prod(s) || !is_prod(s->left)) shape_error(k, s, "(A * B) * C");
      return type_prod(s->left->left, type_prod(s->left->right, s->right));
    case CombKind::Absorbr:
      if (!is_prod(s) || !is_zero(s->left)) shape_error(k, s, "0 * A");
      return type_zero();
    case CombKind::Absorbl:
      if (!is_prod(s) || !is_zero(s->right)) shape_error(k, s, "A * 0");
      return type_zero();
    case CombKind::Dist:
      if (!is_prod(s) || !is_sum(s->left)) shape_error(k, s, "(A + B) * C");
      return type_sum(type_prod(s->left->left, s->right),
                      type_prod(s->left->right, s->right));
    case CombKind::Factor: {
      if (!is_sum(s) || !is_prod(s->left) || !is_prod(s->right))
        shape_error(k, s, "(A * C) + (B * C)");
      if (!type_equal(s->left->right, s->right->right))
        shape_error(k, s, "(A * C) + (B * C) with equal C");
      return type_prod(type_sum(s->left->left, s->right->left), s->left->right);
    }
    case CombKind::Factorzl:
    case CombKind::Factorzr:
      throw TypeError(std::string(comb_kind_name(k)) +
                      ": target type is not determined by the source; "
                      "ascribe it");
    default:
      throw std::logic_error("prim_target on composite");
  }
}

TypeRef prim_source(CombKind k, const TypeRef& t) {
  switch (k) {
    case CombKind::Id: return t;
    case CombKind::UnitePlusL: return prim_target(CombKind::UnitiPlusL, t);
    case CombKind::UnitiPlusL: return prim_target(CombKind::UnitePlusL, t);
    case CombKind::UnitePlusR: return prim_target(CombKind::UnitiPlusR, t);
    case CombKind::UnitiPlusR: return prim_target(CombKind::UnitePlusR, t);
    case CombKind::SwapPlus: return prim_target(CombKind::SwapPlus, t);
    case CombKind::AssoclPlus: return prim_target(CombKind::AssocrPlus, t);
    case CombKind::AssocrPlus: return prim_target(CombKind::AssoclPlus, t);
    case CombKind::UniteStarL: return prim_target(CombKind::UnitiStarL, t);
    case CombKind::UnitiStarL: return prim_target(CombKind::UniteStarL, t);
    case CombKind::UniteStarR: return prim_target(CombKind::UnitiStarR, t);
    case CombKind::UnitiStarR: return prim_target(CombKind::UniteStarR, t);
    case CombKind::SwapStar: return prim_target(CombKind::SwapStar, t);
    case CombKind::AssoclStar: return prim_target(CombKind::AssocrStar, t);
    case CombKind::AssocrStar: return prim_target(CombKind::AssoclStar, t);
    case CombKind::Factorzl: {
      if (!is_prod(t) || !is_zero(t->left)) shape_error(k, t, "0 * A");
      return type_zero();
    }
    case CombKind::Factorzr: {
      if (!is_prod(t) || !is_zero(t->right)) shape_error(k, t, "A * 0");
      return type_zero();
    }
    case CombKind::Dist: return prim_target(CombKind::Factor, t);
    case CombKind::Factor: return prim_target(CombKind::Dist, t);
    case CombKind::Absorbr:
    case CombKind::Absorbl:
      throw TypeError(std::string(comb_kind_name(k)) +
                      ": source type is not determined by the target; "
                      "ascribe it");
    default:
      throw std::logic_error("prim_source on composite");
  }
}

CombRef make_prim(CombKind k, const TypeRef& source) {
  return node(k, source, prim_target(k, source));
}

CombRef make_id(const TypeRef& a) { return node(CombKind::Id, a, a); }

CombRef make_factorzl(const TypeRef& a) {
  return node(CombKind::Factorzl, type_zero(), type_prod(type_zero(), a));
}

CombRef make_factorzr(const TypeRef& a) {
  return node(CombKind::Factorzr, type_zero(), type_prod(a, type_zero()));
}

CombRef make_seq(CombRef c1, CombRef c2) {
  if (!type_equal(c1->target, c2->source))
    throw TypeError("seq: target " + show_type(c1->target) +
                    " does not match source " + show_type(c2->source));
  TypeRef s = c1->source, t = c2->target;
  return node(CombKind::Seq, std::move(s), std::move(t), std::move(c1),
              std::move(c2));
}

CombRef make_plus(CombRef c1, CombRef c2) {
  TypeRef s = type_sum(c1->source, c2->source);
  TypeRef t = type_sum(c1->target, c2->target);
  return node(CombKind::Plus, std::move(s), std::move(t), std::move(c1),
              std::move(c2));
}

CombRef make_times(CombRef c1, CombRef c2) {
  TypeRef s = type_prod(c1->source, c2->source);
  TypeRef t = type_prod(c1->target, c2->target);
  return node(CombKind::Times, std::move(s), std::move(t), std::move(c1),
              std::move(c2));
}

namespace {

CombKind invert_kind(CombKind k) {
  switch (k) {
    case CombKind::Id: return CombKind::Id;
    case CombKind::UnitePlusL: return CombKind::UnitiPlusL;
    case CombKind::UnitiPlusL: return CombKind::UnitePlusL;
    case CombKind::UnitePlusR: return CombKind::UnitiPlusR;
    case CombKind::UnitiPlusR: return CombKind::UnitePlusR;
    case CombKind::SwapPlus: return CombKind::SwapPlus;
    case CombKind::AssoclPlus: return CombKind::AssocrPlus;
    case CombKind::AssocrPlus: return CombKind::AssoclPlus;
    case CombKind::UniteStarL: return CombKind::UnitiStarL;
    case CombKind::UnitiStarL: return CombKind::UniteStarL;
    case CombKind::UniteStarR: return CombKind::UnitiStarR;
    case CombKind::UnitiStarR: return CombKind::UniteStarR;
    case CombKind::SwapStar: return CombKind::SwapStar;
    case CombKind::AssoclStar: return CombKind::AssocrStar;
    case CombKind::AssocrStar: return CombKind::AssoclStar;
    case CombKind::Absorbr: return CombKind::Factorzl;
    case CombKind::Factorzl: return CombKind::Absorbr;
    case CombKind::Absorbl: return CombKind::Factorzr;
    case CombKind::Factorzr: return CombKind::Absorbl;
    case CombKind::Dist: return CombKind::Factor;
    case CombKind::Factor: return CombKind::Dist;
    default: throw std::logic_error("invert_kind on composite");
  }
}

}  // namespace

CombRef invert(const CombRef& c) {
  switch (c->kind) {
    case CombKind::Seq:
      return node(CombKind::Seq, c->target, c->source, invert(c->second),
                  invert(c->first));
    case CombKind::Plus:
      return node(CombKind::Plus, c->target, c->source, invert(c->first),
                  invert(c->second));
    case CombKind::Times:
      return node(CombKind::Times, c->target, c->source, invert(c->first),
                  invert(c->second));
    default:
      return node(invert_kind(c->kind), c->target, c->source);
  }
}

bool comb_equal(const CombRef& a, const CombRef& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  if (!type_equal(a->source, b->source) || !type_equal(a->target, b->target))
    return false;
  switch (a->kind) {
    case CombKind::Seq:
    case CombKind::Plus:
    case CombKind::Times:
      return comb_equal(a->first, b->first) && comb_equal(a->second, b->second);
    default:
      return true;
  }
}

std::size_t comb_size(const CombRef& c) {
  switch (c->kind) {
    case CombKind::Seq:
    case CombKind::Plus:
    case CombKind::Times:
      return 1 + comb_size(c->first) + comb_size(c->second);
    default:
      return 1;
  }
}

std::pair<TypeRef, TypeRef> typecheck(const CombRef& c) {
  switch (c->kind) {
    case CombKind::Seq: {
      auto [s1, t1] = typecheck(c->first);
      auto [s2, t2] = typecheck(c->second);
      if (!type_equal(t1, s2))
        throw TypeError("seq: target " + show_type(t1) +
                        " does not match source " + show_type(s2));
      if (!type_equal(c->source, s1) || !type_equal(c->target, t2))
        throw TypeError("seq: annotation mismatch");
      return {c->source, c->target};
    }
    case CombKind::Plus:
    case CombKind::Times: {
      auto [s1, t1] = typecheck(c->first);
      auto [s2, t2] = typecheck(c->second);
      bool sum = c->kind == CombKind::Plus;
      TypeRef s = sum ? type_sum(s1, s2) : type_prod(s1, s2);
      TypeRef t = sum ? type_sum(t1, t2) : type_prod(t1, t2);
      if (!type_equal(c->source, s) || !type_equal(c->target, t))
        throw TypeError(std::string(comb_kind_name(c->kind)) +
                        ": annotation mismatch");
      return {c->source, c->target};
    }
    case CombKind::Factorzl:
    case CombKind::Factorzr: {
      TypeRef s = prim_source(c->kind, c->target);
      if (!type_equal(c->source, s))
        throw TypeError(std::string(comb_kind_name(c->kind)) +
                        ": annotation mismatch");
      return {c->source, c->target};
    }
    default: {
      TypeRef t = prim_target(c->kind, c->source);
      if (!type_equal(c->target, t))
        throw TypeError(std::string(comb_kind_name(c->kind)) +
                        ": annotation mismatch");
      return {c->source, c->target};
    }
  }
}

}  // namespace pi
