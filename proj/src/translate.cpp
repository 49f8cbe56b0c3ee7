#include "pi/translate.hpp"

namespace pi {

TypeRef times_encode(const TypeRef& x, const TypeRef& y) {
  if (!is_additive(x) || !is_additive(y))
    throw TypeError("times_encode expects additive types");
  switch (x->kind) {
    case TypeKind::Zero: return type_zero();
    case TypeKind::One: return y;
    case TypeKind::Sum:
      return type_sum(times_encode(x->left, y), times_encode(x->right, y));
    default: throw std::logic_error("unreachable");
  }
}

TypeRef eval0(const TypeRef& t) {
  switch (t->kind) {
    case TypeKind::Zero:
    case TypeKind::One: return t;
    case TypeKind::Sum: return type_sum(eval0(t->left), eval0(t->right));
    case TypeKind::Prod: return times_encode(eval0(t->left), eval0(t->right));
  }
  throw std::logic_error("bad TypeKind");
}

namespace {

// te(X, 0) <-> 0
PlusRef zero_iso(const TypeRef& x) {
  switch (x->kind) {
    case TypeKind::Zero:
    case TypeKind::One:
      return plus_id(type_zero());
    case TypeKind::Sum: {
      PlusRef sides = plus_plus(zero_iso(x->left), zero_iso(x->right));
      return plus_seq(sides, plus_prim(PlusKind::Unite, sides->target));
    }
    default: throw std::logic_error("unreachable");
  }
}

// (P + Q) + (R + S) <-> (P + R) + (Q + S)
PlusRef interchange(const TypeRef& p, const TypeRef& q, const TypeRef& r,
                    const TypeRef& s) {
  TypeRef src = type_sum(type_sum(p, q), type_sum(r, s));
  PlusRef c = plus_prim(PlusKind::Assocr, src);                     // P+(Q+(R+S))
  c = plus_seq(c, plus_plus(plus_id(p),
                            plus_prim(PlusKind::Assocl, c->target->right)));
  // P+((Q+R)+S)
  PlusRef mid = plus_plus(plus_prim(PlusKind::Swap, type_sum(q, r)), plus_id(s));
  c = plus_seq(c, plus_plus(plus_id(p), mid));                      // P+((R+Q)+S)
  c = plus_seq(c, plus_plus(plus_id(p),
                            plus_prim(PlusKind::Assocr, c->target->right)));
  // P+(R+(Q+S))
  return plus_seq(c, plus_prim(PlusKind::Assocl, c->target));       // (P+R)+(Q+S)
}

// te(Y, X1) + te(Y, X2) <-> te(Y, X1 + X2)
PlusRef factor_left(const TypeRef& y, const TypeRef& x1, const TypeRef& x2) {
  switch (y->kind) {
    case TypeKind::Zero:
      return plus_prim(PlusKind::Unite, type_sum(type_zero(), type_zero()));
    case TypeKind::One:
      return plus_id(type_sum(x1, x2));
    case TypeKind::Sum: {
      PlusRef c = interchange(times_encode(y->left, x1),
                              times_encode(y->right, x1),
                              times_encode(y->left, x2),
                              times_encode(y->right, x2));
      return plus_seq(c, plus_plus(factor_left(y->left, x1, x2),
                                   factor_left(y->right, x1, x2)));
    }
    default: throw std::logic_error("unreachable");
  }
}

// te(X, Y) <-> te(Y, X); denotes the transpose of the lexicographic grid
PlusRef commute(const TypeRef& x, const TypeRef& y) {
  switch (x->kind) {
    case TypeKind::Zero:
      return plus_invert(zero_iso(y));
    case TypeKind::One:
      return plus_id(y);  // te(1,Y) = Y = te(Y,1)
    case TypeKind::Sum: {
      PlusRef sides = plus_plus(commute(x->left, y), commute(x->right, y));
      return plus_seq(sides, factor_left(y, x->left, x->right));
    }
    default: throw std::logic_error("unreachable");
  }
}

// te(X, te(Y, Z)) <-> te(te(X, Y), Z); both sides enumerate identically
PlusRef assoc_te(const TypeRef& x, const TypeRef& y, const TypeRef& z) {
  switch (x->kind) {
    case TypeKind::Zero:
      return plus_id(type_zero());
    case TypeKind::One:
      return plus_id(times_encode(y, z));
    case TypeKind::Sum:
      return plus_plus(assoc_te(x->left, y, z), assoc_te(x->right, y, z));
    default: throw std::logic_error("unreachable");
  }
}

// id_X (+times) h : te(X, C) <-> te(X, D)
PlusRef tensor_right(const TypeRef& x, const PlusRef& h) {
  switch (x->kind) {
    case TypeKind::Zero:
      return plus_id(type_zero());
    case TypeKind::One:
      return h;
    case TypeKind::Sum:
      return plus_plus(tensor_right(x->left, h), tensor_right(x->right, h));
    default: throw std::logic_error("unreachable");
  }
}

// h (+times) id_Y, via commutation: te(A, Y) <-> te(B, Y)
PlusRef tensor_left(const PlusRef& h, const TypeRef& y) {
  PlusRef c = commute(h->source, y);
  c = plus_seq(c, tensor_right(y, h));
  return plus_seq(c, commute(y, h->target));
}

}  // namespace

PlusRef eval_pi_to_plus(const CombRef& c) {
  TypeRef src = eval0(c->source);
  switch (c->kind) {
    case CombKind::Id:
      return plus_id(src);
    case CombKind::UnitePlusL:
      return plus_prim(PlusKind::Unite, src);
    case CombKind::UnitiPlusL:
      return plus_prim(PlusKind::Uniti, src);
    case CombKind::UnitePlusR:
      return plus_seq(plus_prim(PlusKind::Swap, src),
                      plus_prim(PlusKind::Unite, type_sum(src->right, src->left)));
    case CombKind::UnitiPlusR: {
      PlusRef c1 = plus_prim(PlusKind::Uniti, src);
      return plus_seq(c1, plus_prim(PlusKind::Swap, c1->target));
    }
    case CombKind::SwapPlus:
      return plus_prim(PlusKind::Swap, src);
    case CombKind::AssoclPlus:
      return plus_prim(PlusKind::Assocl, src);
    case CombKind::AssocrPlus:
      return plus_prim(PlusKind::Assocr, src);
    case CombKind::UniteStarL:
    case CombKind::UnitiStarL:
    case CombKind::UniteStarR:
    case CombKind::UnitiStarR:
      // te(1, X) = X and te(X, 1) = X definitionally
      return plus_id(src);
    case CombKind::SwapStar:
      return commute(eval0(c->source->left), eval0(c->source->right));
    case CombKind::AssoclStar:
      return assoc_te(eval0(c->source->left), eval0(c->source->right->left),
                      eval0(c->source->right->right));
    case CombKind::AssocrStar:
      return plus_invert(assoc_te(eval0(c->target->left),
                                  eval0(c->target->right->left),
                                  eval0(c->target->right->right)));
    case CombKind::Absorbr:
    case CombKind::Factorzl:
      return plus_id(type_zero());  // te(0, X) = 0 definitionally
    case CombKind::Absorbl:
      return zero_iso(eval0(c->source->left));
    case CombKind::Factorzr:
      return plus_invert(zero_iso(eval0(c->target->left)));
    case CombKind::Dist:
    case CombKind::Factor:
      // te(X1 + X2, Y) = te(X1, Y) + te(X2, Y) definitionally
      return plus_id(src);
    case CombKind::Seq:
      return plus_seq(eval_pi_to_plus(c->first), eval_pi_to_plus(c->second));
    case CombKind::Plus:
      return plus_plus(eval_pi_to_plus(c->first), eval_pi_to_plus(c->second));
    case CombKind::Times: {
      PlusRef h1 = eval_pi_to_plus(c->first);
      PlusRef h2 = eval_pi_to_plus(c->second);
      return plus_seq(tensor_left(h1, h2->source), tensor_right(h1->target, h2));
    }
  }
  throw std::logic_error("bad CombKind");
}

namespace {

// moves index 0 right past m elements: 0 -> m, 1+j -> j
HatRef move_front(std::size_t m) {
  if (m == 0) return hat_id(1);
  if (m == 1) return hat_swap(2);
  return hat_seq(hat_swap(1 + m), hat_lift(move_front(m - 1)));
}

}  // namespace

HatRef big_swap(std::size_t n, std::size_t m) {
  if (n == 0) return hat_id(m);
  if (m == 0) return hat_id(n);
  if (n == 1) return move_front(m);
  return hat_seq(hat_lift(big_swap(n - 1, m)),
                 pad_right(move_front(m), n - 1));
}

HatRef eval_plus_to_hat(const PlusRef& c) {
  std::size_t n = static_cast<std::size_t>(cardinality(c->source));
  switch (c->kind) {
    case PlusKind::Id:
    case PlusKind::Unite:
    case PlusKind::Uniti:
    case PlusKind::Assocl:
    case PlusKind::Assocr:
      return hat_id(n);
    case PlusKind::Swap:
      return big_swap(static_cast<std::size_t>(cardinality(c->source->left)),
                      static_cast<std::size_t>(cardinality(c->source->right)));
    case PlusKind::Seq:
      return hat_seq(eval_plus_to_hat(c->first), eval_plus_to_hat(c->second));
    case PlusKind::Plus: {
      std::size_t a = static_cast<std::size_t>(cardinality(c->first->source));
      std::size_t b = static_cast<std::size_t>(cardinality(c->second->source));
      return hat_seq(pad_right(eval_plus_to_hat(c->first), b),
                     hat_lift_n(eval_plus_to_hat(c->second), a));
    }
  }
  throw std::logic_error("bad PlusKind");
}

TypeRef rlist_type(std::size_t n) {
  TypeRef t = type_zero();
  for (std::size_t i = 0; i < n; ++i) t = type_sum(type_one(), t);
  return t;
}

PlusRef quote_hat_to_plus(const HatRef& c) {
  switch (c->kind) {
    case HatKind::Id:
      return plus_id(rlist_type(c->size));
    case HatKind::Swap: {
      TypeRef src = rlist_type(c->size);  // 1 + (1 + R)
      PlusRef a = plus_prim(PlusKind::Assocl, src);
      PlusRef m =
          plus_plus(plus_prim(PlusKind::Swap, type_sum(type_one(), type_one())),
                    plus_id(rlist_type(c->size - 2)));
      PlusRef r = plus_prim(PlusKind::Assocr, m->target);
      return plus_seq(a, plus_seq(m, r));
    }
    case HatKind::Seq:
      return plus_seq(quote_hat_to_plus(c->first), quote_hat_to_plus(c->second));
    case HatKind::Lift:
      return plus_plus(plus_id(type_one()), quote_hat_to_plus(c->first));
  }
  throw std::logic_error("bad HatKind");
}

namespace {

// rlist(a) + rlist(b) <-> rlist(a + b), preserving enumeration order
CombRef append_rlist(std::size_t a, std::size_t b) {
  if (a == 0)
    return make_prim(CombKind::UnitePlusL, type_sum(rlist_type(0), rlist_type(b)));
  CombRef c = make_prim(CombKind::AssocrPlus,
                        type_sum(rlist_type(a), rlist_type(b)));
  return make_seq(c, make_plus(make_id(type_one()), append_rlist(a - 1, b)));
}

}  // namespace

CombRef reshape_to_rlist(const TypeRef& t) {
  switch (t->kind) {
    case TypeKind::Zero:
      return make_id(type_zero());
    case TypeKind::One:
      return make_prim(CombKind::UnitiPlusR, type_one());  // 1 <-> 1 + 0
    case TypeKind::Sum: {
      std::size_t a = static_cast<std::size_t>(cardinality(t->left));
      std::size_t b = static_cast<std::size_t>(cardinality(t->right));
      CombRef sides =
          make_plus(reshape_to_rlist(t->left), reshape_to_rlist(t->right));
      return make_seq(sides, append_rlist(a, b));
    }
    case TypeKind::Prod: {
      const TypeRef& x = t->left;
      const TypeRef& y = t->right;
      switch (x->kind) {
        case TypeKind::Zero:
          return make_prim(CombKind::Absorbr, t);  // 0 * Y <-> 0 = rlist(0)
        case TypeKind::One:
          return make_seq(make_prim(CombKind::UniteStarL, t),
                          reshape_to_rlist(y));
        case TypeKind::Sum: {
          CombRef d = make_prim(CombKind::Dist, t);
          CombRef sides =
              make_plus(reshape_to_rlist(type_prod(x->left, y)),
                        reshape_to_rlist(type_prod(x->right, y)));
          std::size_t a = static_cast<std::size_t>(cardinality(x->left) *
                                                   cardinality(y));
          std::size_t b = static_cast<std::size_t>(cardinality(x->right) *
                                                   cardinality(y));
          return make_seq(d, make_seq(sides, append_rlist(a, b)));
        }
        case TypeKind::Prod: {
          CombRef r = make_prim(CombKind::AssocrStar, t);
          return make_seq(r, reshape_to_rlist(r->target));
        }
      }
      throw std::logic_error("bad TypeKind");
    }
  }
  throw std::logic_error("bad TypeKind");
}

}  // namespace pi
