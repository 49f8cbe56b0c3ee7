#include "pi/axioms.hpp"

#include "pi/semantics.hpp"

namespace pi {

namespace {

Axiom2 ax(std::string name, CombRef lhs, CombRef rhs) {
  if (!type_equal(lhs->source, rhs->source) ||
      !type_equal(lhs->target, rhs->target))
    throw TypeError(name + ": sides have different types");
  return Axiom2{std::move(name), std::move(lhs), std::move(rhs)};
}

Axiom2 flipped(const char* name, Axiom2 a) {
  return Axiom2{name, std::move(a.rhs), std::move(a.lhs)};
}

CombRef swap_at(const TypeRef& a, const TypeRef& b) {
  return make_prim(CombKind::SwapPlus, type_sum(a, b));
}

CombRef assocl_at(const TypeRef& a, const TypeRef& b, const TypeRef& c) {
  return make_prim(CombKind::AssoclPlus, type_sum(a, type_sum(b, c)));
}

CombRef assocr_at(const TypeRef& a, const TypeRef& b, const TypeRef& c) {
  return make_prim(CombKind::AssocrPlus, type_sum(type_sum(a, b), c));
}

CombRef unite_l_at(const TypeRef& a) {
  return make_prim(CombKind::UnitePlusL, type_sum(type_zero(), a));
}

CombRef unite_r_at(const TypeRef& a) {
  return make_prim(CombKind::UnitePlusR, type_sum(a, type_zero()));
}

}  // namespace

bool check_axiom2(const Axiom2& a) {
  typecheck(a.lhs);
  typecheck(a.rhs);
  return denotes_equal(a.lhs, a.rhs);
}

Axiom2 ax_assoc_seq_l(const CombRef& c1, const CombRef& c2, const CombRef& c3) {
  return ax("assoc.l", make_seq(c1, make_seq(c2, c3)),
            make_seq(make_seq(c1, c2), c3));
}

Axiom2 ax_assoc_seq_r(const CombRef& c1, const CombRef& c2, const CombRef& c3) {
  return flipped("assoc.r", ax_assoc_seq_l(c1, c2, c3));
}

Axiom2 ax_idl_seq_l(const CombRef& c) {
  return ax("idl.l", make_seq(make_id(c->source), c), c);
}
Axiom2 ax_idl_seq_r(const CombRef& c) { return flipped("idl.r", ax_idl_seq_l(c)); }

Axiom2 ax_idr_seq_l(const CombRef& c) {
  return ax("idr.l", make_seq(c, make_id(c->target)), c);
}
Axiom2 ax_idr_seq_r(const CombRef& c) { return flipped("idr.r", ax_idr_seq_l(c)); }

Axiom2 ax_linv_seq_l(const CombRef& c) {
  return ax("linv.l", make_seq(c, invert(c)), make_id(c->source));
}
Axiom2 ax_linv_seq_r(const CombRef& c) {
  return flipped("linv.r", ax_linv_seq_l(c));
}

Axiom2 ax_rinv_seq_l(const CombRef& c) {
  return ax("rinv.l", make_seq(invert(c), c), make_id(c->target));
}
Axiom2 ax_rinv_seq_r(const CombRef& c) {
  return flipped("rinv.r", ax_rinv_seq_l(c));
}

Axiom2 ax_assocl_plus_l(const CombRef& c1, const CombRef& c2, const CombRef& c3) {
  CombRef nested = make_plus(c1, make_plus(c2, c3));
  return ax("assocl+l", make_seq(nested, make_prim(CombKind::AssoclPlus, nested->target)),
            make_seq(make_prim(CombKind::AssoclPlus, nested->source),
                     make_plus(make_plus(c1, c2), c3)));
}

Axiom2 ax_assocl_plus_r(const CombRef& c1, const CombRef& c2, const CombRef& c3) {
  return flipped("assocl+r", ax_assocl_plus_l(c1, c2, c3));
}

Axiom2 ax_assocr_plus_r(const CombRef& c1, const CombRef& c2, const CombRef& c3) {
  CombRef nested = make_plus(make_plus(c1, c2), c3);
  return ax("assocr+r", make_seq(nested, make_prim(CombKind::AssocrPlus, nested->target)),
            make_seq(make_prim(CombKind::AssocrPlus, nested->source),
                     make_plus(c1, make_plus(c2, c3))));
}

Axiom2 ax_assocr_plus_l(const CombRef& c1, const CombRef& c2, const CombRef& c3) {
  return flipped("assocr+l", ax_assocr_plus_r(c1, c2, c3));
}

Axiom2 ax_unite_plus_l_l(const CombRef& c0, const CombRef& c) {
  if (c0->source->kind != TypeKind::Zero || c0->target->kind != TypeKind::Zero)
    throw TypeError("unite+l2: first argument must be 0 <-> 0");
  return ax("unite+l2.l", make_seq(unite_l_at(c->source), c),
            make_seq(make_plus(c0, c), unite_l_at(c->target)));
}
Axiom2 ax_unite_plus_l_r(const CombRef& c0, const CombRef& c) {
  return flipped("unite+l2.r", ax_unite_plus_l_l(c0, c));
}

Axiom2 ax_uniti_plus_l_l(const CombRef& c0, const CombRef& c) {
  if (c0->source->kind != TypeKind::Zero || c0->target->kind != TypeKind::Zero)
    throw TypeError("uniti+l2: first argument must be 0 <-> 0");
  return ax("uniti+l2.l",
            make_seq(make_prim(CombKind::UnitiPlusL, c->source), make_plus(c0, c)),
            make_seq(c, make_prim(CombKind::UnitiPlusL, c->target)));
}
Axiom2 ax_uniti_plus_l_r(const CombRef& c0, const CombRef& c) {
  return flipped("uniti+l2.r", ax_uniti_plus_l_l(c0, c));
}

Axiom2 ax_swapl_plus(const CombRef& c1, const CombRef& c2) {
  return ax("swapl+2",
            make_seq(swap_at(c2->source, c1->source), make_plus(c1, c2)),
            make_seq(make_plus(c2, c1), swap_at(c2->target, c1->target)));
}
Axiom2 ax_swapr_plus(const CombRef& c1, const CombRef& c2) {
  return flipped("swapr+2", ax_swapl_plus(c1, c2));
}

Axiom2 ax_id_plus_id(const TypeRef& a, const TypeRef& b) {
  return ax("id+id", make_plus(make_id(a), make_id(b)), make_id(type_sum(a, b)));
}
Axiom2 ax_split_plus_id(const TypeRef& a, const TypeRef& b) {
  return flipped("split+id", ax_id_plus_id(a, b));
}

Axiom2 ax_hom_plus_seq(const CombRef& c1, const CombRef& c2, const CombRef& c3,
                       const CombRef& c4) {
  return ax("hom+.", make_plus(make_seq(c1, c3), make_seq(c2, c4)),
            make_seq(make_plus(c1, c2), make_plus(c3, c4)));
}
Axiom2 ax_hom_seq_plus(const CombRef& c1, const CombRef& c2, const CombRef& c3,
                       const CombRef& c4) {
  return flipped("hom.+", ax_hom_plus_seq(c1, c2, c3, c4));
}

Axiom2 ax_triangle_plus_l(const TypeRef& a, const TypeRef& b) {
  return ax("triangle+l", make_plus(unite_r_at(a), make_id(b)),
            make_seq(assocr_at(a, type_zero(), b),
                     make_plus(make_id(a), unite_l_at(b))));
}
Axiom2 ax_triangle_plus_r(const TypeRef& a, const TypeRef& b) {
  return flipped("triangle+r", ax_triangle_plus_l(a, b));
}

Axiom2 ax_pentagon_plus_l(const TypeRef& a, const TypeRef& b, const TypeRef& c,
                          const TypeRef& d) {
  CombRef lhs = make_seq(assocr_at(type_sum(a, b), c, d),
                         assocr_at(a, b, type_sum(c, d)));
  CombRef rhs = make_seq(
      make_seq(make_plus(assocr_at(a, b, c), make_id(d)),
               assocr_at(a, type_sum(b, c), d)),
      make_plus(make_id(a), assocr_at(b, c, d)));
  return ax("pentagon+l", lhs, rhs);
}
Axiom2 ax_pentagon_plus_r(const TypeRef& a, const TypeRef& b, const TypeRef& c,
                          const TypeRef& d) {
  return flipped("pentagon+r", ax_pentagon_plus_l(a, b, c, d));
}

Axiom2 ax_unite_l_coh_l(const TypeRef& a) {
  return ax("unite+l-coh-l", unite_l_at(a),
            make_seq(swap_at(type_zero(), a), unite_r_at(a)));
}
Axiom2 ax_unite_l_coh_r(const TypeRef& a) {
  return flipped("unite+l-coh-r", ax_unite_l_coh_l(a));
}

Axiom2 ax_hexagonr_plus_l(const TypeRef& a, const TypeRef& b, const TypeRef& c) {
  CombRef lhs = make_seq(make_seq(assocr_at(a, b, c), swap_at(a, type_sum(b, c))),
                         assocr_at(b, c, a));
  CombRef rhs = make_seq(
      make_seq(make_plus(swap_at(a, b), make_id(c)), assocr_at(b, a, c)),
      make_plus(make_id(b), swap_at(a, c)));
  return ax("hexagonr+l", lhs, rhs);
}
Axiom2 ax_hexagonr_plus_r(const TypeRef& a, const TypeRef& b, const TypeRef& c) {
  return flipped("hexagonr+r", ax_hexagonr_plus_l(a, b, c));
}

Axiom2 ax_hexagonl_plus_l(const TypeRef& a, const TypeRef& b, const TypeRef& c) {
  CombRef lhs = make_seq(make_seq(assocl_at(a, b, c), swap_at(type_sum(a, b), c)),
                         assocl_at(c, a, b));
  CombRef rhs = make_seq(
      make_seq(make_plus(make_id(a), swap_at(b, c)), assocl_at(a, c, b)),
      make_plus(swap_at(a, c), make_id(b)));
  return ax("hexagonl+l", lhs, rhs);
}
Axiom2 ax_hexagonl_plus_r(const TypeRef& a, const TypeRef& b, const TypeRef& c) {
  return flipped("hexagonl+r", ax_hexagonl_plus_l(a, b, c));
}

Axiom2 ax_id2(const CombRef& c) { return ax("id2", c, c); }

Axiom2 ax_vertical(const Axiom2& a, const Axiom2& b) {
  if (!comb_equal(a.rhs, b.lhs))
    throw TypeError("vertical: middle combinators differ");
  return ax("vert(" + a.name + "," + b.name + ")", a.lhs, b.rhs);
}

Axiom2 ax_horizontal(const Axiom2& a, const Axiom2& b) {
  return ax("horiz(" + a.name + "," + b.name + ")", make_seq(a.lhs, b.lhs),
            make_seq(a.rhs, b.rhs));
}

Axiom2 ax_resp_plus(const Axiom2& a, const Axiom2& b) {
  return ax("resp+(" + a.name + "," + b.name + ")", make_plus(a.lhs, b.lhs),
            make_plus(a.rhs, b.rhs));
}

const std::vector<std::string>& axiom_family_names() {
  static const std::vector<std::string> names = {
      "assoc.l",      "assoc.r",      "assocl+l",     "assocl+r",
      "assocr+r",     "assocr+l",     "idl.l",        "idl.r",
      "idr.l",        "idr.r",        "linv.l",       "linv.r",
      "rinv.l",       "rinv.r",       "unite+l2.l",   "unite+l2.r",
      "uniti+l2.l",   "uniti+l2.r",   "swapl+2",      "swapr+2",
      "id+id",        "split+id",     "hom+.",        "hom.+",
      "triangle+l",   "triangle+r",   "pentagon+l",   "pentagon+r",
      "unite+l-coh-l", "unite+l-coh-r", "hexagonr+l",  "hexagonr+r",
      "hexagonl+l",   "hexagonl+r",   "id2",          "vertical",
      "horizontal",   "resp+",
  };
  return names;
}

}  // namespace pi
