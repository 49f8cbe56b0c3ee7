#ifndef PI_AXIOMS_HPP
#define PI_AXIOMS_HPP

#include <string>
#include <vector>

#include "pi/comb.hpp"

namespace pi {

// A fully instantiated level-2 axiom: two well-typed combinators of one type.
// check_axiom2 decides whether they denote the same bijection.
struct Axiom2 {
  std::string name;
  CombRef lhs;
  CombRef rhs;
};

bool check_axiom2(const Axiom2& a);

// -- identity, inverse and associativity laws of sequential composition
Axiom2 ax_assoc_seq_l(const CombRef& c1, const CombRef& c2, const CombRef& c3);
Axiom2 ax_assoc_seq_r(const CombRef& c1, const CombRef& c2, const CombRef& c3);
Axiom2 ax_idl_seq_l(const CombRef& c);
Axiom2 ax_idl_seq_r(const CombRef& c);
Axiom2 ax_idr_seq_l(const CombRef& c);
Axiom2 ax_idr_seq_r(const CombRef& c);
Axiom2 ax_linv_seq_l(const CombRef& c);
Axiom2 ax_linv_seq_r(const CombRef& c);
Axiom2 ax_rinv_seq_l(const CombRef& c);
Axiom2 ax_rinv_seq_r(const CombRef& c);

// -- naturality of the additive structure maps
Axiom2 ax_assocl_plus_l(const CombRef& c1, const CombRef& c2, const CombRef& c3);
Axiom2 ax_assocl_plus_r(const CombRef& c1, const CombRef& c2, const CombRef& c3);
Axiom2 ax_assocr_plus_r(const CombRef& c1, const CombRef& c2, const CombRef& c3);
Axiom2 ax_assocr_plus_l(const CombRef& c1, const CombRef& c2, const CombRef& c3);
Axiom2 ax_unite_plus_l_l(const CombRef& c0, const CombRef& c);  // c0 : 0 <-> 0
Axiom2 ax_unite_plus_l_r(const CombRef& c0, const CombRef& c);
Axiom2 ax_uniti_plus_l_l(const CombRef& c0, const CombRef& c);
Axiom2 ax_uniti_plus_l_r(const CombRef& c0, const CombRef& c);
Axiom2 ax_swapl_plus(const CombRef& c1, const CombRef& c2);
Axiom2 ax_swapr_plus(const CombRef& c1, const CombRef& c2);

// -- functoriality of (+)
Axiom2 ax_id_plus_id(const TypeRef& a, const TypeRef& b);
Axiom2 ax_split_plus_id(const TypeRef& a, const TypeRef& b);
Axiom2 ax_hom_plus_seq(const CombRef& c1, const CombRef& c2, const CombRef& c3,
                       const CombRef& c4);
Axiom2 ax_hom_seq_plus(const CombRef& c1, const CombRef& c2, const CombRef& c3,
                       const CombRef& c4);

// -- Mac Lane coherence for the additive monoidal structure
Axiom2 ax_triangle_plus_l(const TypeRef& a, const TypeRef& b);
Axiom2 ax_triangle_plus_r(const TypeRef& a, const TypeRef& b);
Axiom2 ax_pentagon_plus_l(const TypeRef& a, const TypeRef& b, const TypeRef& c,
                          const TypeRef& d);
Axiom2 ax_pentagon_plus_r(const TypeRef& a, const TypeRef& b, const TypeRef& c,
                          const TypeRef& d);
Axiom2 ax_unite_l_coh_l(const TypeRef& a);
Axiom2 ax_unite_l_coh_r(const TypeRef& a);
Axiom2 ax_hexagonr_plus_l(const TypeRef& a, const TypeRef& b, const TypeRef& c);
Axiom2 ax_hexagonr_plus_r(const TypeRef& a, const TypeRef& b, const TypeRef& c);
Axiom2 ax_hexagonl_plus_l(const TypeRef& a, const TypeRef& b, const TypeRef& c);
Axiom2 ax_hexagonl_plus_r(const TypeRef& a, const TypeRef& b, const TypeRef& c);

// -- closure forms
Axiom2 ax_id2(const CombRef& c);
Axiom2 ax_vertical(const Axiom2& a, const Axiom2& b);    // rhs(a) == lhs(b)
Axiom2 ax_horizontal(const Axiom2& a, const Axiom2& b);  // seq congruence
Axiom2 ax_resp_plus(const Axiom2& a, const Axiom2& b);   // (+) congruence

// Names of all primitive families plus the closure forms, for test drivers.
const std::vector<std::string>& axiom_family_names();

}  // namespace pi

#endif
