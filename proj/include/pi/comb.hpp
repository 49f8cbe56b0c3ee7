#ifndef PI_COMB_HPP
#define PI_COMB_HPP

#include <cstddef>
#include <utility>

#include "pi/types.hpp"

namespace pi {

// Level-1 combinators. Every node carries source/target annotations and is
// well-typed by construction: the make_* functions reject mismatches.
enum class CombKind {
  Id,
  UnitePlusL,  // 0 + A <-> A
  UnitiPlusL,  // A <-> 0 + A
  UnitePlusR,  // A + 0 <-> A
  UnitiPlusR,  // A <-> A + 0
  SwapPlus,    // A + B <-> B + A
  AssoclPlus,  // A + (B + C) <-> (A + B) + C
  AssocrPlus,  // (A + B) + C <-> A + (B + C)
  UniteStarL,  // 1 * A <-> A
  UnitiStarL,  // A <-> 1 * A
  UniteStarR,  // A * 1 <-> A
  UnitiStarR,  // A <-> A * 1
  SwapStar,    // A * B <-> B * A
  AssoclStar,  // A * (B * C) <-> (A * B) * C
  AssocrStar,  // (A * B) * C <-> A * (B * C)
  Absorbr,     // 0 * A <-> 0
  Factorzl,    // 0 <-> 0 * A
  Absorbl,     // A * 0 <-> 0
  Factorzr,    // 0 <-> A * 0
  Dist,        // (A + B) * C <-> (A * C) + (B * C)
  Factor,      // (A * C) + (B * C) <-> (A + B) * C
  Seq,
  Plus,
  Times,
};

struct Comb;
using CombRef = std::shared_ptr<const Comb>;

struct Comb {
  CombKind kind;
  TypeRef source;
  TypeRef target;
  CombRef first;   // Seq/Plus/Times
  CombRef second;  // Seq/Plus/Times
};

// Type of a primitive from its source (throws TypeError if the source does
// not have the required shape; Factorzl/Factorzr are not inferable this way).
TypeRef prim_target(CombKind k, const TypeRef& src);
// Dual direction, used by the elaborator to type factorzl/factorzr in context.
TypeRef prim_source(CombKind k, const TypeRef& tgt);

CombRef make_prim(CombKind k, const TypeRef& source);
CombRef make_id(const TypeRef& a);
CombRef make_factorzl(const TypeRef& a);  // 0 <-> 0 * a
CombRef make_factorzr(const TypeRef& a);  // 0 <-> a * 0
CombRef make_seq(CombRef c1, CombRef c2);
CombRef make_plus(CombRef c1, CombRef c2);
CombRef make_times(CombRef c1, CombRef c2);

// Each primitive maps to its partner (swap to itself, assocl to assocr,
// dist to factor, ...); Seq reverses, Plus/Times go componentwise.
CombRef invert(const CombRef& c);

bool comb_equal(const CombRef& a, const CombRef& b);
std::size_t comb_size(const CombRef& c);

// Re-derives every annotation and checks the node-local side conditions;
// returns (source, target).
std::pair<TypeRef, TypeRef> typecheck(const CombRef& c);

const char* comb_kind_name(CombKind k);

}  // namespace pi

#endif
