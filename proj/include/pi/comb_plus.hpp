#ifndef PI_COMB_PLUS_HPP
#define PI_COMB_PLUS_HPP

#include <cstddef>

#include "pi/comb.hpp"
#include "pi/types.hpp"

namespace pi {

// The additive fragment: types contain no products, the only unitor is the
// left one (0 + A <-> A).
enum class PlusKind { Id, Unite, Uniti, Swap, Assocl, Assocr, Seq, Plus };

struct CombPlus;
using PlusRef = std::shared_ptr<const CombPlus>;

struct CombPlus {
  PlusKind kind;
  TypeRef source;
  TypeRef target;
  PlusRef first;
  PlusRef second;
};

bool is_additive(const TypeRef& t);

PlusRef plus_prim(PlusKind k, const TypeRef& source);
PlusRef plus_id(const TypeRef& a);
PlusRef plus_seq(PlusRef a, PlusRef b);
PlusRef plus_plus(PlusRef a, PlusRef b);
PlusRef plus_invert(const PlusRef& c);

bool plus_equal(const PlusRef& a, const PlusRef& b);

// Injection into the full language; denotation goes through the interpreter.
CombRef plus_to_comb(const PlusRef& c);

const char* plus_kind_name(PlusKind k);

}  // namespace pi

#endif
