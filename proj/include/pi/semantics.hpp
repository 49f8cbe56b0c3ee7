#ifndef PI_SEMANTICS_HPP
#define PI_SEMANTICS_HPP

#include <cstdint>
#include <vector>

#include "pi/comb.hpp"
#include "pi/permutation.hpp"
#include "pi/types.hpp"

namespace pi {

// Canonical ordering of the inhabitants of a finite type: for sums all inl
// elements precede all inr elements, each in sub-order; for products
// lexicographic with the left component major. This single convention is
// shared by every module.
struct Enumeration {
  TypeRef type;
  std::vector<ValueRef> elements;
};

Enumeration enumerate(const TypeRef& t);

// Position of v in the canonical enumeration of t (arithmetic, no search).
std::uint64_t value_index(const TypeRef& t, const ValueRef& v);
ValueRef value_at(const TypeRef& t, std::uint64_t index);

// Big-step evaluation, one clause per combinator. Checks v : source(c).
ValueRef eval_value(const CombRef& c, const ValueRef& v);

// The permutation table of c under canonical enumerations.
Permutation denote_comb(const CombRef& c);

// Both sides of an instantiated level-2 axiom denote the same bijection.
// (Declared here; the axiom families themselves live in pi/axioms.hpp.)
bool denotes_equal(const CombRef& lhs, const CombRef& rhs);

// Bits codec for B(n): component i is bit i, leftmost component most
// significant; inl tt (true) is bit 1, inr tt (false) is bit 0. This codec is
// distinct from the canonical enumeration and is applied only at the bits
// boundary (qasm import, CLI bit strings, the reversibleOr table).
bool is_bits_type(const TypeRef& t, std::size_t* nbits = nullptr);
std::uint64_t bits_of_value(const TypeRef& t, const ValueRef& v);
ValueRef value_of_bits(std::size_t nbits, std::uint64_t bits);
std::string show_bits(std::size_t nbits, std::uint64_t bits);

// Reindexes a canonical-enumeration table of B(n) into bits indexing.
Permutation to_bits_table(const TypeRef& t, const Permutation& p);
Permutation from_bits_table(const TypeRef& t, const Permutation& p);

}  // namespace pi

#endif
