#ifndef PI_TYPES_HPP
#define PI_TYPES_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace pi {

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(std::string msg, int line, int column);
};

struct TypeError : std::runtime_error {
  explicit TypeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Value types: 0 | 1 | A + B | A * B
enum class TypeKind { Zero, One, Sum, Prod };

struct PiType;
using TypeRef = std::shared_ptr<const PiType>;

struct PiType {
  TypeKind kind;
  TypeRef left;   // Sum/Prod
  TypeRef right;  // Sum/Prod
};

TypeRef type_zero();
TypeRef type_one();
TypeRef type_sum(TypeRef a, TypeRef b);
TypeRef type_prod(TypeRef a, TypeRef b);

// 2 = 1 + 1 (inl tt is true, inr tt is false)
TypeRef type_bool();
// B(n) = right-nested n-fold product of 2; requires n >= 1
TypeRef type_bits(std::size_t n);

std::uint64_t cardinality(const TypeRef& t);
bool type_equal(const TypeRef& a, const TypeRef& b);
std::string show_type(const TypeRef& t);

// Values: tt | inl v | inr v | (v, w)
enum class ValueKind { Tt, Inl, Inr, Pair };

struct Value;
using ValueRef = std::shared_ptr<const Value>;

struct Value {
  ValueKind kind;
  ValueRef left;   // Inl/Inr payload, Pair first
  ValueRef right;  // Pair second
};

ValueRef val_tt();
ValueRef val_inl(ValueRef v);
ValueRef val_inr(ValueRef v);
ValueRef val_pair(ValueRef v, ValueRef w);

bool value_equal(const ValueRef& a, const ValueRef& b);
bool has_type(const ValueRef& v, const TypeRef& t);
std::string show_value(const ValueRef& v);

}  // namespace pi

#endif
