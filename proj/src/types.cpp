#include "pi/types.hpp"

namespace pi {

ParseError::ParseError(std::string msg, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + std::move(msg)),
      line(line),
      column(column) {}

TypeRef type_zero() {
  static const TypeRef z = std::make_shared<PiType>(PiType{TypeKind::Zero, nullptr, nullptr});
  return z;
}

TypeRef type_one() {
  static const TypeRef o = std::make_shared<PiType>(PiType{TypeKind::One, nullptr, nullptr});
  return o;
}

TypeRef type_sum(TypeRef a, TypeRef b) {
  return std::make_shared<PiType>(PiType{TypeKind::Sum, std::move(a), std::move(b)});
}

TypeRef type_prod(TypeRef a, TypeRef b) {
  return std::make_shared<PiType>(PiType{TypeKind::Prod, std::move(a), std::move(b)});
}

TypeRef type_bool() {
  static const TypeRef b = type_sum(type_one(), type_one());
  return b;
}

TypeRef type_bits(std::size_t n) {
  if (n == 0) throw TypeError("B(n) requires n >= 1");
  TypeRef t = type_bool();
  for (std::size_t i = 1; i < n; ++i) t = type_prod(type_bool(), t);
  return t;
}

std::uint64_t cardinality(const TypeRef& t) {
  switch (t->kind) {
    case TypeKind::Zero: return 0;
    case TypeKind::One: return 1;
    case TypeKind::Sum: return cardinality(t->left) + cardinality(t->right);
    case TypeKind::Prod: return cardinality(t->left) * cardinality(t->right);
  }
  throw std::logic_error("bad TypeKind");
}

bool type_equal(const TypeRef& a, const TypeRef& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TypeKind::Zero:
    case TypeKind::One: return true;
    default: return type_equal(a->left, b->left) && type_equal(a->right, b->right);
  }
}

namespace {

// * binds tighter than +; both right-associative
void show_type_prec(const TypeRef& t, int prec, std::string& out) {
  switch (t->kind) {
    case TypeKind::Zero: out += '0'; return;
    case TypeKind::One: out += '1'; return;
    case TypeKind::Sum: {
      bool paren = prec > 0;
      if (paren) out += '(';
      show_type_prec(t->left, 1, out);
      out += " + ";
      show_type_prec(t->right, 0, out);
      if (paren) out += ')';
      return;
    }
    case TypeKind::Prod: {
      bool paren = prec > 1;
      if (paren) out += '(';
      show_type_prec(t->left, 2, out);
      out += " * ";
      show_type_prec(t->right, 1, out);
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace

std::string show_type(const TypeRef& t) {
  std::string out;
  show_type_prec(t, 0, out);
  return out;
}

ValueRef val_tt() {
  static const ValueRef v = std::make_shared<Value>(Value{ValueKind::Tt, nullptr, nullptr});
  return v;
}

ValueRef val_inl(ValueRef v) {
  return std::make_shared<Value>(Value{ValueKind::Inl, std::move(v), nullptr});
}

ValueRef val_inr(ValueRef v) {
  return std::make_shared<Value>(Value{ValueKind::Inr, std::move(v), nullptr});
}

ValueRef val_pair(ValueRef v, ValueRef w) {
  return std::make_shared<Value>(Value{ValueKind::Pair, std::move(v), std::move(w)});
}

bool value_equal(const ValueRef& a, const ValueRef& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ValueKind::Tt: return true;
    case ValueKind::Inl:
    case ValueKind::Inr: return value_equal(a->left, b->left);
    case ValueKind::Pair:
      return value_equal(a->left, b->left) && value_equal(a->right, b->right);
  }
  throw std::logic_error("bad ValueKind");
}

bool has_type(const ValueRef& v, const TypeRef& t) {
  switch (t->kind) {
    case TypeKind::Zero: return false;
    case TypeKind::One: return v->kind == ValueKind::Tt;
    case TypeKind::Sum:
      if (v->kind == ValueKind::Inl) return has_type(v->left, t->left);
      if (v->kind == ValueKind::Inr) return has_type(v->left, t->right);
      return false;
    case TypeKind::Prod:
      return v->kind == ValueKind::Pair && has_type(v->left, t->left) &&
             has_type(v->right, t->right);
  }
  throw std::logic_error("bad TypeKind");
}

std::string show_value(const ValueRef& v) {
  switch (v->kind) {
    case ValueKind::Tt: return "tt";
    case ValueKind::Inl: return "inl " + show_value(v->left);
    case ValueKind::Inr: return "inr " + show_value(v->left);
    case ValueKind::Pair:
      return "(" + show_value(v->left) + ", " + show_value(v->right) + ")";
  }
  throw std::logic_error("bad ValueKind");
}

}  // namespace pi
