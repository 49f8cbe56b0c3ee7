#include "pi/gates.hpp"

#include <stdexcept>

namespace pi {

CombRef gate_cif(const CombRef& c1, const CombRef& c2) {
  if (!type_equal(c1->source, c1->target) ||
      !type_equal(c2->source, c2->target) ||
      !type_equal(c1->source, c2->source))
    throw TypeError("cif expects two endo-combinators on one type");
  TypeRef a = c1->source;
  TypeRef src = type_prod(type_bool(), a);
  CombRef d = make_prim(CombKind::Dist, src);
  CombRef branches = make_plus(make_times(make_id(type_one()), c1),
                               make_times(make_id(type_one()), c2));
  CombRef f = make_prim(CombKind::Factor, branches->target);
  return make_seq(d, make_seq(branches, f));
}

CombRef gate_x() { return make_prim(CombKind::SwapPlus, type_bool()); }

CombRef gate_cx() { return gate_cif(gate_x(), make_id(type_bool())); }

CombRef gate_ccx() {
  return gate_cif(gate_cx(), make_id(type_prod(type_bool(), type_bool())));
}

CombRef gate_x_at(std::size_t n) {
  if (n == 0) throw std::invalid_argument("no wires");
  if (n == 1) return gate_x();
  return make_times(gate_x(), make_id(type_bits(n - 1)));
}

CombRef gate_cx_at(std::size_t n) {
  if (n < 2) throw std::invalid_argument("cx needs 2 wires");
  CombRef flip = n == 2 ? gate_x() : gate_x_at(n - 1);
  return gate_cif(flip, make_id(flip->source));
}

CombRef gate_ccx_at(std::size_t n) {
  if (n < 3) throw std::invalid_argument("ccx needs 3 wires");
  return gate_cif(gate_cx_at(n - 1), make_id(type_bits(n - 1)));
}

namespace {

// swaps wires k and k+1 of B(n)
CombRef adjacent_wire_swap(std::size_t n, std::size_t k) {
  if (k + 2 == n) {
    // innermost pair: plain swap*
    CombRef s = make_prim(CombKind::SwapStar, type_prod(type_bool(), type_bool()));
    for (std::size_t depth = k; depth-- > 0;)
      s = make_times(make_id(type_bool()), s);
    return s;
  }
  // 2 x (2 x R): assocl* . (swap* (*) id) . assocr*
  TypeRef rest = type_bits(n - k - 2);
  TypeRef here = type_prod(type_bool(), type_prod(type_bool(), rest));
  CombRef a = make_prim(CombKind::AssoclStar, here);
  CombRef m = make_times(
      make_prim(CombKind::SwapStar, type_prod(type_bool(), type_bool())),
      make_id(rest));
  CombRef r = make_prim(CombKind::AssocrStar, m->target);
  CombRef s = make_seq(a, make_seq(m, r));
  for (std::size_t depth = k; depth-- > 0;)
    s = make_times(make_id(type_bool()), s);
  return s;
}

}  // namespace

CombRef wire_router(std::size_t n, const std::vector<std::uint32_t>& order) {
  if (order.size() != n) throw std::invalid_argument("order size mismatch");
  std::vector<bool> seen(n, false);
  for (std::uint32_t w : order) {
    if (w >= n || seen[w])
      throw std::invalid_argument("wire map is not a bijection");
    seen[w] = true;
  }
  CombRef result = make_id(type_bits(n));
  std::vector<std::uint32_t> arrangement(n);
  for (std::size_t i = 0; i < n; ++i)
    arrangement[i] = static_cast<std::uint32_t>(i);
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::size_t j = pos;
    while (arrangement[j] != order[pos]) ++j;
    for (std::size_t k = j; k > pos; --k) {
      result = make_seq(result, adjacent_wire_swap(n, k - 1));
      std::swap(arrangement[k], arrangement[k - 1]);
    }
  }
  return result;
}

}  // namespace pi
