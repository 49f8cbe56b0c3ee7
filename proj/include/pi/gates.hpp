#ifndef PI_GATES_HPP
#define PI_GATES_HPP

#include <cstdint>
#include <vector>

#include "pi/comb.hpp"

namespace pi {

// dist . ((id (*) c1) (+) (id (*) c2)) . factor; applies c1 when the boolean
// is true and c2 when it is false.
CombRef gate_cif(const CombRef& c1, const CombRef& c2);

CombRef gate_x();    // swap+ at 2
CombRef gate_cx();   // cif x id, at 2 * 2
CombRef gate_ccx();  // cif cx id, at B(3)

// x / cx / ccx acting on the leading wires of B(n), identity elsewhere.
CombRef gate_x_at(std::size_t nwires);
CombRef gate_cx_at(std::size_t nwires);
CombRef gate_ccx_at(std::size_t nwires);

// A swap*/assoc* composite on B(n) realizing a wire reordering: output
// component i carries input wire order[i]. Rejects non-bijective maps.
CombRef wire_router(std::size_t nwires, const std::vector<std::uint32_t>& order);

}  // namespace pi

#endif
