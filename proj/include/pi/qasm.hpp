#ifndef PI_QASM_HPP
#define PI_QASM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pi/comb.hpp"

namespace pi {

enum class GateKind { X, CX, CCX };

struct QasmGate {
  GateKind kind;
  std::vector<std::uint32_t> operands;  // controls first, target last
};

struct QasmCircuit {
  std::size_t nqubits = 0;
  std::vector<QasmGate> gates;
};

// Subset frontend: one `qreg q[n];` declaration followed by x/cx/ccx
// statements on q[i] operands. Anything else is a hard parse error.
QasmCircuit parse_qasm(const std::string& text);

// The gate's operands are routed to the front, the padded gate applied, and
// the routing undone; gates compose in source order on B(nqubits).
CombRef qasm_to_pi(const QasmCircuit& circ);
CombRef qasm_gate_to_pi(std::size_t nqubits, const QasmGate& gate);

// Bit string after each gate, most significant bit at index 0.
std::vector<std::uint64_t> qasm_trace(const QasmCircuit& circ,
                                      std::uint64_t input_bits);

}  // namespace pi

#endif
