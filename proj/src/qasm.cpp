#include "pi/qasm.hpp"

#include <algorithm>

#include "pi/gates.hpp"
#include "pi/semantics.hpp"

namespace pi {

namespace {

struct QasmCursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  void advance() {
    if (text[pos] == '\n') { ++line; col = 1; }
    else ++col;
    ++pos;
  }

  void skip_ws() {
    for (;;) {
      while (pos < text.size() && (peek() == ' ' || peek() == '\t' ||
                                   peek() == '\r' || peek() == '\n'))
        advance();
      if (pos + 1 < text.size() && text[pos] == '/' && text[pos + 1] == '/') {
        while (pos < text.size() && peek() != '\n') advance();
        continue;
      }
      return;
    }
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, col);
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           ((peek() >= 'a' && peek() <= 'z') || (peek() >= 'A' && peek() <= 'Z')))
      advance();
    return text.substr(start, pos - start);
  }

  std::uint32_t number() {
    skip_ws();
    if (peek() < '0' || peek() > '9') fail("expected a number");
    std::uint64_t n = 0;
    while (pos < text.size() && peek() >= '0' && peek() <= '9') {
      n = n * 10 + (peek() - '0');
      if (n > 1u << 20) fail("number out of range");
      advance();
    }
    return static_cast<std::uint32_t>(n);
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "' " + what);
    advance();
  }
};

std::uint32_t operand(QasmCursor& cur, std::size_t nqubits) {
  cur.expect('q', "register operand");
  cur.expect('[', "after register name");
  std::uint32_t idx = cur.number();
  cur.expect(']', "after qubit index");
  if (idx >= nqubits) cur.fail("qubit index out of range");
  return idx;
}

}  // namespace

QasmCircuit parse_qasm(const std::string& text) {
  QasmCursor cur{text};
  std::string head = cur.word();
  if (head != "qreg") cur.fail("expected a 'qreg q[n];' declaration");
  cur.expect('q', "register name");
  cur.expect('[', "after register name");
  std::uint32_t n = cur.number();
  cur.expect(']', "after register size");
  cur.expect(';', "after declaration");
  if (n == 0) cur.fail("register must hold at least one qubit");

  QasmCircuit circ;
  circ.nqubits = n;
  while (!cur.eof()) {
    std::string g = cur.word();
    GateKind kind;
    std::size_t arity;
    if (g == "x") { kind = GateKind::X; arity = 1; }
    else if (g == "cx") { kind = GateKind::CX; arity = 2; }
    else if (g == "ccx") { kind = GateKind::CCX; arity = 3; }
    else cur.fail("unknown gate '" + g + "'");
    QasmGate gate{kind, {}};
    for (std::size_t i = 0; i < arity; ++i) {
      if (i) cur.expect(',', "between operands");
      gate.operands.push_back(operand(cur, n));
    }
    cur.expect(';', "after statement");
    for (std::size_t i = 0; i < arity; ++i)
      for (std::size_t j = i + 1; j < arity; ++j)
        if (gate.operands[i] == gate.operands[j])
          cur.fail("repeated operand within one gate");
    circ.gates.push_back(std::move(gate));
  }
  return circ;
}

CombRef qasm_gate_to_pi(std::size_t n, const QasmGate& gate) {
  // to-front ordering: operands, then the remaining wires ascending
  std::vector<std::uint32_t> order = gate.operands;
  for (std::uint32_t w = 0; w < n; ++w)
    if (std::find(order.begin(), order.end(), w) == order.end())
      order.push_back(w);
  CombRef route = wire_router(n, order);
  CombRef g;
  switch (gate.kind) {
    case GateKind::X: g = gate_x_at(n); break;
    case GateKind::CX: g = gate_cx_at(n); break;
    case GateKind::CCX: g = gate_ccx_at(n); break;
  }
  return make_seq(route, make_seq(g, invert(route)));
}

CombRef qasm_to_pi(const QasmCircuit& circ) {
  CombRef c = make_id(type_bits(circ.nqubits));
  for (const QasmGate& g : circ.gates)
    c = make_seq(c, qasm_gate_to_pi(circ.nqubits, g));
  return c;
}

std::vector<std::uint64_t> qasm_trace(const QasmCircuit& circ,
                                      std::uint64_t input_bits) {
  TypeRef t = type_bits(circ.nqubits);
  ValueRef v = value_of_bits(circ.nqubits, input_bits);
  std::vector<std::uint64_t> stages;
  for (const QasmGate& g : circ.gates) {
    v = eval_value(qasm_gate_to_pi(circ.nqubits, g), v);
    stages.push_back(bits_of_value(t, v));
  }
  return stages;
}

}  // namespace pi
