#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pi/cli.hpp"
#include "pi/formats.hpp"
#include "pi/gates.hpp"
#include "pi/parser.hpp"
#include "pi/pipeline.hpp"
#include "pi/qasm.hpp"
#include "pi/semantics.hpp"

using namespace pi;

namespace {

const std::string kData = PI_DATA_DIR;

std::string qasm_text(const std::string& name) {
  return read_file(kData + "/" + name);
}

// gate-level truth table of the circuit, bits-indexed
std::vector<std::uint32_t> circuit_table(const QasmCircuit& circ) {
  std::vector<std::uint32_t> table(1u << circ.nqubits);
  for (std::uint64_t b = 0; b < table.size(); ++b) {
    auto stages = qasm_trace(circ, b);
    table[b] = static_cast<std::uint32_t>(stages.empty() ? b : stages.back());
  }
  return table;
}

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli_run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("qasm parser accepts the two disjunction circuits") {
  QasmCircuit left = parse_qasm(qasm_text("or_left.qasm"));
  REQUIRE(left.nqubits == 3);
  REQUIRE(left.gates.size() == 3);
  CHECK(left.gates[0].kind == GateKind::CCX);
  CHECK(left.gates[0].operands == std::vector<std::uint32_t>{1, 2, 0});
  CHECK(left.gates[1].operands == std::vector<std::uint32_t>{1, 0});
  CHECK(left.gates[2].operands == std::vector<std::uint32_t>{2, 0});

  QasmCircuit right = parse_qasm(qasm_text("or_right.qasm"));
  REQUIRE(right.gates.size() == 4);
  CHECK(right.gates[0].kind == GateKind::CX);
  CHECK(right.gates[1].kind == GateKind::X);
  CHECK(right.gates[1].operands == std::vector<std::uint32_t>{1});
  CHECK(right.gates[2].kind == GateKind::CCX);
  CHECK(right.gates[3].kind == GateKind::X);

  QasmCircuit empty = parse_qasm("qreg q[2];");
  CHECK(empty.gates.empty());
  CHECK(denote_comb(qasm_to_pi(empty)).is_identity());
}

TEST_CASE("qasm parser rejects everything outside the subset") {
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\nh q[0];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\ncx q[0], q[2];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\ncx q[0], q[0];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\nqreg q[2];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("creg c[2];"), ParseError);
}

TEST_CASE("imported circuits compute the reversible disjunction") {
  for (const char* name : {"or_left.qasm", "or_right.qasm"}) {
    QasmCircuit circ = parse_qasm(qasm_text(name));
    CombRef c = qasm_to_pi(circ);
    Permutation p = to_bits_table(c->source, denote_comb(c));
    CHECK(p.table() == std::vector<std::uint32_t>{0, 5, 6, 7, 4, 1, 2, 3});
    // full truth table: (h xor (b1 or b2), b1, b2)
    for (std::uint32_t b = 0; b < 8; ++b) {
      std::uint32_t h = (b >> 2) & 1, b1 = (b >> 1) & 1, b2 = b & 1;
      std::uint32_t expect = ((h ^ (b1 | b2)) << 2) | (b1 << 1) | b2;
      CHECK(p(b) == expect);
    }
    CHECK(circuit_table(circ) == p.table());
  }
}

TEST_CASE("gate-by-gate traces match the narrative") {
  QasmCircuit left = parse_qasm(qasm_text("or_left.qasm"));
  CHECK(qasm_trace(left, 0b011) == std::vector<std::uint64_t>{0b111, 0b011, 0b111});
  QasmCircuit right = parse_qasm(qasm_text("or_right.qasm"));
  CHECK(qasm_trace(right, 0b011) ==
        std::vector<std::uint64_t>{0b111, 0b101, 0b101, 0b111});
}

TEST_CASE("single x on one qubit is the x gate") {
  QasmCircuit circ = parse_qasm("qreg q[1];\nx q[0];");
  CombRef c = qasm_to_pi(circ);
  CHECK(denote_comb(c) == denote_comb(gate_x()));
}

TEST_CASE("file formats parse and reject malformed input") {
  Word w = parse_word_text("n=4 [0,1,0,3,2]");
  CHECK(w.degree == 4);
  CHECK(w.letters == std::vector<std::uint32_t>{0, 1, 0, 3, 2});
  CHECK(parse_word_text("n=3 [] # empty").letters.empty());
  CHECK_THROWS_AS(parse_word_text("n=2 [5]"), std::exception);

  Permutation p = parse_perm_text("n=8 [0,5,6,7,4,1,2,3]");
  CHECK(p(1) == 5);
  CHECK_THROWS_AS(parse_perm_text("n=3 [0,1]"), ParseError);
  CHECK_THROWS_AS(parse_perm_text("n=3 [0,1,1]"), ParseError);

  LehmerCode c = parse_code_text("(0,1,2,0,2)");
  CHECK(c.digits == std::vector<std::uint32_t>{0, 1, 2, 0, 2});
  CHECK_THROWS_AS(parse_code_text("(1)"), ParseError);
}

TEST_CASE("cli equiv distinguishes programs and sets exit codes") {
  auto r = cli({"equiv", kData + "/or1.pi", kData + "/or2.pi"});
  CHECK(r.status == 0);
  CHECK(r.out.find("equivalent") == 0);

  auto bad = cli({"equiv", kData + "/intro1.pi", kData + "/or1.pi"});
  CHECK(bad.status == 2);  // cardinality mismatch

  auto usage = cli({"frobnicate"});
  CHECK(usage.status == 2);
}

TEST_CASE("cli is deterministic") {
  auto a = cli({"norm", kData + "/or1.pi"});
  auto b = cli({"norm", kData + "/or1.pi"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  auto c = cli({"import-qasm", kData + "/or_left.qasm"});
  auto d = cli({"import-qasm", kData + "/or_left.qasm"});
  CHECK(c.out == d.out);
}

TEST_CASE("cli word and lehmer subcommands") {
  auto r = cli({"word", kData + "/intro.word"});
  CHECK(r.status == 0);
  CHECK(r.out == "n=2 [0,1,0]\n");

  auto l = cli({"lehmer", kData + "/reversible_or.perm"});
  CHECK(l.status == 0);
  CHECK(l.out.find("table: n=8 [0,5,6,7,4,1,2,3]") != std::string::npos);
  CHECK(l.out.find("code: (0,0,0,0,3,4,4,4)") != std::string::npos);
}

TEST_CASE("cli handles multi-definition files and --name") {
  std::string path = kData + std::string("/pair.tmp.pi");
  {
    std::ofstream f(path);
    f << "first : 1 + 1 <-> 1 + 1 = id\n";
    f << "second : 1 + 1 <-> 1 + 1 = swap+\n";
  }
  auto p = cli({"parse", path});
  CHECK(p.status == 0);
  CHECK(p.out ==
        "first : 1 + 1 <-> 1 + 1 = id\n"
        "second : 1 + 1 <-> 1 + 1 = swap+\n");
  auto e = cli({"eval", path, "--name", "second", "--input", "1"});
  CHECK(e.status == 0);
  CHECK(e.out.find("bits: 0") != std::string::npos);
  auto missing = cli({"eval", path, "--name", "third", "--input", "1"});
  CHECK(missing.status == 2);
  std::remove(path.c_str());
}

TEST_CASE("cli eval prints value and bits") {
  auto r = cli({"eval", kData + "/or1.pi", "--input", "011"});
  CHECK(r.status == 0);
  CHECK(r.out.find("bits: 111") != std::string::npos);
  auto v = cli({"eval", kData + "/intro1.pi", "--input", "inl tt"});
  CHECK(v.status == 0);
  CHECK(v.out.find("value: inr inr tt") != std::string::npos);
}

TEST_CASE("cli synth round trips the reversible-or table") {
  auto direct = cli({"synth", kData + "/reversible_or.perm", "--bits"});
  CHECK(direct.status == 0);
  auto norm = cli({"norm", kData + "/or1.pi"});
  // the synthesized program is exactly the normal form of the circuit
  std::string synth_line = direct.out.substr(direct.out.find('='));
  std::string norm_line = norm.out.substr(norm.out.find('='), synth_line.size());
  CHECK(synth_line == norm_line);
}
