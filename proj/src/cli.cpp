#include "pi/cli.hpp"

#include <ostream>

#include "pi/formats.hpp"
#include "pi/lehmer.hpp"
#include "pi/parser.hpp"
#include "pi/pipeline.hpp"
#include "pi/printer.hpp"
#include "pi/qasm.hpp"
#include "pi/rewrite.hpp"
#include "pi/semantics.hpp"

namespace pi {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::vector<std::string> positional;
  std::string name;   // --name
  std::string input;  // --input
  std::string type;   // --type
  bool bits = false;  // --bits

  explicit Args(const std::vector<std::string>& argv, std::size_t from) {
    for (std::size_t i = from; i < argv.size(); ++i) {
      const std::string& a = argv[i];
      auto value = [&](const char* flag) -> std::string {
        if (++i >= argv.size())
          throw UsageError(std::string(flag) + " needs a value");
        return argv[i];
      };
      if (a == "--name") name = value("--name");
      else if (a == "--input") input = value("--input");
      else if (a == "--type") type = value("--type");
      else if (a == "--bits") bits = true;
      else if (!a.empty() && a[0] == '-')
        throw UsageError("unknown option " + a);
      else positional.push_back(a);
    }
  }

  const std::string& at(std::size_t i, const char* what) const {
    if (i >= positional.size()) throw UsageError(std::string(what) + " missing");
    return positional[i];
  }
};

Definition load_definition(const std::string& path, const std::string& name) {
  auto defs = parse_program(read_file(path));
  if (defs.empty()) throw UsageError(path + ": no definitions");
  if (name.empty()) return defs.front();
  for (auto& d : defs)
    if (d.name == name) return d;
  throw UsageError(path + ": no definition named " + name);
}

std::string ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
                 s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0
             ? suffix
             : "";
}

void print_norm(std::ostream& out, const std::string& name, const CombRef& c) {
  Permutation p = interp(c);
  PlusRef n = quote_perm(p);
  out << print_definition(name + "_norm", n) << "\n";
  Word w = perm_to_word(p.inverse());
  out << "word: " << show_word(w) << "\n";
  out << "code: " << show_code(lehmer_encode(p.inverse())) << "\n";
}

int run(const std::vector<std::string>& argv, std::ostream& out) {
  if (argv.empty())
    throw UsageError(
        "usage: pi <parse|eval|norm|equiv|synth|word|lehmer|import-qasm> ...");
  const std::string& cmd = argv[0];
  Args args(argv, 1);

  if (cmd == "parse") {
    auto defs = parse_program(read_file(args.at(0, "FILE")));
    for (const auto& d : defs) out << print_definition(d.name, d.comb) << "\n";
    return 0;
  }

  if (cmd == "eval") {
    Definition d = load_definition(args.at(0, "FILE"), args.name);
    if (args.input.empty()) throw UsageError("eval needs --input BITS|VALUE");
    std::size_t nbits = 0;
    bool bits_ok = is_bits_type(d.comb->source, &nbits);
    ValueRef v;
    if (bits_ok && args.input.find_first_not_of("01") == std::string::npos &&
        args.input.size() == nbits) {
      std::uint64_t b = 0;
      for (char ch : args.input) b = (b << 1) | (ch == '1');
      v = value_of_bits(nbits, b);
    } else {
      v = parse_value(args.input, d.comb->source);
    }
    ValueRef r = eval_value(d.comb, v);
    out << "value: " << show_value(r) << "\n";
    std::size_t tbits = 0;
    if (is_bits_type(d.comb->target, &tbits))
      out << "bits: " << show_bits(tbits, bits_of_value(d.comb->target, r))
          << "\n";
    return 0;
  }

  if (cmd == "norm") {
    Definition d = load_definition(args.at(0, "FILE"), args.name);
    print_norm(out, d.name, d.comb);
    return 0;
  }

  if (cmd == "equiv") {
    Definition d1 = load_definition(args.at(0, "FILE"), "");
    Definition d2 = load_definition(args.at(1, "FILE"), "");
    EquivResult r = equiv(d1.comb, d2.comb);
    if (r.equivalent) {
      out << "equivalent\n";
      out << print_definition("normal", r.normal_form) << "\n";
      return 0;
    }
    out << "inequivalent at index " << r.witness << ": " << r.lhs_image
        << " vs " << r.rhs_image << "\n";
    return 1;
  }

  if (cmd == "synth") {
    Permutation p = parse_perm_text(read_file(args.at(0, "PERMFILE")));
    if (!args.type.empty()) {
      TypeRef t = parse_type(args.type);
      Permutation q = args.bits ? from_bits_table(t, p) : p;
      out << print_definition("synth", synth_at(q, t)) << "\n";
    } else {
      if (args.bits) {
        std::size_t n = 0;
        while ((1ull << n) < p.size()) ++n;
        if ((1ull << n) != p.size() || n == 0)
          throw UsageError("--bits needs a table of size 2^k");
        p = from_bits_table(type_bits(n), p);
      }
      out << print_definition("synth", synth(p)) << "\n";
    }
    return 0;
  }

  if (cmd == "word") {
    Word w = parse_word_text(read_file(args.at(0, "WORDFILE")));
    out << show_word(nf(w)) << "\n";
    return 0;
  }

  if (cmd == "lehmer") {
    const std::string& path = args.at(0, "FILE");
    Permutation p;
    if (!ends_with(path, ".perm").empty()) {
      p = parse_perm_text(read_file(path));
    } else if (!ends_with(path, ".word").empty()) {
      p = word_to_perm(parse_word_text(read_file(path)));
    } else if (!ends_with(path, ".lehmer").empty()) {
      p = lehmer_decode(parse_code_text(read_file(path)));
    } else {
      throw UsageError("lehmer needs a .perm, .word or .lehmer file");
    }
    LehmerCode c = lehmer_encode(p);
    out << "table: " << show_perm(p) << "\n";
    out << "code: " << show_code(c) << "\n";
    out << "word: " << show_word(lehmer_em(c)) << "\n";
    return 0;
  }

  if (cmd == "import-qasm") {
    QasmCircuit circ = parse_qasm(read_file(args.at(0, "QASMFILE")));
    out << print_definition("circuit", qasm_to_pi(circ)) << "\n";
    return 0;
  }

  throw UsageError("unknown subcommand '" + cmd + "'");
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return run(args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pi
