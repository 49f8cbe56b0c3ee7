#include "pi/formats.hpp"

#include <fstream>
#include <sstream>

#include "pi/types.hpp"

namespace pi {

namespace {

struct TextCursor {
  std::string text;
  std::size_t pos = 0;

  explicit TextCursor(const std::string& raw) {
    // strip '#' comments, joining everything onto one logical line
    std::istringstream in(raw);
    std::string line;
    while (std::getline(in, line)) {
      std::size_t h = line.find('#');
      if (h != std::string::npos) line.resize(h);
      text += line;
      text += ' ';
    }
  }

  void skip_ws() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
      ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool try_consume(char c) {
    if (peek() == c) { ++pos; return true; }
    return false;
  }

  void expect(char c, const char* what) {
    if (!try_consume(c))
      throw ParseError(std::string("expected '") + c + "' " + what, 1,
                       static_cast<int>(pos) + 1);
  }

  std::uint32_t number() {
    skip_ws();
    if (peek() < '0' || peek() > '9')
      throw ParseError("expected a number", 1, static_cast<int>(pos) + 1);
    std::uint64_t n = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      n = n * 10 + (text[pos] - '0');
      if (n > 1u << 24)
        throw ParseError("number out of range", 1, static_cast<int>(pos) + 1);
      ++pos;
    }
    return static_cast<std::uint32_t>(n);
  }

  void done() {
    skip_ws();
    if (pos < text.size())
      throw ParseError("trailing input", 1, static_cast<int>(pos) + 1);
  }
};

std::vector<std::uint32_t> bracket_list(TextCursor& cur) {
  std::vector<std::uint32_t> xs;
  cur.expect('[', "to open the list");
  if (cur.peek() != ']') {
    xs.push_back(cur.number());
    while (cur.try_consume(',')) xs.push_back(cur.number());
  }
  cur.expect(']', "to close the list");
  return xs;
}

std::pair<std::uint32_t, std::vector<std::uint32_t>> header_list(
    const std::string& text) {
  TextCursor cur(text);
  cur.expect('n', "header");
  cur.expect('=', "after n");
  std::uint32_t n = cur.number();
  auto xs = bracket_list(cur);
  cur.done();
  return {n, std::move(xs)};
}

}  // namespace

Word parse_word_text(const std::string& text) {
  auto [n, letters] = header_list(text);
  return make_word(n, std::move(letters));
}

Permutation parse_perm_text(const std::string& text) {
  auto [n, table] = header_list(text);
  if (table.size() != n)
    throw ParseError("table has " + std::to_string(table.size()) +
                         " entries, header says " + std::to_string(n),
                     1, 1);
  try {
    return Permutation(std::move(table));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string show_perm(const Permutation& p) {
  std::string s = "n=" + std::to_string(p.size()) + " [";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p(i));
  }
  s += ']';
  return s;
}

LehmerCode parse_code_text(const std::string& text) {
  TextCursor cur(text);
  cur.expect('(', "to open the code");
  std::vector<std::uint32_t> digits;
  if (cur.peek() != ')') {
    digits.push_back(cur.number());
    while (cur.try_consume(',')) digits.push_back(cur.number());
  }
  cur.expect(')', "to close the code");
  cur.done();
  try {
    return make_code(std::move(digits));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pi
