#include "pi/parser.hpp"

#include <memory>
#include <optional>

#include "pi/gates.hpp"

namespace pi {

namespace {

struct AmbiguousType : TypeError {
  using TypeError::TypeError;
};

// ---------------------------------------------------------------- surface AST

struct SurfComb;
using SurfRef = std::shared_ptr<const SurfComb>;

struct SurfComb {
  enum Kind {
    Prim, SeqOp, PlusOp, TimesOp, Cif, GateX, GateCx, GateCcx, Ascribe
  } kind;
  CombKind prim = CombKind::Id;
  SurfRef a, b;
  TypeRef ascribed_source, ascribed_target;  // Ascribe
  int line = 0, col = 0;
};

SurfRef surf(SurfComb::Kind k, int line, int col, SurfRef a = nullptr,
             SurfRef b = nullptr, CombKind prim = CombKind::Id) {
  return std::make_shared<SurfComb>(
      SurfComb{k, prim, std::move(a), std::move(b), nullptr, nullptr, line, col});
}

// ---------------------------------------------------------------------- lexer

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line;

  explicit Cursor(const std::string& t, int line = 1) : text(t), line(line) {}

  int col() const { return static_cast<int>(pos) + 1; }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool try_consume(const std::string& s) {
    skip_ws();
    if (text.compare(pos, s.size(), s) == 0) {
      pos += s.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& s, const std::string& what) {
    if (!try_consume(s))
      throw ParseError("expected '" + s + "' " + what, line, col());
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, col());
  }
};

bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

// ----------------------------------------------------------------- type parse

TypeRef parse_type_sum(Cursor& cur);

TypeRef parse_type_atom(Cursor& cur) {
  char c = cur.peek();
  if (c == '0') { ++cur.pos; return type_zero(); }
  if (c == '1') { ++cur.pos; return type_one(); }
  if (c == '(') {
    ++cur.pos;
    TypeRef t = parse_type_sum(cur);
    cur.expect(")", "to close type");
    return t;
  }
  cur.fail("expected a type (0, 1 or parenthesis)");
}

TypeRef parse_type_prod(Cursor& cur) {
  TypeRef t = parse_type_atom(cur);
  cur.skip_ws();
  if (cur.pos < cur.text.size() && cur.text[cur.pos] == '*' &&
      cur.text.compare(cur.pos, 2, "*)") != 0) {
    ++cur.pos;
    return type_prod(t, parse_type_prod(cur));
  }
  return t;
}

TypeRef parse_type_sum(Cursor& cur) {
  TypeRef t = parse_type_prod(cur);
  if (cur.peek() == '+') {
    ++cur.pos;
    return type_sum(t, parse_type_sum(cur));
  }
  return t;
}

// ----------------------------------------------------------------- comb parse

struct Keyword {
  const char* text;
  SurfComb::Kind kind;
  CombKind prim;
};

// longest first so prefixes do not shadow
const Keyword kKeywords[] = {
    {"factorzl", SurfComb::Prim, CombKind::Factorzl},
    {"factorzr", SurfComb::Prim, CombKind::Factorzr},
    {"absorbr", SurfComb::Prim, CombKind::Absorbr},
    {"absorbl", SurfComb::Prim, CombKind::Absorbl},
    {"assocl+", SurfComb::Prim, CombKind::AssoclPlus},
    {"assocr+", SurfComb::Prim, CombKind::AssocrPlus},
    {"assocl*", SurfComb::Prim, CombKind::AssoclStar},
    {"assocr*", SurfComb::Prim, CombKind::AssocrStar},
    {"unite+l", SurfComb::Prim, CombKind::UnitePlusL},
    {"unite+r", SurfComb::Prim, CombKind::UnitePlusR},
    {"uniti+l", SurfComb::Prim, CombKind::UnitiPlusL},
    {"uniti+r", SurfComb::Prim, CombKind::UnitiPlusR},
    {"unite*l", SurfComb::Prim, CombKind::UniteStarL},
    {"unite*r", SurfComb::Prim, CombKind::UniteStarR},
    {"uniti*l", SurfComb::Prim, CombKind::UnitiStarL},
    {"uniti*r", SurfComb::Prim, CombKind::UnitiStarR},
    {"factor", SurfComb::Prim, CombKind::Factor},
    {"swap+", SurfComb::Prim, CombKind::SwapPlus},
    {"swap*", SurfComb::Prim, CombKind::SwapStar},
    {"dist", SurfComb::Prim, CombKind::Dist},
    {"ccx", SurfComb::GateCcx, CombKind::Id},
    {"cif", SurfComb::Cif, CombKind::Id},
    {"cx", SurfComb::GateCx, CombKind::Id},
    {"id", SurfComb::Prim, CombKind::Id},
    {"x", SurfComb::GateX, CombKind::Id},
};

SurfRef parse_comb_seq(Cursor& cur);

SurfRef parse_comb_atom(Cursor& cur) {
  cur.skip_ws();
  int line = cur.line, col = cur.col();
  if (cur.peek() == '(') {
    ++cur.pos;
    SurfRef c = parse_comb_seq(cur);
    if (cur.peek() == ':') {
      ++cur.pos;
      TypeRef src = parse_type_sum(cur);
      cur.expect("<->", "in ascription");
      TypeRef tgt = parse_type_sum(cur);
      cur.expect(")", "to close ascription");
      auto node = std::make_shared<SurfComb>(
          SurfComb{SurfComb::Ascribe, CombKind::Id, c, nullptr, src, tgt, line,
                   col});
      return node;
    }
    cur.expect(")", "to close group");
    return c;
  }
  for (const Keyword& kw : kKeywords) {
    std::size_t len = std::string(kw.text).size();
    if (cur.text.compare(cur.pos, len, kw.text) != 0) continue;
    char next = cur.pos + len < cur.text.size() ? cur.text[cur.pos + len] : '\0';
    char last = kw.text[len - 1];
    if (ident_char(last) && ident_char(next)) continue;  // not a word boundary
    cur.pos += len;
    if (kw.kind == SurfComb::Cif) {
      cur.expect("(", "after cif");
      SurfRef c1 = parse_comb_seq(cur);
      cur.expect(",", "between cif branches");
      SurfRef c2 = parse_comb_seq(cur);
      cur.expect(")", "to close cif");
      return surf(SurfComb::Cif, line, col, c1, c2);
    }
    return surf(kw.kind, line, col, nullptr, nullptr, kw.prim);
  }
  cur.fail("expected a combinator");
}

SurfRef parse_comb_times(Cursor& cur) {
  SurfRef c = parse_comb_atom(cur);
  int line = cur.line, col = cur.col();
  if (cur.peek() == '(' && cur.text.compare(cur.pos, 3, "(*)") == 0) {
    cur.pos += 3;
    return surf(SurfComb::TimesOp, line, col, c, parse_comb_times(cur));
  }
  return c;
}

SurfRef parse_comb_plus(Cursor& cur) {
  SurfRef c = parse_comb_times(cur);
  int line = cur.line, col = cur.col();
  if (cur.peek() == '(' && cur.text.compare(cur.pos, 3, "(+)") == 0) {
    cur.pos += 3;
    return surf(SurfComb::PlusOp, line, col, c, parse_comb_plus(cur));
  }
  return c;
}

SurfRef parse_comb_seq(Cursor& cur) {
  SurfRef c = parse_comb_plus(cur);
  int line = cur.line, col = cur.col();
  if (cur.peek() == ';') {
    ++cur.pos;
    return surf(SurfComb::SeqOp, line, col, c, parse_comb_seq(cur));
  }
  return c;
}

// ----------------------------------------------------------------- elaborator

using OptType = std::optional<TypeRef>;

[[noreturn]] void elab_error(const SurfRef& s, const std::string& msg) {
  throw ParseError(msg, s->line, s->col);
}

void check_target(const SurfRef& s, const CombRef& c, const OptType& tgt) {
  if (tgt && !type_equal(c->target, *tgt))
    elab_error(s, std::string(comb_kind_name(c->kind)) + ": has target " +
                      show_type(c->target) + ", expected " + show_type(*tgt));
}

CombRef elaborate(const SurfRef& s, const OptType& src, const OptType& tgt) {
  switch (s->kind) {
    case SurfComb::Prim: {
      CombKind k = s->prim;
      if (k == CombKind::Factorzl || k == CombKind::Factorzr) {
        if (!tgt)
          throw AmbiguousType(std::string(comb_kind_name(k)) +
                              ": target not determined; ascribe it");
        TypeRef t = *tgt;
        try {
          prim_source(k, t);
        } catch (const TypeError& e) {
          elab_error(s, e.what());
        }
        CombRef c = k == CombKind::Factorzl ? make_factorzl(t->right)
                                            : make_factorzr(t->left);
        if (src && !type_equal(c->source, *src))
          elab_error(s, std::string(comb_kind_name(k)) + ": source must be 0");
        return c;
      }
      if (!src && !tgt)
        throw AmbiguousType(std::string(comb_kind_name(k)) +
                            ": type not determined; ascribe it");
      if (!src && (k == CombKind::Absorbr || k == CombKind::Absorbl))
        throw AmbiguousType(std::string(comb_kind_name(k)) +
                            ": source not determined; ascribe it");
      try {
        TypeRef from = src ? *src : prim_source(k, *tgt);
        CombRef c = k == CombKind::Id ? make_id(from) : make_prim(k, from);
        check_target(s, c, tgt);
        return c;
      } catch (const ParseError&) {
        throw;
      } catch (const TypeError& e) {
        elab_error(s, e.what());
      }
    }
    case SurfComb::SeqOp: {
      try {
        CombRef c1 = elaborate(s->a, src, std::nullopt);
        CombRef c2 = elaborate(s->b, OptType(c1->target), tgt);
        return make_seq(c1, c2);
      } catch (const AmbiguousType&) {
        if (!tgt) throw;
        CombRef c2 = elaborate(s->b, std::nullopt, tgt);
        CombRef c1 = elaborate(s->a, src, OptType(c2->source));
        return make_seq(c1, c2);
      }
    }
    case SurfComb::PlusOp:
    case SurfComb::TimesOp: {
      bool sum = s->kind == SurfComb::PlusOp;
      TypeKind want = sum ? TypeKind::Sum : TypeKind::Prod;
      const char* op = sum ? "(+)" : "(*)";
      OptType sl, sr, tl, tr;
      if (src) {
        if ((*src)->kind != want)
          elab_error(s, std::string(op) + ": source " + show_type(*src) +
                            " is not a " + (sum ? "sum" : "product"));
        sl = (*src)->left;
        sr = (*src)->right;
      }
      if (tgt) {
        if ((*tgt)->kind != want)
          elab_error(s, std::string(op) + ": target " + show_type(*tgt) +
                            " is not a " + (sum ? "sum" : "product"));
        tl = (*tgt)->left;
        tr = (*tgt)->right;
      }
      CombRef c1 = elaborate(s->a, sl, tl);
      CombRef c2 = elaborate(s->b, sr, tr);
      return sum ? make_plus(c1, c2) : make_times(c1, c2);
    }
    case SurfComb::Cif: {
      OptType at = src ? src : tgt;
      if (!at)
        throw AmbiguousType("cif: type not determined; ascribe it");
      if ((*at)->kind != TypeKind::Prod || !type_equal((*at)->left, type_bool()))
        elab_error(s, "cif: expected type 2 * A, got " + show_type(*at));
      TypeRef branch = (*at)->right;
      CombRef c1 = elaborate(s->a, OptType(branch), OptType(branch));
      CombRef c2 = elaborate(s->b, OptType(branch), OptType(branch));
      CombRef c = gate_cif(c1, c2);
      if (src && !type_equal(c->source, *src))
        elab_error(s, "cif: source mismatch");
      check_target(s, c, tgt);
      return c;
    }
    case SurfComb::Ascribe: {
      if (src && !type_equal(*src, s->ascribed_source))
        elab_error(s, "ascription source " + show_type(s->ascribed_source) +
                          " conflicts with " + show_type(*src));
      if (tgt && !type_equal(*tgt, s->ascribed_target))
        elab_error(s, "ascription target " + show_type(s->ascribed_target) +
                          " conflicts with " + show_type(*tgt));
      return elaborate(s->a, OptType(s->ascribed_source),
                       OptType(s->ascribed_target));
    }
    case SurfComb::GateX:
    case SurfComb::GateCx:
    case SurfComb::GateCcx: {
      OptType at = src ? src : tgt;
      const char* name = s->kind == SurfComb::GateX ? "x"
                         : s->kind == SurfComb::GateCx ? "cx" : "ccx";
      if (!at)
        throw AmbiguousType(std::string(name) +
                            ": type not determined; ascribe it");
      CombRef c = s->kind == SurfComb::GateX ? gate_x()
                  : s->kind == SurfComb::GateCx ? gate_cx() : gate_ccx();
      if (!type_equal(*at, c->source))
        elab_error(s, std::string(name) + " acts on " + show_type(c->source) +
                          ", not " + show_type(*at));
      return c;
    }
  }
  throw std::logic_error("bad SurfComb::Kind");
}

// ------------------------------------------------------------------- program

std::string strip_comment(const std::string& line) {
  std::size_t h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

TypeRef parse_type(const std::string& text) {
  Cursor cur(text);
  TypeRef t = parse_type_sum(cur);
  if (!cur.eof()) cur.fail("trailing input after type");
  return t;
}

CombRef parse_comb(const std::string& text, const TypeRef& source,
                   const TypeRef& target) {
  Cursor cur(text);
  SurfRef s = parse_comb_seq(cur);
  if (!cur.eof()) cur.fail("trailing input after combinator");
  CombRef c = elaborate(s, OptType(source), OptType(target));
  return c;
}

std::vector<Definition> parse_program(const std::string& text) {
  std::vector<Definition> defs;
  std::size_t start = 0;
  int lineno = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string raw = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    std::string line = strip_comment(raw);
    if (blank(line)) {
      if (end == text.size()) break;
      continue;
    }
    Cursor cur(line, lineno);
    cur.skip_ws();
    std::size_t name_start = cur.pos;
    while (cur.pos < line.size() && ident_char(line[cur.pos])) ++cur.pos;
    if (cur.pos == name_start) cur.fail("expected a definition name");
    std::string name = line.substr(name_start, cur.pos - name_start);
    cur.expect(":", "after definition name");
    TypeRef src = parse_type_sum(cur);
    cur.expect("<->", "between source and target types");
    TypeRef tgt = parse_type_sum(cur);
    cur.expect("=", "before the combinator");
    SurfRef s = parse_comb_seq(cur);
    if (!cur.eof()) cur.fail("trailing input after definition");
    defs.push_back(Definition{name, elaborate(s, OptType(src), OptType(tgt))});
    if (end == text.size()) break;
  }
  return defs;
}

namespace {

ValueRef parse_value_rec(Cursor& cur) {
  cur.skip_ws();
  if (cur.try_consume("tt")) return val_tt();
  if (cur.try_consume("inl")) return val_inl(parse_value_rec(cur));
  if (cur.try_consume("inr")) return val_inr(parse_value_rec(cur));
  if (cur.try_consume("(")) {
    ValueRef v = parse_value_rec(cur);
    cur.expect(",", "between pair components");
    ValueRef w = parse_value_rec(cur);
    cur.expect(")", "to close pair");
    return val_pair(v, w);
  }
  cur.fail("expected a value (tt, inl, inr or pair)");
}

}  // namespace

ValueRef parse_value(const std::string& text, const TypeRef& expected) {
  Cursor cur(text);
  ValueRef v = parse_value_rec(cur);
  if (!cur.eof()) cur.fail("trailing input after value");
  if (!has_type(v, expected))
    throw TypeError("value " + show_value(v) + " does not inhabit " +
                    show_type(expected));
  return v;
}

}  // namespace pi
