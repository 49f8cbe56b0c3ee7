#include "pi/printer.hpp"

namespace pi {

namespace {

// precedence: ';' 0, '(+)' 1, '(*)' 2; all right-associative
void print_rec(const CombRef& c, int prec, std::string& out) {
  switch (c->kind) {
    case CombKind::Seq: {
      bool paren = prec > 0;
      if (paren) out += '(';
      print_rec(c->first, 1, out);
      out += " ; ";
      print_rec(c->second, 0, out);
      if (paren) out += ')';
      return;
    }
    case CombKind::Plus: {
      bool paren = prec > 1;
      if (paren) out += '(';
      print_rec(c->first, 2, out);
      out += " (+) ";
      print_rec(c->second, 1, out);
      if (paren) out += ')';
      return;
    }
    case CombKind::Times: {
      bool paren = prec > 2;
      if (paren) out += '(';
      print_rec(c->first, 3, out);
      out += " (*) ";
      print_rec(c->second, 2, out);
      if (paren) out += ')';
      return;
    }
    case CombKind::Factorzl:
    case CombKind::Factorzr:
    case CombKind::Absorbr:
    case CombKind::Absorbl:
      // the absorbed type is not inferable from the surrounding program
      out += '(';
      out += comb_kind_name(c->kind);
      out += " : ";
      out += show_type(c->source);
      out += " <-> ";
      out += show_type(c->target);
      out += ')';
      return;
    default:
      out += comb_kind_name(c->kind);
      return;
  }
}

void print_plus_rec(const PlusRef& c, int prec, std::string& out) {
  switch (c->kind) {
    case PlusKind::Seq: {
      bool paren = prec > 0;
      if (paren) out += '(';
      print_plus_rec(c->first, 1, out);
      out += " ; ";
      print_plus_rec(c->second, 0, out);
      if (paren) out += ')';
      return;
    }
    case PlusKind::Plus: {
      bool paren = prec > 1;
      if (paren) out += '(';
      print_plus_rec(c->first, 2, out);
      out += " (+) ";
      print_plus_rec(c->second, 1, out);
      if (paren) out += ')';
      return;
    }
    default:
      out += plus_kind_name(c->kind);
      return;
  }
}

}  // namespace

std::string print_comb(const CombRef& c) {
  std::string out;
  print_rec(c, 0, out);
  return out;
}

std::string print_comb_plus(const PlusRef& c) {
  std::string out;
  print_plus_rec(c, 0, out);
  return out;
}

std::string print_definition(const std::string& name, const CombRef& c) {
  return name + " : " + show_type(c->source) + " <-> " + show_type(c->target) +
         " = " + print_comb(c);
}

std::string print_definition(const std::string& name, const PlusRef& c) {
  return name + " : " + show_type(c->source) + " <-> " + show_type(c->target) +
         " = " + print_comb_plus(c);
}

}  // namespace pi
