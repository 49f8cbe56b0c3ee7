#ifndef PI_PARSER_HPP
#define PI_PARSER_HPP

#include <string>
#include <vector>

#include "pi/comb.hpp"
#include "pi/types.hpp"

namespace pi {

struct Definition {
  std::string name;
  CombRef comb;
};

// One definition per line, `name : A <-> B = c`; '#' starts a comment.
std::vector<Definition> parse_program(const std::string& text);

TypeRef parse_type(const std::string& text);

// Elaborates a bare combinator against an ascribed source/target.
CombRef parse_comb(const std::string& text, const TypeRef& source,
                   const TypeRef& target);

// tt | inl v | inr v | (v, w), checked against the expected type.
ValueRef parse_value(const std::string& text, const TypeRef& expected);

}  // namespace pi

#endif
