#ifndef PI_PRINTER_HPP
#define PI_PRINTER_HPP

#include <string>

#include "pi/comb.hpp"
#include "pi/comb_plus.hpp"

namespace pi {

// Emits the ASCII surface grammar; parse(print(c)) is structurally c.
std::string print_comb(const CombRef& c);
std::string print_comb_plus(const PlusRef& c);

// Full definition line: "name : A <-> B = c"
std::string print_definition(const std::string& name, const CombRef& c);
std::string print_definition(const std::string& name, const PlusRef& c);

}  // namespace pi

#endif
