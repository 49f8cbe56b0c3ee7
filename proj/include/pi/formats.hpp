#ifndef PI_FORMATS_HPP
#define PI_FORMATS_HPP

#include <string>

#include "pi/lehmer.hpp"
#include "pi/permutation.hpp"
#include "pi/word.hpp"

namespace pi {

// .word — "n=4 [0,1,0,3,2]"; degree header plus comma-separated letters
Word parse_word_text(const std::string& text);

// .perm — "n=8 [0,5,6,7,4,1,2,3]"; table of n distinct naturals below n
Permutation parse_perm_text(const std::string& text);
std::string show_perm(const Permutation& p);

// .lehmer — "(0,1,2,0,2)"
LehmerCode parse_code_text(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace pi

#endif
