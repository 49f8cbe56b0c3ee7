#ifndef PI_REWRITE_HPP
#define PI_REWRITE_HPP

#include <optional>
#include <vector>

#include "pi/word.hpp"

namespace pi {

// The three directed rules. cancel removes an adjacent equal pair [x,x];
// swap rewrites adjacent [x,k] with k+1 < x to [k,x]; braid rewrites a
// descending run of consecutive letters [s,s-1,...,e] (length >= 2) followed
// by the letter s into [s-1,s,s-1,...,e].
enum class Rule { Cancel, Swap, Braid };

struct ReductionStep {
  Rule rule;
  std::size_t position;  // index where the redex starts
  Word before;
  Word after;
};

// The deterministic choice: scan left to right, trying cancel, then swap,
// then braid at each position. Returns nothing iff w is normal.
std::optional<ReductionStep> step(const Word& w);

// Every redex of w, for strategy-independence testing.
std::vector<ReductionStep> all_redexes(const Word& w);

// Applies the rule named by (rule, position); throws if it does not match.
Word apply_rule(const Word& w, Rule rule, std::size_t position);

// Unique normal form (iterate `step`).
Word nf(const Word& w);

bool is_normal(const Word& w);

const char* rule_name(Rule r);

}  // namespace pi

#endif
