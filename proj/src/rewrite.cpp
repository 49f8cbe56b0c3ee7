#include "pi/rewrite.hpp"

#include <stdexcept>

namespace pi {

namespace {

// Length of the maximal descending run of consecutive letters starting at i.
std::size_t run_length(const std::vector<std::uint32_t>& w, std::size_t i) {
  std::size_t j = i;
  while (j + 1 < w.size() && w[j] > 0 && w[j + 1] == w[j] - 1) ++j;
  return j - i + 1;
}

std::optional<Rule> match_at(const std::vector<std::uint32_t>& w,
                             std::size_t i) {
  if (i + 1 >= w.size()) return std::nullopt;
  if (w[i] == w[i + 1]) return Rule::Cancel;
  if (w[i] > w[i + 1] + 1) return Rule::Swap;
  // A braid redex needs the follower of the maximal run to equal the run's
  // first letter; a shorter run's follower is still inside the descent and
  // can never match, so only the maximal run is a candidate.
  std::size_t len = run_length(w, i);
  if (len >= 2 && i + len < w.size() && w[i + len] == w[i]) return Rule::Braid;
  return std::nullopt;
}

}  // namespace

Word apply_rule(const Word& w, Rule rule, std::size_t pos) {
  const auto& v = w.letters;
  Word out;
  out.degree = w.degree;
  switch (rule) {
    case Rule::Cancel: {
      if (pos + 1 >= v.size() || v[pos] != v[pos + 1])
        throw std::invalid_argument("no cancel redex at position");
      out.letters.assign(v.begin(), v.begin() + pos);
      out.letters.insert(out.letters.end(), v.begin() + pos + 2, v.end());
      return out;
    }
    case Rule::Swap: {
      if (pos + 1 >= v.size() || v[pos] <= v[pos + 1] + 1)
        throw std::invalid_argument("no swap redex at position");
      out.letters = v;
      std::swap(out.letters[pos], out.letters[pos + 1]);
      return out;
    }
    case Rule::Braid: {
      std::size_t len = run_length(v, pos);
      if (len < 2 || pos + len >= v.size() || v[pos + len] != v[pos])
        throw std::invalid_argument("no braid redex at position");
      // [s, s-1, ..., e, s] -> [s-1, s, s-1, ..., e]
      out.letters.assign(v.begin(), v.begin() + pos);
      out.letters.push_back(v[pos] - 1);
      out.letters.insert(out.letters.end(), v.begin() + pos,
                         v.begin() + pos + len);
      out.letters.insert(out.letters.end(), v.begin() + pos + len + 1, v.end());
      return out;
    }
  }
  throw std::logic_error("bad Rule");
}

std::optional<ReductionStep> step(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
    if (auto r = match_at(w.letters, i))
      return ReductionStep{*r, i, w, apply_rule(w, *r, i)};
  }
  return std::nullopt;
}

std::vector<ReductionStep> all_redexes(const Word& w) {
  std::vector<ReductionStep> out;
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
    if (auto r = match_at(w.letters, i))
      out.push_back(ReductionStep{*r, i, w, apply_rule(w, *r, i)});
  }
  return out;
}

Word nf(const Word& w) {
  Word cur = w;
  while (auto s = step(cur)) cur = std::move(s->after);
  return cur;
}

bool is_normal(const Word& w) { return !step(w).has_value(); }

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Cancel: return "cancel";
    case Rule::Swap: return "swap";
    case Rule::Braid: return "braid";
  }
  return "?";
}

}  // namespace pi
