#ifndef PATGROUP_TESTS_SUPPORT_HPP
#define PATGROUP_TESTS_SUPPORT_HPP

#include <set>
#include <vector>

#include "oracles.hpp"
#include "patgroup/permutation.hpp"

namespace support
{

inline oracle::Word word(patgroup::Permutation const &p)
{
  auto w = p.word();
  return {w.begin(), w.end()};
}

inline patgroup::Permutation perm(oracle::Word w)
{
  return patgroup::Permutation(std::move(w));
}

inline std::vector<oracle::Word> words(std::vector<patgroup::Permutation> const &ps)
{
  std::vector<oracle::Word> out;
  for (auto const &p : ps)
    out.push_back(word(p));
  return out;
}

inline std::set<oracle::Word> word_set(std::vector<patgroup::Permutation> const &ps)
{
  auto w = words(ps);
  return {w.begin(), w.end()};
}

} // namespace support

#endif
