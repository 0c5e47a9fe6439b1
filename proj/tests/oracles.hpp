// Brute-force reference implementations. They work on plain int vectors and
// share no code with the library, so agreement means something.
#ifndef PATGROUP_TESTS_ORACLES_HPP
#define PATGROUP_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle
{

using Word = std::vector<int>;

inline Word word_of(std::string const &digits)
{
  Word w;
  for (char c : digits)
    w.push_back(c - '0');
  return w;
}

inline std::vector<Word> all_words(std::size_t n)
{
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do
    out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline bool order_isomorphic(Word const &a, Word const &b)
{
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] < a[j]) != (b[i] < b[j]))
        return false;
  return true;
}

/// Tries every index subset of size |tau|.
inline bool contains(Word const &p, Word const &tau)
{
  std::size_t const n = p.size(), k = tau.size();
  if (k > n)
    return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    Word sub;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i])
        sub.push_back(p[i]);
    if (order_isomorphic(sub, tau))
      return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline std::vector<Word> avoiders(std::size_t n, std::vector<Word> const &t)
{
  std::vector<Word> out;
  for (auto const &p : all_words(n))
    if (std::none_of(t.begin(), t.end(), [&](auto const &tau) { return contains(p, tau); }))
      out.push_back(p);
  return out;
}

/// (p q)(i) = p(q(i))
inline Word compose(Word const &p, Word const &q)
{
  Word r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    r[i] = p[q[i] - 1];
  return r;
}

/// Breadth-first closure under right multiplication by the generators.
/// Returns an empty set when it grows beyond `cap`.
inline std::set<Word> closure(std::vector<Word> const &gens, std::size_t n,
                              std::size_t cap = 50'000)
{
  Word id(n);
  std::iota(id.begin(), id.end(), 1);
  std::set<Word> seen{id};
  std::deque<Word> queue{id};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto const &g : gens) {
      auto y = compose(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          return {};
        queue.push_back(y);
      }
    }
  }
  return seen;
}

/// Peg entry: value in the skeleton and a label '+', '-' or ' '.
struct Peg
{
  Word skeleton;
  std::string labels;
};

/// sigma[parts] straight from the definition: block i holds the values
/// above all blocks whose skeleton entry is smaller.
inline Word inflate(Word const &sigma, std::vector<Word> const &parts)
{
  Word out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    int base = 0;
    for (std::size_t j = 0; j < sigma.size(); ++j)
      if (sigma[j] < sigma[i])
        base += static_cast<int>(parts[j].size());
    for (int x : parts[i])
      out.push_back(base + x);
  }
  return out;
}

inline std::set<Word> grid_section(Peg const &peg, std::size_t n)
{
  std::set<Word> out;
  std::size_t const m = peg.skeleton.size();
  std::vector<std::size_t> len(m, 0);
  // all length vectors with sum n
  auto rec = [&](auto &self, std::size_t i, std::size_t left) -> void {
    if (i == m) {
      if (left != 0)
        return;
      std::vector<Word> parts;
      for (std::size_t j = 0; j < m; ++j) {
        Word w(len[j]);
        std::iota(w.begin(), w.end(), 1);
        if (peg.labels[j] == '-')
          std::reverse(w.begin(), w.end());
        parts.push_back(w);
      }
      out.insert(inflate(peg.skeleton, parts));
      return;
    }
    std::size_t hi = peg.labels[i] == ' ' ? std::min<std::size_t>(1, left) : left;
    for (std::size_t l = 0; l <= hi; ++l) {
      len[i] = l;
      self(self, i + 1, left - l);
    }
  };
  rec(rec, 0, n);
  return out;
}

/// Membership by trying every split of the positions into consecutive blocks.
inline bool grid_member(Word const &p, Peg const &peg)
{
  std::size_t const m = peg.skeleton.size();
  std::vector<std::size_t> cut(m + 1, 0);
  auto rec = [&](auto &self, std::size_t i, std::size_t pos) -> bool {
    if (i == m) {
      if (pos != p.size())
        return false;
      std::vector<Word> parts;
      for (std::size_t j = 0; j < m; ++j) {
        Word block(p.begin() + static_cast<std::ptrdiff_t>(cut[j]),
                   p.begin() + static_cast<std::ptrdiff_t>(cut[j + 1]));
        Word sorted = block;
        std::sort(sorted.begin(), sorted.end());
        Word std_block;
        for (int v : block)
          std_block.push_back(
            static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
        Word inc(block.size());
        std::iota(inc.begin(), inc.end(), 1);
        Word dec(inc.rbegin(), inc.rend());
        char l = peg.labels[j];
        if ((l == ' ' && block.size() > 1) || (l == '+' && std_block != inc) ||
            (l == '-' && std_block != dec))
          return false;
        parts.push_back(std_block);
      }
      return inflate(peg.skeleton, parts) == p;
    }
    for (std::size_t end = pos; end <= p.size(); ++end) {
      cut[i] = pos;
      cut[i + 1] = end;
      if (self(self, i + 1, end))
        return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

} // namespace oracle

#endif // PATGROUP_TESTS_ORACLES_HPP
