#include "patgroup/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace patgroup
{

namespace
{

constexpr std::size_t no_entry = static_cast<std::size_t>(-1);

std::vector<std::string_view> split_tokens(std::string_view text)
{
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i)
      tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

int parse_int(std::string_view token)
{
  if (token.empty() || token.size() > 6)
    throw ParseError("bad integer token '" + std::string(token) + "'");
  int v = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad integer token '" + std::string(token) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

} // namespace

DegreeMismatch::DegreeMismatch(std::size_t lhs, std::size_t rhs)
  : std::invalid_argument("incompatible degrees " + std::to_string(lhs) +
                          " and " + std::to_string(rhs))
{}

Permutation::Permutation(std::vector<value_type> word)
  : _word(std::move(word))
{
  std::vector<bool> seen(_word.size() + 1, false);
  for (auto v : _word) {
    if (v < 1 || static_cast<std::size_t>(v) > _word.size() || seen[v])
      throw std::invalid_argument("not a permutation of 1.." +
                                  std::to_string(_word.size()));
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n)
{
  std::vector<value_type> w(n);
  std::iota(w.begin(), w.end(), 1);
  Permutation p;
  p._word = std::move(w);
  return p;
}

Permutation Permutation::decreasing(std::size_t n)
{
  std::vector<value_type> w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = static_cast<value_type>(n - i);
  Permutation p;
  p._word = std::move(w);
  return p;
}

Permutation Permutation::parse(std::string_view text)
{
  auto tokens = split_tokens(text);
  std::vector<value_type> w;

  if (tokens.size() == 1 && tokens[0].size() > 1) {
    // compact digit form, only meaningful for n <= 9
    if (tokens[0].size() > 9)
      throw ParseError("compact form '" + std::string(tokens[0]) +
                       "' is only accepted for n <= 9");
    for (char c : tokens[0]) {
      if (c < '1' || c > '9')
        throw ParseError("bad permutation '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
  } else {
    for (auto t : tokens)
      w.push_back(parse_int(t));
  }

  try {
    return Permutation(std::move(w));
  } catch (std::invalid_argument const &) {
    throw ParseError("not a permutation: '" + std::string(text) + "'");
  }
}

Permutation Permutation::standardize(std::span<value_type const> values)
{
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<value_type> w(values.size());
  for (std::size_t rank = 0; rank < idx.size(); ++rank)
    w[idx[rank]] = static_cast<value_type>(rank + 1);

  Permutation p;
  p._word = std::move(w);
  return p;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _word.size(); ++i) {
    if (_word[i] != static_cast<value_type>(i + 1))
      return false;
  }
  return true;
}

bool Permutation::is_decreasing() const
{
  for (std::size_t i = 0; i < _word.size(); ++i) {
    if (_word[i] != static_cast<value_type>(_word.size() - i))
      return false;
  }
  return true;
}

std::string Permutation::str() const
{
  std::string s;
  for (std::size_t i = 0; i < _word.size(); ++i) {
    if (i)
      s += ' ';
    s += std::to_string(_word[i]);
  }
  return s;
}

std::string Permutation::compact() const
{
  if (_word.size() > 9)
    return str();
  std::string s;
  for (auto v : _word)
    s += static_cast<char>('0' + v);
  return s;
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.size() != q.size())
    throw DegreeMismatch(p.size(), q.size());

  std::vector<int> w(p.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = p[q[i] - 1];
  return Permutation(std::move(w));
}

Permutation inverse(Permutation const &p)
{
  std::vector<int> w(p.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[p[i] - 1] = static_cast<int>(i + 1);
  return Permutation(std::move(w));
}

Permutation reverse(Permutation const &p)
{
  auto w = std::vector<int>(p.word().rbegin(), p.word().rend());
  return Permutation(std::move(w));
}

Permutation complement(Permutation const &p)
{
  std::vector<int> w(p.size());
  int n = static_cast<int>(p.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = n + 1 - p[i];
  return Permutation(std::move(w));
}

Permutation reverse_complement(Permutation const &p)
{
  return complement(reverse(p));
}

Parity parity(Permutation const &p)
{
  // n minus the number of cycles, fixed points included
  std::vector<bool> seen(p.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i])
      continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j] - 1)
      seen[j] = true;
  }
  return (p.size() - cycles) % 2 == 0 ? Parity::even : Parity::odd;
}

std::uint64_t element_order(Permutation const &p)
{
  std::uint64_t order = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j] - 1) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::string CycleForm::str() const
{
  if (cycles.empty())
    return "()";

  std::string s;
  for (auto const &c : cycles) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

CycleForm CycleForm::parse(std::string_view text, std::size_t n)
{
  CycleForm form;
  form.n = n;

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle text '" + std::string(text) + "'");
    ++i;
    std::vector<int> cycle;
    std::string number;
    for (; i < text.size() && text[i] != ')'; ++i) {
      char c = text[i];
      if (c == ',') {
        cycle.push_back(parse_int(number));
        number.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        number += c;
      }
    }
    if (i == text.size())
      throw ParseError("unterminated cycle in '" + std::string(text) + "'");
    ++i;
    if (!number.empty())
      cycle.push_back(parse_int(number));
    if (cycle.size() > 1)
      form.cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return form;
}

CycleForm to_cycles(Permutation const &p)
{
  CycleForm form;
  form.n = p.size();

  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i + 1)) {
      seen[i] = true;
      continue;
    }
    std::vector<int> cycle;
    for (std::size_t j = i; !seen[j]; j = p[j] - 1) {
      seen[j] = true;
      cycle.push_back(static_cast<int>(j + 1));
    }
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

Permutation from_cycles(CycleForm const &c)
{
  std::vector<int> w(c.n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<bool> used(c.n + 1, false);

  for (auto const &cycle : c.cycles) {
    for (int x : cycle) {
      if (x < 1 || static_cast<std::size_t>(x) > c.n)
        throw std::invalid_argument("cycle point " + std::to_string(x) +
                                    " outside 1.." + std::to_string(c.n));
      if (used[x])
        throw std::invalid_argument("overlapping cycles at point " +
                                    std::to_string(x));
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      w[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(w));
}

PatternMatcher::PatternMatcher(Permutation pattern)
  : _pattern(std::move(pattern)),
    _below(_pattern.size(), -1),
    _above(_pattern.size(), -1)
{
  for (std::size_t j = 0; j < _pattern.size(); ++j) {
    int best_below = 0, best_above = static_cast<int>(_pattern.size()) + 1;
    for (std::size_t i = 0; i < j; ++i) {
      int v = _pattern[i];
      if (v < _pattern[j] && v > best_below) {
        best_below = v;
        _below[j] = static_cast<int>(i);
      }
      if (v > _pattern[j] && v < best_above) {
        best_above = v;
        _above[j] = static_cast<int>(i);
      }
    }
    if (_pattern[j] == static_cast<int>(_pattern.size()))
      _max_entry = j;
  }
}

bool PatternMatcher::search(std::span<int const> word, std::size_t entry,
                            std::size_t from, std::size_t pinned_entry,
                            std::size_t pinned_pos, std::vector<int> &values) const
{
  std::size_t const k = _pattern.size();
  if (entry == k)
    return true;

  int lo = _below[entry] >= 0 ? values[_below[entry]] : 0;
  int hi = _above[entry] >= 0 ? values[_above[entry]]
                              : std::numeric_limits<int>::max();

  std::size_t first = from, last = word.size() - (k - entry); // inclusive
  if (pinned_entry != no_entry) {
    if (entry == pinned_entry) {
      if (pinned_pos < first || pinned_pos > last)
        return false;
      first = last = pinned_pos;
    } else if (entry < pinned_entry) {
      if (pinned_pos < pinned_entry - entry)
        return false;
      last = std::min(last, pinned_pos - (pinned_entry - entry));
    }
  }

  int const pinned_value =
    pinned_entry != no_entry ? word[pinned_pos] : 0;
  bool const below_pin =
    pinned_entry != no_entry && _pattern[entry] < _pattern[pinned_entry];

  for (std::size_t pos = first; pos <= last && pos < word.size(); ++pos) {
    int v = word[pos];
    if (v <= lo || v >= hi)
      continue;
    if (pinned_entry != no_entry && entry < pinned_entry &&
        (v < pinned_value) != below_pin)
      continue;
    values[entry] = v;
    if (search(word, entry + 1, pos + 1, pinned_entry, pinned_pos, values))
      return true;
  }
  return false;
}

bool PatternMatcher::occurs_in(std::span<int const> word) const
{
  if (_pattern.size() > word.size())
    return false;
  if (_pattern.empty())
    return true;
  std::vector<int> values(_pattern.size());
  return search(word, 0, 0, no_entry, 0, values);
}

bool PatternMatcher::occurs_with(std::span<int const> word, std::size_t entry,
                                 std::size_t pos) const
{
  if (_pattern.size() > word.size() || entry >= _pattern.size() ||
      pos >= word.size())
    return false;
  std::vector<int> values(_pattern.size());
  return search(word, 0, 0, entry, pos, values);
}

bool contains(Permutation const &p, Permutation const &tau)
{
  return PatternMatcher(tau).occurs_in(p.word());
}

std::vector<Permutation> patterns_of(Permutation const &p, std::size_t k)
{
  if (k > p.size())
    return {};

  std::set<Permutation> found;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> sub(k);

  for (;;) {
    for (std::size_t i = 0; i < k; ++i)
      sub[i] = p[idx[i]];
    found.insert(Permutation::standardize(sub));

    // next k-subset of positions in lexicographic order
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == p.size() - k + i - 1)
      --i;
    if (i == 0)
      break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

std::vector<Permutation> all_permutations(std::size_t n)
{
  std::vector<Permutation> all;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    all.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return all;
}

} // namespace patgroup

std::size_t std::hash<patgroup::Permutation>::operator()(
  patgroup::Permutation const &p) const noexcept
{
  std::size_t h = p.size() * 0x9e3779b97f4a7c15ULL;
  for (int v : p.word())
    h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL + (h >> 29);
  return h;
}
