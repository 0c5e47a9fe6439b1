#include "patgroup/avoidance.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace patgroup
{

namespace
{

std::vector<std::string_view> split_commas(std::string_view text)
{
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

bool blank(std::string_view s)
{
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::vector<PatternMatcher> compile(PatternSet const &t)
{
  std::vector<PatternMatcher> matchers;
  matchers.reserve(t.size());
  for (auto const &p : t.patterns())
    matchers.emplace_back(p);
  return matchers;
}

bool has_empty_pattern(PatternSet const &t)
{
  return !t.empty() && t.patterns().front().empty();
}

/// Depth-first prefix extension over S_n(T).
class PrefixSearch
{
public:
  PrefixSearch(std::size_t n, PatternSet const &t)
    : _n(n), _matchers(compile(t)), _word(n), _used(n + 1, false)
  {}

  // Visit callback returns false to stop; returns false if stopped.
  template<typename Visit>
  bool run(std::size_t depth, Visit &&visit)
  {
    if (depth == _n)
      return visit(_word);

    for (std::size_t v = 1; v <= _n; ++v) {
      if (_used[v])
        continue;
      _word[depth] = static_cast<int>(v);
      if (!extends(depth))
        continue;
      _used[v] = true;
      bool go_on = run(depth + 1, visit);
      _used[v] = false;
      if (!go_on)
        return false;
    }
    return true;
  }

  template<typename Visit>
  bool run_from(int first, Visit &&visit)
  {
    _word[0] = first;
    if (!extends(0))
      return true;
    _used[first] = true;
    bool go_on = run(1, visit);
    _used[first] = false;
    return go_on;
  }

private:
  bool extends(std::size_t pos) const
  {
    std::span<int const> prefix(_word.data(), pos + 1);
    for (auto const &m : _matchers) {
      if (m.size() <= pos + 1 && m.occurs_with(prefix, m.size() - 1, pos))
        return false;
    }
    return true;
  }

  std::size_t _n;
  std::vector<PatternMatcher> _matchers;
  std::vector<int> _word;
  std::vector<bool> _used;
};

/// Inserts m at every position of each word of S_{m-1}(T) and hands the
/// survivors to `emit`; stops early when `emit` returns false.
template<typename Emit>
bool insert_max(std::vector<std::vector<int>> const &level, std::size_t m,
                std::vector<PatternMatcher> const &matchers, Emit &&emit)
{
  std::vector<int> w(m);
  for (auto const &q : level) {
    for (std::size_t pos = 0; pos < m; ++pos) {
      std::copy(q.begin(), q.begin() + pos, w.begin());
      w[pos] = static_cast<int>(m);
      std::copy(q.begin() + pos, q.end(), w.begin() + pos + 1);

      bool ok = std::none_of(matchers.begin(), matchers.end(), [&](auto const &mt) {
        return mt.size() <= m && mt.occurs_with(w, mt.max_entry(), pos);
      });
      if (ok && !emit(w))
        return false;
    }
  }
  return true;
}

/// Level-by-level growth of S_m(T) by inserting the maximum m.
std::vector<std::vector<int>> grow_to(std::size_t n, PatternSet const &t,
                                      std::size_t limit)
{
  auto matchers = compile(t);
  std::vector<std::vector<int>> level{{}};

  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::vector<int>> next;
    insert_max(level, m, matchers, [&](std::vector<int> const &w) {
      if (next.size() == limit)
        throw EnumerationLimitExceeded(limit);
      next.push_back(w);
      return true;
    });
    level = std::move(next);
  }
  return level;
}

EnumerationStrategy resolve(EnumerationStrategy s, std::size_t n)
{
  if (s != EnumerationStrategy::automatic)
    return s;
  return n <= 12 ? EnumerationStrategy::prefix_extension
                 : EnumerationStrategy::max_insertion;
}

} // namespace

bool pattern_less(Permutation const &a, Permutation const &b)
{
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

PatternSet::PatternSet(std::vector<Permutation> patterns)
  : _patterns(std::move(patterns))
{
  std::sort(_patterns.begin(), _patterns.end(), pattern_less);
  _patterns.erase(std::unique(_patterns.begin(), _patterns.end()),
                  _patterns.end());
}

PatternSet::PatternSet(std::initializer_list<char const *> patterns)
{
  std::vector<Permutation> ps;
  for (auto const *p : patterns)
    ps.push_back(Permutation::parse(p));
  *this = PatternSet(std::move(ps));
}

PatternSet PatternSet::parse(std::string_view text)
{
  std::vector<Permutation> ps;
  if (blank(text))
    return {};
  for (auto part : split_commas(text)) {
    if (blank(part))
      throw ParseError("empty pattern in '" + std::string(text) + "'");
    ps.push_back(Permutation::parse(part));
  }
  return PatternSet(std::move(ps));
}

bool PatternSet::has(Permutation const &p) const
{
  return std::binary_search(_patterns.begin(), _patterns.end(), p,
                            pattern_less);
}

std::string PatternSet::key() const
{
  std::string s;
  for (std::size_t i = 0; i < _patterns.size(); ++i) {
    if (i)
      s += ", ";
    s += _patterns[i].compact();
  }
  return s;
}

bool PatternSet::has_decreasing() const
{
  return std::any_of(_patterns.begin(), _patterns.end(), [](auto const &p) {
    return !p.empty() && p.is_decreasing();
  });
}

bool PatternSet::has_increasing() const
{
  return std::any_of(_patterns.begin(), _patterns.end(), [](auto const &p) {
    return !p.empty() && p.is_identity();
  });
}

PatternSet PatternSet::normalized() const
{
  std::vector<Permutation> kept;
  for (auto const &p : _patterns) {
    bool redundant = std::any_of(_patterns.begin(), _patterns.end(),
                                 [&](auto const &q) {
                                   return q != p && contains(p, q);
                                 });
    if (!redundant)
      kept.push_back(p);
  }
  return PatternSet(std::move(kept));
}

EnumerationLimitExceeded::EnumerationLimitExceeded(std::size_t limit)
  : std::runtime_error("enumeration exceeds the member limit of " +
                       std::to_string(limit))
{}

void for_each_avoider(std::size_t n, PatternSet const &patterns,
                      std::function<bool(Permutation const &)> const &visit,
                      EnumerationStrategy strategy)
{
  if (has_empty_pattern(patterns))
    return;

  if (resolve(strategy, n) == EnumerationStrategy::max_insertion) {
    if (n == 0) {
      visit(Permutation());
      return;
    }
    // The top level is streamed, so an early stop never materializes it.
    auto below = grow_to(n - 1, patterns, EnumerationOptions{}.member_limit);
    insert_max(below, n, compile(patterns), [&](std::vector<int> const &w) {
      return visit(Permutation(w));
    });
    return;
  }

  PrefixSearch search(n, patterns);
  search.run(0, [&](std::vector<int> const &w) { return visit(Permutation(w)); });
}

AvoiderSet enumerate_avoiders(std::size_t n, PatternSet const &patterns,
                              EnumerationOptions const &options)
{
  AvoiderSet result{n, patterns, {}};
  if (has_empty_pattern(patterns))
    return result;

  auto const limit = options.member_limit;

  if (resolve(options.strategy, n) == EnumerationStrategy::max_insertion) {
    auto words = grow_to(n, patterns, limit);
    result.members.reserve(words.size());
    for (auto &w : words)
      result.members.emplace_back(std::move(w));
    std::sort(result.members.begin(), result.members.end());
    return result;
  }

  if (options.threads <= 1 || n < 2) {
    PrefixSearch search(n, patterns);
    search.run(0, [&](std::vector<int> const &w) {
      if (result.members.size() == limit)
        throw EnumerationLimitExceeded(limit);
      result.members.emplace_back(w);
      return true;
    });
    return result;
  }

  // one bucket per first symbol, merged in order
  std::vector<std::vector<Permutation>> buckets(n);
  std::vector<std::exception_ptr> errors(n);
  std::size_t next = 0;
  std::mutex lock;
  auto worker = [&] {
    for (;;) {
      std::size_t first;
      {
        std::lock_guard<std::mutex> guard(lock);
        if (next == n)
          return;
        first = next++;
      }
      try {
        PrefixSearch search(n, patterns);
        search.run_from(static_cast<int>(first + 1),
                        [&](std::vector<int> const &w) {
                          if (buckets[first].size() == limit)
                            throw EnumerationLimitExceeded(limit);
                          buckets[first].emplace_back(w);
                          return true;
                        });
      } catch (...) {
        errors[first] = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned i = 0; i < std::min<std::size_t>(options.threads, n); ++i)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();

  for (auto const &e : errors) {
    if (e)
      std::rethrow_exception(e);
  }
  for (auto &b : buckets) {
    for (auto &p : b) {
      if (result.members.size() == limit)
        throw EnumerationLimitExceeded(limit);
      result.members.push_back(std::move(p));
    }
  }
  return result;
}

BigInt count_avoiders(std::size_t n, PatternSet const &patterns,
                      EnumerationStrategy strategy)
{
  if (has_empty_pattern(patterns))
    return 0;

  if (resolve(strategy, n) == EnumerationStrategy::max_insertion)
    return BigInt(grow_to(n, patterns, static_cast<std::size_t>(-1)).size());

  std::uint64_t count = 0;
  PrefixSearch search(n, patterns);
  search.run(0, [&](std::vector<int> const &) {
    ++count;
    return true;
  });
  return BigInt(count);
}

std::string to_string(Symmetry s)
{
  switch (s) {
  case Symmetry::identity:
    return "id";
  case Symmetry::reverse:
    return "r";
  case Symmetry::complement:
    return "c";
  case Symmetry::reverse_complement:
    return "rc";
  case Symmetry::inverse:
    return "inv";
  case Symmetry::reverse_inverse:
    return "r-inv";
  case Symmetry::complement_inverse:
    return "c-inv";
  case Symmetry::reverse_complement_inverse:
    return "rc-inv";
  }
  return "?";
}

Permutation apply(Symmetry s, Permutation const &p)
{
  switch (s) {
  case Symmetry::identity:
    return p;
  case Symmetry::reverse:
    return reverse(p);
  case Symmetry::complement:
    return complement(p);
  case Symmetry::reverse_complement:
    return reverse_complement(p);
  case Symmetry::inverse:
    return inverse(p);
  case Symmetry::reverse_inverse:
    return inverse(reverse(p));
  case Symmetry::complement_inverse:
    return inverse(complement(p));
  case Symmetry::reverse_complement_inverse:
    return inverse(reverse_complement(p));
  }
  return p;
}

PatternSet apply(Symmetry s, PatternSet const &t)
{
  return t.map([s](Permutation const &p) { return apply(s, p); });
}

bool flips_monotone(Symmetry s)
{
  return s == Symmetry::reverse || s == Symmetry::complement ||
         s == Symmetry::reverse_inverse || s == Symmetry::complement_inverse;
}

std::vector<SymmetryImage> symmetry_images(PatternSet const &t)
{
  // A single reverse or complement swaps increasing and decreasing patterns,
  // so it preserves the generated group only when T has neither.
  bool const psi_free = !t.has_decreasing();
  bool const monotone_free = psi_free && !t.has_increasing();

  std::vector<SymmetryImage> images;
  for (auto s : all_symmetries) {
    bool flips = flips_monotone(s);
    bool keeps_psi_side = s == Symmetry::identity || s == Symmetry::inverse;
    images.push_back({s, apply(s, t), flips ? monotone_free : true,
                      keeps_psi_side || psi_free});
  }
  return images;
}

std::optional<std::size_t> es_empty_bound(PatternSet const &t)
{
  std::optional<std::size_t> best;
  for (auto const &up : t.patterns()) {
    if (up.empty() || !up.is_identity())
      continue;
    for (auto const &down : t.patterns()) {
      if (down.empty() || !down.is_decreasing())
        continue;
      std::size_t b = (up.size() - 1) * (down.size() - 1);
      if (!best || b < *best)
        best = b;
    }
  }
  return best;
}

bool is_subgroup_set(std::size_t n, PatternSet const &t)
{
  auto avoiders = enumerate_avoiders(n, t);
  auto const &members = avoiders.members;
  if (members.empty())
    return false;

  std::unordered_set<Permutation> lookup(members.begin(), members.end());
  for (auto const &a : members) {
    if (!lookup.contains(inverse(a)))
      return false;
    for (auto const &b : members) {
      if (!lookup.contains(compose(a, b)))
        return false;
    }
  }
  return true;
}

} // namespace patgroup
