#include "patgroup/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace patgroup
{

BigInt factorial(unsigned n)
{
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

CapExceeded::CapExceeded(BigInt const &order, std::size_t cap)
  : std::runtime_error("group of order " + order.str() +
                       " exceeds the element cap of " + std::to_string(cap))
{}

StabChain::StabChain(std::size_t degree)
  : _degree(degree)
{}

std::vector<int> StabChain::base() const
{
  std::vector<int> b;
  for (auto const &level : _levels)
    b.push_back(level.base_point);
  return b;
}

Permutation StabChain::sift(Permutation g, std::size_t level) const
{
  for (; level < _levels.size(); ++level) {
    auto const &l = _levels[level];
    int x = g(l.base_point);
    auto const &u = l.transversal[x - 1];
    if (!u)
      return g;
    g = compose(inverse(*u), g);
  }
  return g;
}

bool StabChain::contains(Permutation const &g) const
{
  if (g.size() != _degree)
    throw DegreeMismatch(g.size(), _degree);
  return sift(g, 0).is_identity();
}

bool StabChain::extend(Permutation const &g)
{
  if (g.size() != _degree)
    throw DegreeMismatch(g.size(), _degree);
  return extend_at(0, g);
}

bool StabChain::extend_at(std::size_t level, Permutation const &g)
{
  if (sift(g, level).is_identity())
    return false;

  if (level == _levels.size()) {
    Level fresh;
    for (std::size_t i = 0; i < _degree; ++i) {
      if (g[i] != static_cast<int>(i + 1)) {
        fresh.base_point = static_cast<int>(i + 1);
        break;
      }
    }
    fresh.transversal.resize(_degree);
    fresh.transversal[fresh.base_point - 1] = Permutation::identity(_degree);
    fresh.orbit.push_back(fresh.base_point);
    _levels.push_back(std::move(fresh));
  }

  // _levels may reallocate during recursion, so always index afresh.
  _levels[level].generators.push_back(g);
  std::vector<Permutation> const gens = _levels[level].generators;
  std::size_t const old_size = _levels[level].orbit.size();
  std::span<Permutation const> only_new(&gens.back(), 1);

  auto applicable = [&](std::size_t idx) {
    return idx < old_size ? only_new : std::span<Permutation const>(gens);
  };

  for (std::size_t i = 0; i < _levels[level].orbit.size(); ++i) {
    auto &l = _levels[level];
    int x = l.orbit[i];
    for (auto const &s : applicable(i)) {
      int y = s(x);
      if (!l.transversal[y - 1]) {
        l.transversal[y - 1] = compose(s, *l.transversal[x - 1]);
        l.orbit.push_back(y);
      }
    }
  }

  // Schreier generators for every (orbit point, generator) pair not seen in
  // an earlier call; old transversal entries never change.
  std::size_t const orbit_size = _levels[level].orbit.size();
  for (std::size_t i = 0; i < orbit_size; ++i) {
    for (auto const &s : applicable(i)) {
      auto const &l = _levels[level];
      int x = l.orbit[i];
      int y = s(x);
      auto h = compose(inverse(*l.transversal[y - 1]),
                       compose(s, *l.transversal[x - 1]));
      if (!h.is_identity())
        extend_at(level + 1, h);
    }
  }
  return true;
}

BigInt StabChain::order() const
{
  BigInt o = 1;
  for (auto const &level : _levels)
    o *= level.orbit.size();
  return o;
}

GroupHandle::GroupHandle(std::vector<Permutation> generators, std::size_t degree)
  : _generators(std::move(generators)), _chain(degree)
{
  for (auto const &g : _generators) {
    if (g.size() != degree)
      throw DegreeMismatch(g.size(), degree);
  }
  for (auto const &g : _generators)
    _chain.extend(g);
  _order = _chain.order();
}

bool GroupHandle::is_member(Permutation const &p) const
{
  return _chain.contains(p);
}

std::vector<Permutation> GroupHandle::elements(std::size_t cap) const
{
  if (_order > cap)
    throw CapExceeded(_order, cap);

  std::vector<Permutation> all;
  all.reserve(static_cast<std::size_t>(_order));
  _chain.for_each_element([&](Permutation const &p) { all.push_back(p); });
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<std::vector<int>> GroupHandle::orbits() const
{
  std::size_t const n = degree();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };

  for (auto const &g : _generators) {
    for (std::size_t i = 0; i < n; ++i) {
      auto a = find(i), b = find(g[i] - 1);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::vector<std::vector<int>> by_root(n);
  for (std::size_t i = 0; i < n; ++i)
    by_root[find(i)].push_back(static_cast<int>(i + 1));

  std::vector<std::vector<int>> result;
  for (auto &o : by_root) {
    if (!o.empty())
      result.push_back(std::move(o));
  }
  return result;
}

GroupHandle build_group(std::vector<Permutation> generators, std::size_t degree)
{
  return GroupHandle(std::move(generators), degree);
}

GroupHandle conjugate_group(GroupHandle const &g, Permutation const &p)
{
  if (p.size() != g.degree())
    throw DegreeMismatch(p.size(), g.degree());

  auto p_inv = inverse(p);
  std::vector<Permutation> gens;
  gens.reserve(g.generators().size());
  for (auto const &x : g.generators())
    gens.push_back(compose(p, compose(x, p_inv)));
  return GroupHandle(std::move(gens), g.degree());
}

bool semidirect_check(GroupHandle const &g, GroupHandle const &n,
                      GroupHandle const &h, std::size_t cap)
{
  if (n.degree() != g.degree())
    throw DegreeMismatch(n.degree(), g.degree());
  if (h.degree() != g.degree())
    throw DegreeMismatch(h.degree(), g.degree());
  if (n.order() > cap)
    throw CapExceeded(n.order(), cap);
  if (h.order() > cap)
    throw CapExceeded(h.order(), cap);

  auto inside_g = [&](GroupHandle const &sub) {
    return std::all_of(sub.generators().begin(), sub.generators().end(),
                       [&](auto const &x) { return g.is_member(x); });
  };
  if (!inside_g(n) || !inside_g(h))
    return false;

  for (auto const &x : g.generators()) {
    auto x_inv = inverse(x);
    for (auto const &m : n.generators()) {
      if (!n.is_member(compose(x, compose(m, x_inv))))
        return false;
    }
  }

  if (n.order() * h.order() != g.order())
    return false;

  for (auto const &y : h.elements(cap)) {
    if (!y.is_identity() && n.is_member(y))
      return false;
  }
  return true;
}

std::optional<std::vector<Permutation>>
closure_by_search(std::span<Permutation const> generators, std::size_t degree,
                  std::size_t cap)
{
  auto id = Permutation::identity(degree);
  std::unordered_set<Permutation> seen{id};
  std::deque<Permutation> queue{id};

  while (!queue.empty()) {
    auto x = std::move(queue.front());
    queue.pop_front();
    for (auto const &s : generators) {
      auto y = compose(s, x);
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          return std::nullopt;
        queue.push_back(std::move(y));
      }
    }
  }

  std::vector<Permutation> all(seen.begin(), seen.end());
  std::sort(all.begin(), all.end());
  return all;
}

AvoiderGroup avoider_group(std::size_t n, PatternSet const &patterns,
                           EnumerationStrategy strategy)
{
  StabChain chain(n);
  std::vector<Permutation> essential;
  BigInt const full = factorial(static_cast<unsigned>(n));
  std::size_t seen = 0;
  bool stopped = false;

  for_each_avoider(
    n, patterns,
    [&](Permutation const &p) {
      ++seen;
      if (chain.extend(p)) {
        essential.push_back(p);
        if (chain.order() == full) {
          stopped = true;
          return false;
        }
      }
      return true;
    },
    strategy);

  std::optional<std::size_t> count;
  if (!stopped)
    count = seen;
  return {GroupHandle(std::move(essential), n), count};
}

} // namespace patgroup
