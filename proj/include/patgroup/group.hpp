#ifndef PATGROUP_GROUP_HPP
#define PATGROUP_GROUP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "patgroup/avoidance.hpp"
#include "patgroup/bigint.hpp"
#include "patgroup/permutation.hpp"

namespace patgroup
{

/// Raised when an operation would have to list more group elements than the
/// caller allowed.
class CapExceeded : public std::runtime_error
{
public:
  CapExceeded(BigInt const &order, std::size_t cap);
};

/// Base and strong generating set with explicit transversals.
///
/// Level i stabilizes base points 0..i-1; its transversal maps every point of
/// the orbit of base point i to a group element carrying the base point
/// there. Construction is deterministic: a new level takes as base point the
/// smallest point moved by the first generator that reaches it.
class StabChain
{
public:
  struct Level
  {
    int base_point = 0;
    std::vector<Permutation> generators;
    /// Indexed by point - 1; empty outside the orbit.
    std::vector<std::optional<Permutation>> transversal;
    /// Orbit points in discovery order.
    std::vector<int> orbit;
  };

  explicit StabChain(std::size_t degree = 0);

  std::size_t degree() const { return _degree; }
  std::vector<Level> const &levels() const { return _levels; }
  std::vector<int> base() const;

  /// Adds g to the group; returns false when g was already a member.
  bool extend(Permutation const &g);

  bool contains(Permutation const &g) const;

  /// Product of the orbit lengths.
  BigInt order() const;

  /// Calls visit on every element exactly once (unordered).
  template<typename Visit>
  void for_each_element(Visit &&visit) const
  {
    walk(0, Permutation::identity(_degree), visit);
  }

private:
  template<typename Visit>
  void walk(std::size_t level, Permutation const &prefix, Visit &visit) const
  {
    if (level == _levels.size()) {
      visit(prefix);
      return;
    }
    for (int x : _levels[level].orbit)
      walk(level + 1, compose(prefix, *_levels[level].transversal[x - 1]),
           visit);
  }

  /// Residue of g after sifting through levels from `level` on.
  Permutation sift(Permutation g, std::size_t level) const;
  bool extend_at(std::size_t level, Permutation const &g);

  std::size_t _degree;
  std::vector<Level> _levels;
};

/// A finitely generated permutation group with its stabilizer chain.
class GroupHandle
{
public:
  /// Throws DegreeMismatch when a generator has the wrong length.
  GroupHandle(std::vector<Permutation> generators, std::size_t degree);

  std::size_t degree() const { return _chain.degree(); }
  std::vector<Permutation> const &generators() const { return _generators; }
  StabChain const &chain() const { return _chain; }
  BigInt const &order() const { return _order; }

  bool is_member(Permutation const &p) const;

  /// All elements in lexicographic order. Throws CapExceeded when the order
  /// is larger than `cap`.
  std::vector<Permutation> elements(std::size_t cap = default_element_cap) const;

  /// Orbits of the natural action on {1..n}, each sorted, ordered by least
  /// point.
  std::vector<std::vector<int>> orbits() const;

  static constexpr std::size_t default_element_cap = 1'000'000;

private:
  std::vector<Permutation> _generators;
  StabChain _chain;
  BigInt _order;
};

GroupHandle build_group(std::vector<Permutation> generators, std::size_t degree);

/// p G p^-1
GroupHandle conjugate_group(GroupHandle const &g, Permutation const &p);

/// G is the internal semidirect product of N and H: both are subgroups of G,
/// N is normal in G, |N||H| = |G| and N meets H trivially. Throws CapExceeded
/// when H has more than `cap` elements.
bool semidirect_check(GroupHandle const &g, GroupHandle const &n,
                      GroupHandle const &h,
                      std::size_t cap = GroupHandle::default_element_cap);

/// Closure oracle independent of the chain: breadth-first products of the
/// generators. Returns nullopt when the closure exceeds `cap`.
std::optional<std::vector<Permutation>>
closure_by_search(std::span<Permutation const> generators, std::size_t degree,
                  std::size_t cap);

/// <S_n(T)> built by streaming the avoiders into the chain.
///
/// The handle's generators are the avoiders that enlarged the group, in
/// enumeration order. Streaming stops once the group is all of S_n, so
/// `avoider_count` is only known when the enumeration ran to completion.
struct AvoiderGroup
{
  GroupHandle group;
  std::optional<std::size_t> avoider_count;
};

AvoiderGroup avoider_group(std::size_t n, PatternSet const &patterns,
                           EnumerationStrategy strategy =
                             EnumerationStrategy::automatic);

} // namespace patgroup

#endif // PATGROUP_GROUP_HPP
