#ifndef PATGROUP_GRID_HPP
#define PATGROUP_GRID_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patgroup/permutation.hpp"

namespace patgroup
{

enum class PegLabel
{
  none,
  plus,
  minus,
};

/// A skeleton permutation whose entries may be marked + (increasing block),
/// - (decreasing block) or left unmarked (block of length at most one).
class PegPermutation
{
public:
  PegPermutation() = default;
  PegPermutation(Permutation skeleton, std::vector<PegLabel> labels);

  /// "3+1-24-", or space separated tokens such as "10+ 2 3-".
  static PegPermutation parse(std::string_view text);

  Permutation const &skeleton() const { return _skeleton; }
  std::vector<PegLabel> const &labels() const { return _labels; }
  std::size_t size() const { return _skeleton.size(); }

  std::size_t labeled_count() const;
  std::string str() const;

  friend bool operator==(PegPermutation const &, PegPermutation const &) = default;
  friend auto operator<=>(PegPermutation const &, PegPermutation const &) = default;

private:
  Permutation _skeleton;
  std::vector<PegLabel> _labels;
};

/// sigma[parts...]: block i sits at consecutive positions, holds consecutive
/// values ranked by sigma, and is order-isomorphic to parts[i]. Empty parts
/// are allowed. Throws std::invalid_argument on an arity mismatch.
Permutation inflate(Permutation const &sigma, std::vector<Permutation> const &parts);

/// Parts of a legal inflation of `peg` equal to p, if there is one.
std::optional<std::vector<Permutation>> grid_member(Permutation const &p,
                                                    PegPermutation const &peg);

/// Grid(peg) restricted to length n, sorted, without duplicates.
std::vector<Permutation> grid_section(PegPermutation const &peg, std::size_t n);

/// Size of the union of the sections of several pegs.
std::size_t grid_union_count(std::vector<PegPermutation> const &pegs, std::size_t n);

struct BoundedClassReport
{
  bool bounded = false;
  /// First length at which the count is measured.
  std::size_t n_star = 0;
  /// Counts on [n_star, n_star + 3].
  std::vector<std::size_t> counts;
  /// Set when bounded and the counts agree on the whole window.
  std::optional<std::size_t> constant;
};

/// A union of grid classes has eventually constant size iff each peg carries
/// at most one label. The constant is measured on a short window starting at
/// the larger of (unlabeled entries + 1 of any labeled peg) and (length + 1
/// of any unlabeled peg).
BoundedClassReport bounded_class_check(std::vector<PegPermutation> const &pegs);

enum class CoreDirection
{
  ascending,  // 123[tau, id_m, sigma]
  descending, // 321[sigma, psi_m, tau]
};

struct StructureForm
{
  CoreDirection direction;
  /// The block before the monotone core, in position order.
  Permutation before;
  std::size_t core_length = 0;
  /// The block after the core.
  Permutation after;

  std::string str() const;
};

/// Decomposition with the longest monotone middle block (length >= 1). Ties
/// go to the ascending form, then to the shorter tau (the low-valued block).
std::optional<StructureForm> structure_form_check(Permutation const &p);

} // namespace patgroup

#endif // PATGROUP_GRID_HPP
