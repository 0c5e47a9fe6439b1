#ifndef PATGROUP_AVOIDANCE_HPP
#define PATGROUP_AVOIDANCE_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "patgroup/bigint.hpp"
#include "patgroup/permutation.hpp"

namespace patgroup
{

/// A finite set of patterns T. Patterns are kept in canonical order (by length,
/// then lexicographically); duplicates collapse.
class PatternSet
{
public:
  PatternSet() = default;
  explicit PatternSet(std::vector<Permutation> patterns);
  PatternSet(std::initializer_list<char const *> patterns);

  /// "132, 231, 321, 4 1 2 3"
  static PatternSet parse(std::string_view text);

  std::vector<Permutation> const &patterns() const { return _patterns; }
  std::size_t size() const { return _patterns.size(); }
  bool empty() const { return _patterns.empty(); }

  bool has(Permutation const &p) const;

  /// Canonical textual form, e.g. "123, 231, 312".
  std::string key() const;

  /// Some decreasing pattern psi_k (k >= 1) is in the set.
  bool has_decreasing() const;
  /// Some identity pattern id_k (k >= 1) is in the set.
  bool has_increasing() const;

  /// Drops every pattern that contains a different member of the set.
  PatternSet normalized() const;

  template<typename F>
  PatternSet map(F &&f) const
  {
    std::vector<Permutation> image;
    image.reserve(_patterns.size());
    for (auto const &p : _patterns)
      image.push_back(f(p));
    return PatternSet(std::move(image));
  }

  friend bool operator==(PatternSet const &, PatternSet const &) = default;
  friend auto operator<=>(PatternSet const &, PatternSet const &) = default;

private:
  std::vector<Permutation> _patterns;
};

/// Canonical order on patterns: shorter first, then lexicographic.
bool pattern_less(Permutation const &a, Permutation const &b);

/// S_n(T) in lexicographic order.
struct AvoiderSet
{
  std::size_t n = 0;
  PatternSet source;
  std::vector<Permutation> members;
};

class EnumerationLimitExceeded : public std::runtime_error
{
public:
  explicit EnumerationLimitExceeded(std::size_t limit);
};

enum class EnumerationStrategy
{
  /// Pick prefix extension for n <= 12, maximum insertion above.
  automatic,
  /// Build words left to right; only occurrences ending at the new entry are
  /// tested.
  prefix_extension,
  /// Grow S_{m}(T) from S_{m-1}(T) by inserting m; only occurrences using the
  /// new maximum are tested.
  max_insertion,
};

struct EnumerationOptions
{
  std::size_t member_limit = 10'000'000;
  EnumerationStrategy strategy = EnumerationStrategy::automatic;
  /// Worker threads for prefix extension (partitioned on the first symbol).
  unsigned threads = 1;
};

/// Streams S_n(T) to `visit`; returning false from `visit` stops the search.
/// Prefix extension visits members in lexicographic order; max insertion
/// visits them in the order of the previous level.
void for_each_avoider(std::size_t n, PatternSet const &patterns,
                      std::function<bool(Permutation const &)> const &visit,
                      EnumerationStrategy strategy = EnumerationStrategy::automatic);

AvoiderSet enumerate_avoiders(std::size_t n, PatternSet const &patterns,
                              EnumerationOptions const &options = {});

BigInt count_avoiders(std::size_t n, PatternSet const &patterns,
                      EnumerationStrategy strategy = EnumerationStrategy::automatic);

/// The eight symmetries generated by reverse, complement and inverse.
enum class Symmetry
{
  identity,
  reverse,
  complement,
  reverse_complement,
  inverse,
  reverse_inverse,            // (p^r)^-1
  complement_inverse,         // (p^c)^-1
  reverse_complement_inverse, // (p^rc)^-1
};

inline constexpr std::array<Symmetry, 8> all_symmetries = {
  Symmetry::identity,           Symmetry::reverse,
  Symmetry::complement,         Symmetry::reverse_complement,
  Symmetry::inverse,            Symmetry::reverse_inverse,
  Symmetry::complement_inverse, Symmetry::reverse_complement_inverse,
};

/// Symmetries that map <S_n(T)> to itself or to a conjugate for every T.
inline constexpr std::array<Symmetry, 4> conjugating_symmetries = {
  Symmetry::identity, Symmetry::inverse, Symmetry::reverse_complement,
  Symmetry::reverse_complement_inverse};

std::string to_string(Symmetry s);
Permutation apply(Symmetry s, Permutation const &p);
PatternSet apply(Symmetry s, PatternSet const &t);

/// True for symmetries that involve a single reverse or complement.
bool flips_monotone(Symmetry s);

struct SymmetryImage
{
  Symmetry symmetry;
  PatternSet image;
  /// <S_n(image)> equals <S_n(T)> or a conjugate of it, for every n.
  bool group_preserving;
  /// S_n(image) lies inside <S_n(T)> for every n (psi-free closure).
  bool within_group;
};

std::vector<SymmetryImage> symmetry_images(PatternSet const &t);

/// Smallest (r-1)(s-1) over id_r, psi_s in T; S_n(T) is empty for n > bound.
std::optional<std::size_t> es_empty_bound(PatternSet const &t);

/// S_n(T) is closed under composition and inverses (and non-empty).
bool is_subgroup_set(std::size_t n, PatternSet const &t);

} // namespace patgroup

#endif // PATGROUP_AVOIDANCE_HPP
