#ifndef PATGROUP_PERMUTATION_HPP
#define PATGROUP_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace patgroup
{

/// Raised when two permutations (or a permutation and a group) of different
/// degrees are combined.
class DegreeMismatch : public std::invalid_argument
{
public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs);
};

/// Raised for malformed textual input.
class ParseError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of {1..n} in one-line notation.
///
/// Values are 1-based everywhere in the public interface. The empty
/// permutation is the unique element of S_0.
class Permutation
{
public:
  using value_type = int;

  Permutation() = default;

  /// Validates that `word` is a bijection on {1..word.size()}.
  explicit Permutation(std::vector<value_type> word);

  static Permutation identity(std::size_t n);
  /// n n-1 ... 2 1
  static Permutation decreasing(std::size_t n);

  /// Accepts "4 2 3 1" or, when n <= 9, the compact form "4231".
  static Permutation parse(std::string_view text);

  /// Relative order of an arbitrary sequence of distinct integers.
  static Permutation standardize(std::span<value_type const> values);

  std::size_t size() const { return _word.size(); }
  bool empty() const { return _word.empty(); }

  /// Image of the 1-based point i.
  value_type operator()(value_type i) const { return _word[i - 1]; }
  value_type operator[](std::size_t pos) const { return _word[pos]; }

  std::span<value_type const> word() const { return _word; }

  bool is_identity() const;
  bool is_decreasing() const;

  /// Space separated one-line form, e.g. "4 2 3 1".
  std::string str() const;
  /// Digit form "4231" when n <= 9, otherwise the spaced form.
  std::string compact() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  std::vector<value_type> _word;
};

/// r(i) = p(q(i)): q is applied first.
Permutation compose(Permutation const &p, Permutation const &q);
Permutation inverse(Permutation const &p);

Permutation reverse(Permutation const &p);
Permutation complement(Permutation const &p);
Permutation reverse_complement(Permutation const &p);

enum class Parity { even, odd };

Parity parity(Permutation const &p);

/// Order of p as an element of S_n.
std::uint64_t element_order(Permutation const &p);

/// Disjoint cycle decomposition. Cycles start at their smallest point and are
/// sorted by that point; fixed points are omitted.
struct CycleForm
{
  std::size_t n = 0;
  std::vector<std::vector<int>> cycles;

  /// "(1,4)(2,3)", or "()" for the identity.
  std::string str() const;

  /// Parses "(1,6,3,4,2,5)(7,8)"; n is the ambient degree.
  static CycleForm parse(std::string_view text, std::size_t n);

  friend bool operator==(CycleForm const &, CycleForm const &) = default;
};

CycleForm to_cycles(Permutation const &p);

/// Throws std::invalid_argument on overlapping supports or points outside
/// {1..n}.
Permutation from_cycles(CycleForm const &c);

/// Compiled form of a pattern for repeated containment queries.
///
/// Entries of the pattern are matched left to right; for each entry the
/// already matched entries whose values are its nearest neighbours from below
/// and above bound the admissible value window.
class PatternMatcher
{
public:
  explicit PatternMatcher(Permutation pattern);

  Permutation const &pattern() const { return _pattern; }
  std::size_t size() const { return _pattern.size(); }

  /// True iff some subsequence of `word` is order isomorphic to the pattern.
  bool occurs_in(std::span<int const> word) const;

  /// Like occurs_in, but only occurrences in which pattern entry `entry`
  /// (0-based) sits at position `pos` of `word`.
  bool occurs_with(std::span<int const> word, std::size_t entry,
                   std::size_t pos) const;

  /// 0-based index of the pattern's largest entry.
  std::size_t max_entry() const { return _max_entry; }

private:
  bool search(std::span<int const> word, std::size_t entry, std::size_t from,
              std::size_t pinned_entry, std::size_t pinned_pos,
              std::vector<int> &values) const;

  Permutation _pattern;
  std::vector<int> _below; // index of nearest smaller earlier entry, or -1
  std::vector<int> _above; // index of nearest larger earlier entry, or -1
  std::size_t _max_entry = 0;
};

/// Pattern containment: p >= tau.
bool contains(Permutation const &p, Permutation const &tau);

/// All length-k patterns of p, sorted.
std::vector<Permutation> patterns_of(Permutation const &p, std::size_t k);

/// Every permutation of length n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

} // namespace patgroup

template<>
struct std::hash<patgroup::Permutation>
{
  std::size_t operator()(patgroup::Permutation const &p) const noexcept;
};

#endif // PATGROUP_PERMUTATION_HPP
