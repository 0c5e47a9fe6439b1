#ifndef PATGROUP_CLASSIFY_HPP
#define PATGROUP_CLASSIFY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "patgroup/avoidance.hpp"
#include "patgroup/bigint.hpp"
#include "patgroup/group.hpp"

namespace patgroup
{

/// Isomorphism invariants computed from a full element listing.
struct Fingerprint
{
  BigInt order;
  /// element order -> number of elements of that order
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t center_order = 0;
  std::uint64_t class_count = 0;
  bool abelian = false;
  /// Only `order` is meaningful: the group was too large to list.
  bool partial = false;

  std::string str() const;

  friend bool operator==(Fingerprint const &, Fingerprint const &) = default;
};

inline constexpr std::size_t default_fingerprint_cap = 100'000;

/// Throws CapExceeded when the order is above `cap`.
Fingerprint fingerprint(GroupHandle const &g, std::size_t cap = default_fingerprint_cap);

class DuplicateReference : public std::invalid_argument
{
public:
  explicit DuplicateReference(std::string const &id);
};

/// Named groups matched by fingerprint. Ids of the form "sym:k" stand for the
/// symmetric group S_k.
class ReferenceRegistry
{
public:
  struct Entry
  {
    std::string id;
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    Fingerprint fingerprint;
  };

  void register_reference(std::string id, std::vector<Permutation> generators,
                          std::size_t degree);

  /// Every id whose fingerprint equals fp, in registration order.
  std::vector<std::string> matches(Fingerprint const &fp) const;

  std::optional<std::string> match_named(Fingerprint const &fp) const;

  std::vector<Entry> const &entries() const { return _entries; }

  /// sym:2 .. sym:6, s3xs3:2 and g1152.
  static ReferenceRegistry const &shipped();

private:
  std::vector<Entry> _entries;
};

enum class GroupKind
{
  trivial,
  cyclic,
  klein_four,
  dihedral,
  symmetric,
  alternating,
  named,
  other,
};

std::string to_string(GroupKind kind);

struct GroupClass
{
  GroupKind kind = GroupKind::other;
  /// m for Cyclic(m), Dihedral(m), Symmetric(m), Alternating(m).
  std::size_t param = 0;
  std::string ref;
  BigInt order;
  std::optional<Fingerprint> fingerprint;
  bool partial = false;
  /// More than one reference matched the fingerprint.
  bool ambiguous = false;

  /// "Dihedral(5)", "Named(g1152)", "Other(order 48, ...)"
  std::string str() const;
  /// Equal signatures mean equal verdicts (kind, parameters, fingerprint).
  std::string signature() const;
  bool satisfies_order_law() const;
};

/// Trivial, Symmetric on its support, Alternating on its support (m >= 4),
/// Cyclic, KleinFour, Dihedral(m >= 3), named reference, Other.
///
/// A subgroup equal to Sym(X) for its support X is reported as Symmetric(|X|)
/// whenever |X| < degree or |X| >= 4; on exactly three points of S_3 the
/// verdicts are Dihedral(3) and Cyclic(3).
GroupClass classify(GroupHandle const &g,
                    ReferenceRegistry const &registry = ReferenceRegistry::shipped(),
                    std::size_t cap = default_fingerprint_cap);

/// Same isomorphism type, identifying S_2 ~ Z_2, S_3 ~ D_3, A_3 ~ Z_3,
/// D_2 ~ Klein four.
bool isomorphic_verdicts(GroupClass const &a, GroupClass const &b);

struct StabilityReport
{
  PatternSet patterns;
  std::size_t n_from = 0;
  std::size_t n_to = 0;
  std::vector<GroupClass> verdicts; // index i is n_from + i
  /// First n of the longest constant suffix of the range.
  std::size_t constant_from = 0;
  /// At least three top-of-range verdicts agree.
  bool stabilized = false;
};

StabilityReport classify_sequence(PatternSet const &t, std::size_t n_from,
                                  std::size_t n_to,
                                  ReferenceRegistry const &registry =
                                    ReferenceRegistry::shipped());

} // namespace patgroup

#endif // PATGROUP_CLASSIFY_HPP
