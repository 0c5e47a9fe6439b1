#ifndef PATGROUP_VERIFY_HPP
#define PATGROUP_VERIFY_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "patgroup/avoidance.hpp"
#include "patgroup/classify.hpp"
#include "patgroup/group.hpp"

namespace patgroup
{

/// One machine check: what was expected, what came out.
struct Check
{
  std::string label;
  std::string patterns;
  std::optional<std::size_t> n;
  std::string expected;
  std::string actual;
  bool pass = false;
  /// Neutral tag of the result the check belongs to, e.g. "lemma:subgroup".
  std::string anchor;
};

struct ScenarioReport
{
  std::string id;
  std::string description;
  std::size_t n_max = 0;
  std::vector<Check> checks;

  bool passed() const;
  Check const *first_failure() const;
  /// Command line that reruns this scenario.
  std::string reproduce() const;
};

struct ScenarioInfo
{
  std::string id;
  std::string description;
  /// Tags of the results this scenario exercises.
  std::vector<std::string> covers;
  /// Upper end of the scenario's n ranges unless overridden.
  std::size_t default_n_max = 9;
};

class UnknownScenario : public std::invalid_argument
{
public:
  explicit UnknownScenario(std::string const &id);
};

std::vector<ScenarioInfo> const &scenario_catalog();

/// Result tags that must each be covered by exactly one scenario.
std::vector<std::string> const &in_scope_results();

/// Throws UnknownScenario for an unregistered id. n_max lowers (or raises)
/// the top of every n range in the scenario.
ScenarioReport run_scenario(std::string const &id,
                            std::optional<std::size_t> n_max = std::nullopt);

// Generating-set filter ---------------------------------------------------

/// Length-k patterns contained in a generating pair (or family) of S_n, for
/// n large enough that the sets no longer change:
///   [0] (1,n) and the n-cycle, [1] the elementary transpositions,
///   [2] (1,2) and the n-cycle, [3] (n-1,n) and the n-cycle.
std::array<PatternSet, 4> generator_pattern_sets(std::size_t k);

/// Same sets computed inside S_n.
std::array<PatternSet, 4> generator_pattern_sets(std::size_t k, std::size_t n);

/// Some set of the four families (over all lengths in T) is disjoint from T,
/// so S_n(T) contains a generating set of S_n for every n.
bool generating_filter_hit(PatternSet const &t);

/// T survives the filter: every image of T under a symmetry that keeps
/// S_n(image) inside a conjugate of <S_n(T)> meets all four families.
bool generating_filter_candidate(PatternSet const &t);

/// Re-derivation of the three/one case split for three length-3 patterns and
/// one length-4 pattern that avoids them.
struct ThreePlusOneFilter
{
  /// Neither 321 nor 4321 in T; every symmetry image meets all four families.
  std::vector<PatternSet> psi_free;
  /// 321 in T; 4th pattern is neither 4321 nor 1234; 123 not in T; T and T^-1
  /// meet all four families.
  std::vector<PatternSet> psi3;
  /// 4th pattern is 4321; 123 not in T; T meets all four families.
  std::vector<PatternSet> psi4;
};

ThreePlusOneFilter three_plus_one_filter();

// Scans --------------------------------------------------------------------

struct ScanFamily
{
  std::size_t pattern_length = 3;
  std::size_t subset_size = 3;
  /// Leave the decreasing pattern out of the pool.
  bool exclude_psi = false;

  std::string str() const;
};

/// All subsets of the family in lexicographic order of their canonical form.
std::vector<PatternSet> family_members(ScanFamily const &family);

struct ScanOptions
{
  std::size_t n_from = 4;
  std::size_t n_to = 8;
  /// Extra lengths checked for orbits that survive the generating filter.
  std::vector<std::size_t> probe_ns;
  unsigned threads = 1;
};

struct GroupAtN
{
  std::size_t n = 0;
  BigInt order;
  bool generates_sn = false;
  GroupClass verdict;
  /// Fixed points and 2-point orbits of the action.
  std::vector<int> fixed_points;
  std::vector<std::vector<int>> swapped_pairs;
  std::string error;
};

GroupAtN group_at(PatternSet const &t, std::size_t n);

enum class OrbitStatus
{
  symmetric,
  trivial,
  exceptional,
};

std::string to_string(OrbitStatus s);

struct OrbitReport
{
  PatternSet representative;
  std::vector<PatternSet> members;
  /// Reverse and complement images were merged (no member holds psi_k).
  bool full_symmetry = false;
  bool filter_candidate = false;
  std::vector<GroupAtN> range;
  std::vector<GroupAtN> probes;
  OrbitStatus status = OrbitStatus::symmetric;
};

struct ScanReport
{
  std::string family;
  ScanOptions options;
  std::size_t family_size = 0;
  std::vector<OrbitReport> orbits;
  std::size_t candidate_count = 0;

  std::vector<OrbitReport const *> with_status(OrbitStatus s) const;
};

/// Orbit of T inside the family under inverse and reverse-complement, widened
/// by reverse and complement when no member contains a decreasing pattern.
std::vector<PatternSet> symmetry_orbit(PatternSet const &t, bool &full_symmetry);

ScanReport scan(std::vector<PatternSet> const &family, ScanOptions const &options,
                std::string family_label = "explicit");
ScanReport scan(ScanFamily const &family, ScanOptions const &options);

// Fixed points -------------------------------------------------------------

struct FixedPointProbe
{
  std::size_t n = 0;
  std::vector<int> fixed_points;
  std::vector<std::vector<int>> swapped_pairs;
  std::vector<std::size_t> orbit_sizes;
};

std::vector<FixedPointProbe> fixed_point_probe(PatternSet const &t, std::size_t n_from,
                                               std::size_t n_to);

} // namespace patgroup

#endif // PATGROUP_VERIFY_HPP
