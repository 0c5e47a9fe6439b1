#ifndef PATGROUP_REPORT_HPP
#define PATGROUP_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "patgroup/avoidance.hpp"
#include "patgroup/classify.hpp"
#include "patgroup/grid.hpp"
#include "patgroup/group.hpp"
#include "patgroup/verify.hpp"

namespace patgroup
{

using Json = nlohmann::ordered_json;

// Keys are emitted in a fixed order and big integers as decimal strings, so
// equal inputs give byte-identical documents.

Json to_json(Fingerprint const &fp);
Json to_json(GroupClass const &c, std::size_t n);
Json to_json(StabilityReport const &r);
Json to_json(AvoiderSet const &s, bool with_members);
Json to_json(ScenarioReport const &r);
Json to_json(ScanReport const &r);
Json to_json(FixedPointProbe const &p);

/// { n, patterns, order, generators (cycle notation), orbits }
Json group_json(std::size_t n, PatternSet const &t, AvoiderGroup const &g,
                bool order_only);

/// Membership answer with an optional witness decomposition.
Json grid_member_json(PegPermutation const &peg, Permutation const &p,
                      std::optional<std::vector<Permutation>> const &witness,
                      bool with_witness);
Json grid_section_json(PegPermutation const &peg, std::size_t n,
                       std::vector<Permutation> const &members);

/// Two-space indented dump with a trailing newline.
std::string dump(Json const &j);

/// Writes to `path`, or to stdout when the path is empty or "-".
void emit(Json const &j, std::string const &path);

} // namespace patgroup

#endif // PATGROUP_REPORT_HPP
