#include "patgroup/report.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace patgroup
{

namespace
{

Json perm_list(std::vector<Permutation> const &ps)
{
  Json out = Json::array();
  for (auto const &p : ps)
    out.push_back(p.str());
  return out;
}

Json params_of(GroupClass const &c)
{
  Json p = Json::object();
  switch (c.kind) {
  case GroupKind::cyclic:
  case GroupKind::dihedral:
  case GroupKind::symmetric:
  case GroupKind::alternating:
    p["m"] = c.param;
    break;
  case GroupKind::named:
    p["ref"] = c.ref;
    break;
  default:
    break;
  }
  return p;
}

Json group_at_json(GroupAtN const &g)
{
  Json j;
  j["n"] = g.n;
  if (!g.error.empty()) {
    j["error"] = g.error;
    return j;
  }
  j["order"] = g.order.str();
  j["generates_sn"] = g.generates_sn;
  j["verdict"] = g.verdict.str();
  if (!g.fixed_points.empty())
    j["fixed_points"] = g.fixed_points;
  if (!g.swapped_pairs.empty())
    j["swapped_pairs"] = g.swapped_pairs;
  return j;
}

} // namespace

Json to_json(Fingerprint const &fp)
{
  Json j;
  j["order"] = fp.order.str();
  if (fp.partial) {
    j["partial"] = true;
    return j;
  }
  Json hist = Json::object();
  for (auto const &[k, v] : fp.histogram)
    hist[std::to_string(k)] = v;
  j["element_order_histogram"] = hist;
  j["center_order"] = fp.center_order;
  j["conjugacy_class_count"] = fp.class_count;
  j["abelian"] = fp.abelian;
  return j;
}

Json to_json(GroupClass const &c, std::size_t n)
{
  Json j;
  j["n"] = n;
  j["kind"] = to_string(c.kind);
  j["params"] = params_of(c);
  j["order"] = c.order.str();
  if (c.fingerprint)
    j["fingerprint"] = to_json(*c.fingerprint);
  if (c.partial)
    j["partial"] = true;
  if (c.ambiguous)
    j["ambiguous"] = true;
  return j;
}

Json to_json(StabilityReport const &r)
{
  Json j;
  j["patterns"] = r.patterns.key();
  j["n_from"] = r.n_from;
  j["n_to"] = r.n_to;
  Json verdicts = Json::array();
  for (std::size_t i = 0; i < r.verdicts.size(); ++i)
    verdicts.push_back(to_json(r.verdicts[i], r.n_from + i));
  j["verdicts"] = verdicts;

  Json s;
  s["constant_on_tested_range"] =
    "[" + std::to_string(r.constant_from) + ", " + std::to_string(r.n_to) + "]";
  s["stabilized"] = r.stabilized;
  if (!r.verdicts.empty())
    s["verdict"] = r.verdicts.back().str();
  j["stability"] = s;
  return j;
}

Json to_json(AvoiderSet const &s, bool with_members)
{
  Json j;
  j["n"] = s.n;
  j["patterns"] = s.source.key();
  j["count"] = std::to_string(s.members.size());
  if (with_members)
    j["members"] = perm_list(s.members);
  return j;
}

Json to_json(ScenarioReport const &r)
{
  Json j;
  j["scenario"] = r.id;
  j["config"] = {{"description", r.description}, {"n_max", r.n_max}};

  Json checks = Json::array();
  std::size_t failed = 0;
  for (auto const &c : r.checks) {
    Json cj;
    cj["label"] = c.label;
    cj["patterns"] = c.patterns;
    cj["n"] = c.n ? Json(*c.n) : Json(nullptr);
    cj["expected"] = c.expected;
    cj["actual"] = c.actual;
    cj["pass"] = c.pass;
    cj["paper_anchor"] = c.anchor;
    checks.push_back(std::move(cj));
    failed += c.pass ? 0 : 1;
  }
  j["checks"] = checks;

  Json summary;
  summary["checks"] = r.checks.size();
  summary["failed"] = failed;
  summary["pass"] = failed == 0;
  summary["verified_on"] = "n <= " + std::to_string(r.n_max) + " (finite range)";
  if (auto const *f = r.first_failure()) {
    summary["first_failure"] = f->label + " [" + f->patterns + "]";
    summary["reproduce"] = r.reproduce();
  }
  j["summary"] = summary;
  return j;
}

Json to_json(ScanReport const &r)
{
  Json j;
  j["family"] = r.family;
  Json config;
  config["n_from"] = r.options.n_from;
  config["n_to"] = r.options.n_to;
  config["probe_ns"] = r.options.probe_ns;
  j["config"] = config;

  Json orbits = Json::array();
  for (auto const &o : r.orbits) {
    Json oj;
    oj["representative"] = o.representative.key();
    Json members = Json::array();
    for (auto const &m : o.members)
      members.push_back(m.key());
    oj["members"] = members;
    oj["full_symmetry"] = o.full_symmetry;
    oj["filter_candidate"] = o.filter_candidate;
    oj["status"] = to_string(o.status);
    Json range = Json::array();
    for (auto const &g : o.range)
      range.push_back(group_at_json(g));
    oj["verdicts"] = range;
    if (!o.probes.empty()) {
      Json probes = Json::array();
      for (auto const &g : o.probes)
        probes.push_back(group_at_json(g));
      oj["probes"] = probes;
    }
    orbits.push_back(std::move(oj));
  }
  j["orbits"] = orbits;

  Json exceptional = Json::array();
  for (auto const *o : r.with_status(OrbitStatus::exceptional))
    exceptional.push_back(o->representative.key());
  Json trivial = Json::array();
  for (auto const *o : r.with_status(OrbitStatus::trivial))
    trivial.push_back(o->representative.key());

  Json summary;
  summary["family_size"] = r.family_size;
  summary["orbits"] = r.orbits.size();
  summary["filter_candidates"] = r.candidate_count;
  summary["exceptional"] = exceptional;
  summary["trivial"] = trivial;
  summary["verified_on"] = "[" + std::to_string(r.options.n_from) + ", " +
                           std::to_string(r.options.n_to) + "]";
  j["summary"] = summary;
  return j;
}

Json to_json(FixedPointProbe const &p)
{
  Json j;
  j["n"] = p.n;
  j["fixed_points"] = p.fixed_points;
  j["swapped_pairs"] = p.swapped_pairs;
  j["orbit_sizes"] = p.orbit_sizes;
  return j;
}

Json group_json(std::size_t n, PatternSet const &t, AvoiderGroup const &g, bool order_only)
{
  Json j;
  j["n"] = n;
  j["patterns"] = t.key();
  j["order"] = g.group.order().str();
  if (order_only)
    return j;
  if (g.avoider_count)
    j["avoiders"] = *g.avoider_count;
  Json gens = Json::array();
  for (auto const &s : g.group.generators())
    gens.push_back(to_cycles(s).str());
  j["generators"] = gens;
  j["orbits"] = g.group.orbits();
  return j;
}

Json grid_member_json(PegPermutation const &peg, Permutation const &p,
                      std::optional<std::vector<Permutation>> const &witness,
                      bool with_witness)
{
  Json j;
  j["peg"] = peg.str();
  j["permutation"] = p.str();
  j["member"] = witness.has_value();
  if (with_witness && witness)
    j["witness"] = perm_list(*witness);
  return j;
}

Json grid_section_json(PegPermutation const &peg, std::size_t n,
                       std::vector<Permutation> const &members)
{
  Json j;
  j["peg"] = peg.str();
  j["n"] = n;
  j["count"] = members.size();
  j["members"] = perm_list(members);
  return j;
}

std::string dump(Json const &j)
{
  return j.dump(2) + "\n";
}

void emit(Json const &j, std::string const &path)
{
  if (path.empty() || path == "-") {
    std::cout << dump(j);
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << dump(j);
}

} // namespace patgroup
