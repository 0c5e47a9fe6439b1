#include <doctest.h>

#include <map>
#include <random>

#include "patgroup/report.hpp"
#include "patgroup/verify.hpp"

using namespace patgroup;

TEST_CASE("every in-scope result is covered by exactly one scenario")
{
  std::map<std::string, int> seen;
  for (auto const &s : scenario_catalog())
    for (auto const &tag : s.covers)
      ++seen[tag];
  for (auto const &tag : in_scope_results())
    CHECK_MESSAGE(seen[tag] == 1, tag);
  CHECK(seen.size() == in_scope_results().size());

  std::set<std::string> ids;
  for (auto const &s : scenario_catalog())
    CHECK(ids.insert(s.id).second);
}

TEST_CASE("unknown scenario")
{
  CHECK_THROWS_AS(run_scenario("no-such-scenario"), UnknownScenario);
}

TEST_CASE("scenarios pass")
{
  for (auto const &s : scenario_catalog()) {
    SUBCASE(s.id.c_str())
    {
      auto r = run_scenario(s.id);
      CHECK(!r.checks.empty());
      auto const *f = r.first_failure();
      CHECK_MESSAGE(f == nullptr, (f ? f->label + " [" + f->patterns + "]: expected " +
                                         f->expected + ", got " + f->actual + "; " +
                                         r.reproduce()
                                     : std::string()));
      for (auto const &c : r.checks)
        CHECK(!c.anchor.empty());
    }
  }
}

TEST_CASE("a lowered n_max still passes")
{
  auto r = run_scenario("three-of-three", 6);
  CHECK(r.n_max == 6);
  CHECK(r.passed());
  CHECK(r.reproduce() == "patgroup verify --scenario three-of-three --n-max 6");
}

TEST_CASE("scan of an empty family")
{
  auto r = scan(std::vector<PatternSet>{}, ScanOptions{});
  CHECK(r.family_size == 0);
  CHECK(r.orbits.empty());
}

TEST_CASE("scan of the triples of S_3")
{
  ScanOptions opts;
  opts.n_from = 4;
  opts.n_to = 8;
  auto r = scan(ScanFamily{3, 3, false}, opts);
  CHECK(r.family_size == 20);

  std::size_t members = 0;
  std::set<PatternSet> all;
  for (auto const &o : r.orbits) {
    members += o.members.size();
    all.insert(o.members.begin(), o.members.end());
    CHECK(o.representative == *std::min_element(o.members.begin(), o.members.end()));
  }
  CHECK(members == 20);
  CHECK(all.size() == 20);

  std::vector<std::string> exceptional, trivial;
  for (auto const *o : r.with_status(OrbitStatus::exceptional))
    exceptional.push_back(o->representative.key());
  for (auto const *o : r.with_status(OrbitStatus::trivial))
    for (auto const &m : o->members)
      trivial.push_back(m.key());
  std::sort(trivial.begin(), trivial.end());
  CHECK(exceptional == std::vector<std::string>{"123, 231, 312", "132, 213, 321"});
  CHECK(trivial == std::vector<std::string>{"123, 132, 321", "123, 213, 321", "123, 231, 321",
                                            "123, 312, 321"});
}

TEST_CASE("orbit members share the representative's verdict")
{
  ScanOptions opts;
  opts.n_from = 5;
  opts.n_to = 7;
  auto r = scan(ScanFamily{3, 4, false}, opts);
  std::mt19937 rng(17);
  for (int k = 0; k < 5; ++k) {
    auto const &o = r.orbits[rng() % r.orbits.size()];
    for (auto const &m : o.members)
      for (std::size_t i = 0; i < o.range.size(); ++i) {
        auto g = group_at(m, o.range[i].n);
        CHECK(g.order == o.range[i].order);
        CHECK(isomorphic_verdicts(g.verdict, o.range[i].verdict));
      }
  }
}

TEST_CASE("generator pattern families")
{
  auto s = generator_pattern_sets(3);
  CHECK(s[0] == PatternSet{"123", "231", "312", "321"});
  CHECK(s[1] == PatternSet{"123", "132", "213"});
  CHECK(s[2] == PatternSet{"123", "213", "231"});
  CHECK(s[3] == PatternSet{"123", "132", "231"});
  CHECK(generator_pattern_sets(4)[1] == PatternSet{"1234", "1243", "1324", "2134"});

  CHECK(generating_filter_hit({"132"}));
  CHECK_FALSE(generating_filter_hit({"123"}));
  CHECK_FALSE(generating_filter_candidate({"132"}));
  CHECK(generating_filter_candidate({"123", "231", "312"}));
}

TEST_CASE("three plus one filter counts")
{
  auto f = three_plus_one_filter();
  CHECK(f.psi_free.size() == 26);
  CHECK(f.psi3.size() == 14);
  CHECK(f.psi4.size() == 4);
}

TEST_CASE("fixed point probes")
{
  auto empty = fixed_point_probe({}, 5, 5);
  CHECK(empty.front().fixed_points.empty());
  auto d = fixed_point_probe({"123", "231", "312"}, 6, 6);
  CHECK(d.front().fixed_points.empty());
  CHECK(d.front().orbit_sizes == std::vector<std::size_t>{6});

  PatternSet set1{"1234", "1432", "3214", "4312"};
  CHECK(fixed_point_probe(set1, 21, 21).front().fixed_points == std::vector<int>{11});
  CHECK(fixed_point_probe(set1, 11, 11).front().fixed_points.empty());
}

TEST_CASE("reports are byte-identical across runs")
{
  auto a = dump(to_json(run_scenario("semidirect-72")));
  auto b = dump(to_json(run_scenario("semidirect-72")));
  CHECK(a == b);

  ScanOptions opts;
  opts.n_from = 4;
  opts.n_to = 6;
  opts.threads = 1;
  auto s1 = dump(to_json(scan(ScanFamily{3, 2, false}, opts)));
  opts.threads = 3;
  auto s2 = dump(to_json(scan(ScanFamily{3, 2, false}, opts)));
  // thread count is not part of the report
  CHECK(s1 == s2);

  auto j = Json::parse(a);
  CHECK(j["scenario"] == "semidirect-72");
  CHECK(j["summary"]["pass"] == true);
  for (auto const &c : j["checks"]) {
    CHECK(c.contains("patterns"));
    CHECK(c.contains("paper_anchor"));
  }
}
