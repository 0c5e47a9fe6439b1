// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "patgroup/grid.hpp"
#include "patgroup/verify.hpp"
#include "support.hpp"

using namespace patgroup;

namespace
{

struct Outcome
{
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, std::string const &what)
  {
    if (!ok && pass)
      notes << "first miss: " << what;
    pass = pass && ok;
  }
};

std::string verdict_at(std::size_t n, PatternSet const &t, BigInt *order = nullptr)
{
  auto g = avoider_group(n, t).group;
  auto c = classify(g);
  if (order)
    *order = g.order();
  if (!c.satisfies_order_law())
    return "order law violated: " + c.str();
  return c.str();
}

std::vector<PatternSet> subsets_of_s3()
{
  auto pool = all_permutations(3);
  std::vector<PatternSet> out;
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<Permutation> pick;
    for (std::size_t i = 0; i < 6; ++i)
      if (mask & (1u << i))
        pick.push_back(pool[i]);
    out.emplace_back(std::move(pick));
  }
  return out;
}

void exact_counts(Outcome &o)
{
  for (std::size_t n = 3; n <= 9; ++n)
    o.require(count_avoiders(n, {"123", "231", "312"}) == n,
              "|S_" + std::to_string(n) + "(123,231,312)| = n");
  for (std::size_t n = 9; n <= 12; ++n)
    o.require(count_avoiders(n, {"1234", "1432", "3214", "4312"}) == 145,
              "|S_" + std::to_string(n) + "(1234,1432,3214,4312)| = 145");
  for (std::size_t n = 5; n <= 8; ++n)
    o.require(count_avoiders(n, {"123", "321"}) == 0,
              "|S_" + std::to_string(n) + "(123,321)| = 0");
}

void group_orders(Outcome &o)
{
  for (std::size_t n = 3; n <= 9; ++n) {
    BigInt order;
    auto d = verdict_at(n, {"123", "231", "312"}, &order);
    o.require(order == 2 * n && d == "Dihedral(" + std::to_string(n) + ")",
              "D_n at n = " + std::to_string(n) + ", got " + d);
    auto z = verdict_at(n, {"132", "213", "321"}, &order);
    o.require(order == n && z == "Cyclic(" + std::to_string(n) + ")",
              "Z_n at n = " + std::to_string(n) + ", got " + z);
  }
}

void named_groups(Outcome &o)
{
  for (std::size_t n = 6; n <= 9; ++n) {
    BigInt order;
    auto v = verdict_at(n, {"123", "132", "231", "3214"}, &order);
    o.require(order == 72 && v == "Named(s3xs3:2)", "order 72 at n = " + std::to_string(n));
  }
  for (std::size_t n = 8; n <= 10; ++n) {
    BigInt order;
    auto v = verdict_at(n, {"123", "132", "213", "4312"}, &order);
    o.require(order == 1152 && v == "Named(g1152)", "order 1152 at n = " + std::to_string(n));
  }
}

void symmetric_family(Outcome &o)
{
  for (std::size_t k = 3; k <= 5; ++k) {
    std::vector<int> w{static_cast<int>(k)};
    for (std::size_t v = 1; v < k; ++v)
      w.push_back(static_cast<int>(v));
    PatternSet t({Permutation::parse("132"), Permutation::parse("231"),
                  Permutation::parse("321"), Permutation(w)});
    for (std::size_t n = k; n <= 9; ++n) {
      auto v = verdict_at(n, t);
      o.require(v == "Symmetric(" + std::to_string(k - 1) + ")",
                "k = " + std::to_string(k) + ", n = " + std::to_string(n) + ", got " + v);
    }
  }
}

void exhaustive_scans(Outcome &o)
{
  ScanOptions three;
  three.n_from = 4;
  three.n_to = 8;
  auto r3 = scan(ScanFamily{3, 3, false}, three);
  std::vector<std::string> ex3, triv3;
  for (auto const *orb : r3.with_status(OrbitStatus::exceptional))
    ex3.push_back(orb->representative.key());
  for (auto const *orb : r3.with_status(OrbitStatus::trivial))
    for (auto const &m : orb->members)
      triv3.push_back(m.key());
  std::sort(triv3.begin(), triv3.end());
  o.require(ex3 == std::vector<std::string>{"123, 231, 312", "132, 213, 321"},
            "S_3 triples: non-trivial exceptional orbits");
  o.require(triv3 == std::vector<std::string>{"123, 132, 321", "123, 213, 321",
                                              "123, 231, 321", "123, 312, 321"},
            "S_3 triples: trivial sets are {123, 321, x}");

  ScanOptions four;
  four.n_from = 5;
  four.n_to = 9;
  four.probe_ns = {12, 13, 18, 21, 22};
  auto r4 = scan(ScanFamily{4, 4, true}, four);
  auto ex4 = r4.with_status(OrbitStatus::exceptional);
  std::set<PatternSet> members;
  for (auto const *orb : ex4)
    members.insert(orb->members.begin(), orb->members.end());
  o.require(ex4.size() == 2, "S_4 quadruples: two exceptional orbits");
  o.require(members.count(PatternSet{"1234", "1432", "3214", "4312"}) &&
              members.count(PatternSet{"1234", "1432", "3214", "4231"}),
            "S_4 quadruples: the two listed sets are exceptional");
  o.require(r4.with_status(OrbitStatus::trivial).empty(), "S_4 quadruples: no trivial orbit");

  auto filter = three_plus_one_filter();
  o.require(filter.psi_free.size() == 26, "three plus one filter gives 26 sets, got " +
                                            std::to_string(filter.psi_free.size()));
  o.notes << "orbits " << r3.orbits.size() << " + " << r4.orbits.size() << ", filter "
          << filter.psi_free.size() << "; ";
}

void oracle_suites(Outcome &o)
{
  auto const sets = subsets_of_s3();
  std::size_t closures = 0;
  for (std::size_t n = 0; n <= 7; ++n) {
    for (auto const &t : sets) {
      auto members = enumerate_avoiders(n, t).members;
      o.require(support::words(members) == oracle::avoiders(n, support::words(t.patterns())),
                "enumerator at n = " + std::to_string(n) + " for {" + t.key() + "}");

      if (n >= 1) {
        auto g = avoider_group(n, t).group;
        auto closed = oracle::closure(support::words(g.generators()), n, 5000);
        if (!closed.empty()) {
          ++closures;
          bool ok = g.order() == closed.size();
          for (auto const &m : members)
            ok = ok && closed.count(support::word(m));
          o.require(ok, "chain order vs closure for {" + t.key() + "}");
        }
      }
    }
  }

  std::size_t pegs = 0;
  for (std::size_t m = 1; m <= 4; ++m) {
    std::size_t combos = 1;
    for (std::size_t i = 0; i < m; ++i)
      combos *= 3;
    for (auto const &sigma : all_permutations(m))
      for (std::size_t code = 0; code < combos; ++code) {
        std::vector<PegLabel> labels;
        oracle::Peg op{support::word(sigma), {}};
        for (std::size_t i = 0, c = code; i < m; ++i, c /= 3) {
          labels.push_back(static_cast<PegLabel>(c % 3));
          op.labels += " +-"[c % 3];
        }
        PegPermutation peg(sigma, labels);
        ++pegs;
        for (std::size_t n = 0; n <= 6; ++n)
          o.require(support::word_set(grid_section(peg, n)) == oracle::grid_section(op, n),
                    "grid section " + peg.str() + " at n = " + std::to_string(n));
      }
  }

  for (std::size_t n = 1; n <= 6; ++n) {
    auto psi = Permutation::decreasing(n);
    for (auto const &t : sets) {
      auto g = avoider_group(n, t).group;
      auto inv = avoider_group(n, apply(Symmetry::inverse, t)).group;
      auto rc = avoider_group(n, apply(Symmetry::reverse_complement, t)).group;
      o.require(g.elements() == inv.elements(), "inverse identity for {" + t.key() + "}");
      o.require(conjugate_group(g, psi).elements() == rc.elements(),
                "psi conjugacy for {" + t.key() + "}");
    }
  }
  o.notes << closures << " closures, " << pegs << " pegs; ";
}

void semidirect(Outcome &o)
{
  auto cyc = [](char const *s) { return from_cycles(CycleForm::parse(s, 6)); };
  GroupHandle g({cyc("(1,6,3,4,2,5)"), cyc("(1,6,2,5)(3,4)")}, 6);
  GroupHandle n({cyc("(4,6,5)"), cyc("(2,3)(4,5)"), cyc("(1,3,2)(4,5,6)"),
                 cyc("(1,6,3,4,2,5)")},
                6);
  GroupHandle h({cyc("(5,6)")}, 6);
  o.require(n.order() == 36, "order(N) = 36");
  o.require(h.order() == 2, "order(H) = 2");
  o.require(g.order() == 72, "order(G) = 72");
  o.require(semidirect_check(g, n, h), "G = N x| H");
}

void klein(Outcome &o)
{
  for (std::size_t n = 4; n <= 8; ++n) {
    auto v = verdict_at(n, {"231", "312", "321", "1324"});
    o.require(v == "KleinFour", "n = " + std::to_string(n) + ", got " + v);
  }
}

} // namespace

int main()
{
  struct Criterion
  {
    int id;
    char const *name;
    double limit_s;
    std::function<void(Outcome &)> run;
  };
  std::vector<Criterion> const criteria{
    {1, "exact avoider counts", 10, exact_counts},
    {2, "dihedral and cyclic group orders", 10, group_orders},
    {3, "named groups of order 72 and 1152", 60, named_groups},
    {4, "S_{k-1} family", 60, symmetric_family},
    {5, "exhaustive scans and the 26-set filter", 900, exhaustive_scans},
    {6, "oracle suites", 900, oracle_suites},
    {7, "semidirect decomposition of the order-72 group", 60, semidirect},
    {8, "Klein four case", 60, klein},
  };

  bool all = true;
  for (auto const &c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (std::exception const &e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.limit_s;
    if (!in_time)
      o.notes << "over the " << c.limit_s << " s limit; ";
    bool pass = o.pass && in_time;
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
              << std::fixed << std::setprecision(2) << secs << " s)";
    auto notes = o.notes.str();
    if (!notes.empty())
      std::cout << " " << notes;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
