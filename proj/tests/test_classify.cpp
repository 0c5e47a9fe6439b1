#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "patgroup/classify.hpp"
#include "support.hpp"

using namespace patgroup;

namespace
{

Permutation P(char const *s)
{
  return Permutation::parse(s);
}

Permutation C(char const *s, std::size_t n)
{
  return from_cycles(CycleForm::parse(s, n));
}

GroupClass checked(GroupHandle const &g)
{
  auto c = classify(g);
  CHECK(c.satisfies_order_law());
  CHECK(c.order == g.order());
  return c;
}

GroupClass of(std::size_t n, PatternSet const &t)
{
  return checked(avoider_group(n, t).group);
}

std::size_t oracle_order(oracle::Word const &w)
{
  auto x = w;
  oracle::Word id(w.size());
  std::iota(id.begin(), id.end(), 1);
  std::size_t k = 1;
  while (x != id) {
    x = oracle::compose(x, w);
    ++k;
  }
  return k;
}

} // namespace

TEST_CASE("verdict examples")
{
  CHECK(of(6, {"132", "213", "321"}).str() == "Cyclic(6)");
  auto d = of(5, {"123", "231", "312"});
  CHECK(d.str() == "Dihedral(5)");
  CHECK(d.order == 10);
  CHECK(of(5, {"231", "312", "321", "1324"}).str() == "KleinFour");
  CHECK(checked(GroupHandle({}, 5)).str() == "Trivial");
  CHECK(of(7, {"123", "132", "231", "3214"}).str() == "Named(s3xs3:2)");
  CHECK(of(9, {"123", "132", "213", "4312"}).str() == "Named(g1152)");
  CHECK(of(9, {"132", "231", "321", "51234"}).str() == "Symmetric(4)");
  CHECK(of(7, {}).str() == "Symmetric(7)");
  CHECK(checked(GroupHandle({C("(1,2,3)", 5), C("(3,4,5)", 5)}, 5)).str() == "Alternating(5)");
  CHECK(checked(GroupHandle({P("4321")}, 4)).str() == "Cyclic(2)");
  CHECK(checked(GroupHandle({C("(1,2,3,4,5,6)", 6)}, 6)).str() == "Cyclic(6)");
}

TEST_CASE("large groups short-circuit or go partial")
{
  auto big = checked(GroupHandle({C("(1,2)", 10), C("(1,2,3,4,5,6,7,8,9,10)", 10)}, 10));
  CHECK(big.str() == "Symmetric(10)");
  CHECK_FALSE(big.fingerprint);

  // S_5 x S_5 has order 14400 > cap 10^4
  GroupHandle prod({C("(1,2)", 10), C("(1,2,3,4,5)", 10), C("(6,7)", 10),
                    C("(6,7,8,9,10)", 10)},
                   10);
  auto c = classify(prod, ReferenceRegistry::shipped(), 10'000);
  CHECK(c.kind == GroupKind::other);
  CHECK(c.partial);
  CHECK(c.fingerprint->partial);
  CHECK(c.satisfies_order_law());
}

TEST_CASE("fingerprints")
{
  auto fp = fingerprint(GroupHandle({P("4321")}, 4));
  CHECK(fp.order == 2);
  CHECK(fp.histogram == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}});
  CHECK(fp.center_order == 2);
  CHECK(fp.class_count == 2);
  CHECK(fp.abelian);

  CHECK(fingerprint(avoider_group(6, {"123", "132", "231", "3214"}).group).order == 72);
  CHECK(fingerprint(avoider_group(8, {"123", "132", "213", "4312"}).group).order == 1152);
  CHECK_THROWS_AS(fingerprint(GroupHandle({C("(1,2)", 8), C("(1,2,3,4,5,6,7,8)", 8)}, 8), 1000),
                  CapExceeded);

  std::mt19937 rng(5);
  for (std::size_t n = 3; n <= 6; ++n) {
    auto all = all_permutations(n);
    for (int trial = 0; trial < 30; ++trial) {
      GroupHandle g({all[rng() % all.size()], all[rng() % all.size()]}, n);
      if (g.order() > 200)
        continue;
      auto f = fingerprint(g);
      std::uint64_t sum = 0;
      for (auto const &[k, v] : f.histogram)
        sum += v;
      CHECK(f.order == sum);
      CHECK(f.histogram[1] == 1);
      CHECK(f.abelian == (f.center_order == f.order));
      auto p = all[rng() % all.size()];
      CHECK(fingerprint(conjugate_group(g, p)) == f);
      CHECK(classify(g).str() == classify(g).str());
    }
  }
}

TEST_CASE("reference registry")
{
  auto const &reg = ReferenceRegistry::shipped();
  auto z6 = fingerprint(GroupHandle({C("(1,2,3,4,5,6)", 6)}, 6));
  CHECK_FALSE(reg.match_named(z6));
  auto s72 = fingerprint(avoider_group(7, {"123", "132", "231", "3214"}).group);
  CHECK(reg.match_named(s72) == std::string("s3xs3:2"));
  auto g1152 = fingerprint(avoider_group(9, {"123", "132", "213", "4312"}).group);
  CHECK(reg.match_named(g1152) == std::string("g1152"));

  ReferenceRegistry r;
  r.register_reference("z3", {C("(1,2,3)", 3)}, 3);
  CHECK_THROWS_AS(r.register_reference("z3", {C("(1,2,3)", 3)}, 3), DuplicateReference);

  // two ids with equal fingerprints are reported as ambiguous
  r.register_reference("z3-again", {C("(1,2,3)", 4)}, 4);
  CHECK(r.matches(fingerprint(GroupHandle({C("(2,3,4)", 5)}, 5))).size() == 2);

  GroupHandle q8like({C("(1,2,3,4)(5,6,7,8)", 8), C("(1,5,3,7)(2,8,4,6)", 8)}, 8);
  ReferenceRegistry qr;
  qr.register_reference("q8", q8like.generators(), 8);
  qr.register_reference("q8-copy", q8like.generators(), 8);
  auto v = classify(q8like, qr);
  CHECK(v.kind == GroupKind::named);
  CHECK(v.ambiguous);
  CHECK(v.str() == "Named(q8) [ambiguous]");
}

TEST_CASE("all thirty subgroups of S_4")
{
  // Subgroups from the oracle closure of every pair of elements.
  auto words = oracle::all_words(4);
  std::set<std::set<oracle::Word>> subgroups;
  for (auto const &a : words)
    for (auto const &b : words)
      subgroups.insert(oracle::closure({a, b}, 4));
  REQUIRE(subgroups.size() == 30);

  // Expected verdict from order, element orders and moved points.
  std::map<std::string, int> table;
  for (auto const &h : subgroups) {
    std::set<int> moved;
    std::size_t max_order = 1;
    bool even = true;
    for (auto const &w : h) {
      for (int i = 0; i < 4; ++i)
        if (w[i] != i + 1)
          moved.insert(i + 1);
      max_order = std::max(max_order, oracle_order(w));
      int inversions = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          inversions += w[i] > w[j];
      even = even && inversions % 2 == 0;
    }
    std::string want;
    switch (h.size()) {
    case 1: want = "Trivial"; break;
    case 2: want = moved.size() == 2 ? "Symmetric(2)" : "Cyclic(2)"; break;
    case 3: want = "Cyclic(3)"; break;
    case 4: want = max_order == 4 ? "Cyclic(4)" : "KleinFour"; break;
    case 6: want = "Symmetric(3)"; break;
    case 8: want = "Dihedral(4)"; break;
    case 12: want = even ? "Alternating(4)" : "?"; break;
    case 24: want = "Symmetric(4)"; break;
    }
    std::vector<Permutation> gens;
    for (auto const &w : h)
      gens.push_back(support::perm(w));
    auto got = checked(GroupHandle(gens, 4));
    CHECK(got.str() == want);
    ++table[want];
  }
  std::map<std::string, int> const counts{
    {"Trivial", 1},   {"Symmetric(2)", 6}, {"Cyclic(2)", 3},    {"Cyclic(3)", 4},
    {"Cyclic(4)", 3}, {"KleinFour", 4},    {"Symmetric(3)", 4}, {"Dihedral(4)", 3},
    {"Alternating(4)", 1}, {"Symmetric(4)", 1}};
  CHECK(table == counts);
}

TEST_CASE("small isomorphisms")
{
  GroupClass s2{GroupKind::symmetric, 2};
  GroupClass z2{GroupKind::cyclic, 2};
  GroupClass s3{GroupKind::symmetric, 3};
  GroupClass d3{GroupKind::dihedral, 3};
  GroupClass z3{GroupKind::cyclic, 3};
  CHECK(isomorphic_verdicts(s2, z2));
  CHECK(isomorphic_verdicts(s3, d3));
  CHECK_FALSE(isomorphic_verdicts(s3, z3));
  CHECK(isomorphic_verdicts(GroupClass{GroupKind::alternating, 3}, z3));
  CHECK(isomorphic_verdicts(GroupClass{GroupKind::dihedral, 2},
                            GroupClass{GroupKind::klein_four}));
}

TEST_CASE("order laws reject inconsistent verdicts")
{
  GroupClass c{GroupKind::dihedral, 2};
  c.order = 4;
  CHECK_FALSE(c.satisfies_order_law());
  GroupClass z{GroupKind::cyclic, 5};
  z.order = 5;
  CHECK(z.satisfies_order_law());
  z.order = 6;
  CHECK_FALSE(z.satisfies_order_law());
}

TEST_CASE("classification over a range")
{
  auto s = classify_sequence({"132", "231", "321", "4123"}, 4, 9);
  for (auto const &v : s.verdicts)
    CHECK(v.str() == "Symmetric(3)");
  CHECK(s.stabilized);
  CHECK(s.constant_from == 4);

  auto t = classify_sequence({"123", "321"}, 5, 8);
  for (auto const &v : t.verdicts)
    CHECK(v.str() == "Trivial");

  auto z = classify_sequence({"132", "213", "321"}, 3, 8);
  for (std::size_t i = 0; i < z.verdicts.size(); ++i)
    CHECK(z.verdicts[i].str() == "Cyclic(" + std::to_string(3 + i) + ")");
  CHECK_FALSE(z.stabilized);
  CHECK(z.constant_from == 8);

  auto named = classify_sequence({"123", "132", "213", "4312"}, 5, 10);
  CHECK(named.constant_from == 8);
  CHECK(named.stabilized);
}
