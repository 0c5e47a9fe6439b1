#include "patgroup/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "patgroup/grid.hpp"

namespace patgroup
{

bool ScenarioReport::passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](auto const &c) { return c.pass; });
}

Check const *ScenarioReport::first_failure() const
{
  for (auto const &c : checks)
    if (!c.pass)
      return &c;
  return nullptr;
}

std::string ScenarioReport::reproduce() const
{
  return "patgroup verify --scenario " + id + " --n-max " + std::to_string(n_max);
}

UnknownScenario::UnknownScenario(std::string const &id)
  : std::invalid_argument("unknown scenario '" + id + "'")
{}

// --------------------------------------------------------------------------
// Generating-set filter

namespace
{

Permutation transposition(std::size_t n, int a, int b)
{
  return from_cycles(CycleForm{n, {{a, b}}});
}

Permutation long_cycle(std::size_t n)
{
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = static_cast<int>((i + 1) % n + 1);
  return Permutation(std::move(w));
}

PatternSet patterns_of_all(std::vector<Permutation> const &perms, std::size_t k)
{
  std::vector<Permutation> found;
  for (auto const &p : perms) {
    auto ps = patterns_of(p, k);
    found.insert(found.end(), ps.begin(), ps.end());
  }
  return PatternSet(std::move(found));
}

bool meets(PatternSet const &t, std::vector<PatternSet> const &family_by_length)
{
  for (auto const &tau : t.patterns()) {
    if (tau.size() < family_by_length.size() && family_by_length[tau.size()].has(tau))
      return true;
  }
  return false;
}

/// families[i][k] = i-th generator family at length k
std::array<std::vector<PatternSet>, 4> const &families_up_to(std::size_t k_max)
{
  static std::mutex lock;
  static std::array<std::vector<PatternSet>, 4> cache;
  std::lock_guard guard(lock);
  for (std::size_t k = cache[0].size(); k <= k_max; ++k) {
    auto sets = generator_pattern_sets(k);
    for (std::size_t i = 0; i < 4; ++i)
      cache[i].push_back(sets[i]);
  }
  return cache;
}

std::size_t longest(PatternSet const &t)
{
  std::size_t m = 0;
  for (auto const &p : t.patterns())
    m = std::max(m, p.size());
  return m;
}

bool meets_all_four(PatternSet const &t)
{
  auto const &fam = families_up_to(longest(t));
  return std::all_of(fam.begin(), fam.end(), [&](auto const &f) { return meets(t, f); });
}

} // namespace

std::array<PatternSet, 4> generator_pattern_sets(std::size_t k, std::size_t n)
{
  if (n < 2)
    throw std::invalid_argument("generator pattern sets need n >= 2");
  auto cycle = long_cycle(n);
  std::vector<Permutation> elementary;
  for (std::size_t j = 1; j < n; ++j)
    elementary.push_back(transposition(n, static_cast<int>(j), static_cast<int>(j + 1)));

  auto const last = static_cast<int>(n);
  return {patterns_of_all({transposition(n, 1, last), cycle}, k),
          patterns_of_all(elementary, k),
          patterns_of_all({transposition(n, 1, 2), cycle}, k),
          patterns_of_all({transposition(n, last - 1, last), cycle}, k)};
}

std::array<PatternSet, 4> generator_pattern_sets(std::size_t k)
{
  return generator_pattern_sets(k, 2 * k + 2);
}

bool generating_filter_hit(PatternSet const &t)
{
  auto const &fam = families_up_to(longest(t));
  return std::any_of(fam.begin(), fam.end(), [&](auto const &f) { return !meets(t, f); });
}

bool generating_filter_candidate(PatternSet const &t)
{
  for (auto const &img : symmetry_images(t)) {
    if ((img.within_group || img.group_preserving) && generating_filter_hit(img.image))
      return false;
  }
  return true;
}

ThreePlusOneFilter three_plus_one_filter()
{
  auto const s3 = all_permutations(3);
  auto const s4 = all_permutations(4);
  auto const psi3 = Permutation::decreasing(3);
  auto const psi4 = Permutation::decreasing(4);
  auto const id3 = Permutation::identity(3);
  auto const id4 = Permutation::identity(4);

  ThreePlusOneFilter out;
  for (std::size_t a = 0; a < s3.size(); ++a)
    for (std::size_t b = a + 1; b < s3.size(); ++b)
      for (std::size_t c = b + 1; c < s3.size(); ++c) {
        for (auto const &tau4 : s4) {
          if (contains(tau4, s3[a]) || contains(tau4, s3[b]) || contains(tau4, s3[c]))
            continue;
          PatternSet t({s3[a], s3[b], s3[c], tau4});

          if (!t.has(psi3) && tau4 != psi4) {
            bool all = std::all_of(all_symmetries.begin(), all_symmetries.end(),
                                   [&](Symmetry s) { return meets_all_four(apply(s, t)); });
            if (all)
              out.psi_free.push_back(t);
          } else if (tau4 == psi4) {
            if (!t.has(id3) && meets_all_four(t))
              out.psi4.push_back(t);
          } else if (tau4 != id4 && !t.has(id3) && meets_all_four(t) &&
                     meets_all_four(apply(Symmetry::inverse, t))) {
            out.psi3.push_back(t);
          }
        }
      }

  for (auto *v : {&out.psi_free, &out.psi3, &out.psi4})
    std::sort(v->begin(), v->end());
  return out;
}

// --------------------------------------------------------------------------
// Scans

std::string ScanFamily::str() const
{
  std::string s = std::to_string(subset_size) + "-subsets of S_" +
                  std::to_string(pattern_length);
  if (exclude_psi)
    s += " without " + Permutation::decreasing(pattern_length).compact();
  return s;
}

std::vector<PatternSet> family_members(ScanFamily const &family)
{
  auto pool = all_permutations(family.pattern_length);
  if (family.exclude_psi)
    std::erase(pool, Permutation::decreasing(family.pattern_length));

  std::vector<PatternSet> out;
  std::size_t const m = family.subset_size;
  if (m > pool.size())
    return out;

  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<Permutation> pick;
    for (auto i : idx)
      pick.push_back(pool[i]);
    out.emplace_back(std::move(pick));

    std::size_t i = m;
    while (i > 0 && idx[i - 1] == pool.size() - m + i - 1)
      --i;
    if (i == 0)
      break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j)
      idx[j] = idx[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(OrbitStatus s)
{
  switch (s) {
  case OrbitStatus::symmetric: return "symmetric";
  case OrbitStatus::trivial: return "trivial";
  case OrbitStatus::exceptional: return "exceptional";
  }
  return "?";
}

std::vector<OrbitReport const *> ScanReport::with_status(OrbitStatus s) const
{
  std::vector<OrbitReport const *> out;
  for (auto const &o : orbits)
    if (o.status == s)
      out.push_back(&o);
  return out;
}

GroupAtN group_at(PatternSet const &t, std::size_t n)
{
  GroupAtN g;
  g.n = n;
  try {
    auto ag = avoider_group(n, t);
    g.order = ag.group.order();
    g.generates_sn = g.order == factorial(static_cast<unsigned>(n));
    g.verdict = classify(ag.group);
    for (auto &o : ag.group.orbits()) {
      if (o.size() == 1)
        g.fixed_points.push_back(o.front());
      else if (o.size() == 2)
        g.swapped_pairs.push_back(std::move(o));
    }
  } catch (std::exception const &e) {
    g.error = e.what();
  }
  return g;
}

std::vector<PatternSet> symmetry_orbit(PatternSet const &t, bool &full_symmetry)
{
  std::set<PatternSet> all;
  for (auto s : all_symmetries)
    all.insert(apply(s, t));
  full_symmetry = std::none_of(all.begin(), all.end(),
                               [](auto const &x) { return x.has_decreasing(); });
  if (full_symmetry)
    return {all.begin(), all.end()};

  std::set<PatternSet> conj;
  for (auto s : conjugating_symmetries)
    conj.insert(apply(s, t));
  return {conj.begin(), conj.end()};
}

namespace
{

OrbitStatus judge(OrbitReport const &o)
{
  for (auto const &p : o.probes) {
    if (!p.error.empty() || (!p.generates_sn && p.order != 1))
      return OrbitStatus::exceptional;
  }
  std::size_t const window = std::min<std::size_t>(3, o.range.size());
  auto top = o.range.end() - static_cast<std::ptrdiff_t>(window);
  bool trivial = std::all_of(top, o.range.end(), [](auto const &g) {
    return g.error.empty() && g.order == 1;
  });
  if (trivial && window > 0)
    return OrbitStatus::trivial;
  bool sym = std::all_of(top, o.range.end(), [](auto const &g) {
    return g.error.empty() && g.generates_sn;
  });
  return sym ? OrbitStatus::symmetric : OrbitStatus::exceptional;
}

void evaluate(OrbitReport &o, ScanOptions const &options)
{
  for (std::size_t n = options.n_from; n <= options.n_to; ++n)
    o.range.push_back(group_at(o.representative, n));
  o.filter_candidate = generating_filter_candidate(o.representative);
  if (o.filter_candidate)
    for (auto n : options.probe_ns)
      o.probes.push_back(group_at(o.representative, n));
  o.status = judge(o);
}

} // namespace

ScanReport scan(std::vector<PatternSet> const &family, ScanOptions const &options,
                std::string family_label)
{
  ScanReport report;
  report.family = std::move(family_label);
  report.options = options;
  report.family_size = family.size();

  std::set<PatternSet> const in_family(family.begin(), family.end());
  std::set<PatternSet> assigned;
  for (auto const &t : in_family) {
    if (assigned.count(t))
      continue;
    OrbitReport o;
    for (auto &m : symmetry_orbit(t, o.full_symmetry)) {
      if (in_family.count(m) && assigned.insert(m).second)
        o.members.push_back(std::move(m));
    }
    o.representative = o.members.front();
    report.orbits.push_back(std::move(o));
  }

  unsigned const workers = std::max(1u, options.threads);
  if (workers == 1) {
    for (auto &o : report.orbits)
      evaluate(o, options);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < report.orbits.size(); i += workers)
          evaluate(report.orbits[i], options);
      });
    }
    for (auto &th : pool)
      th.join();
  }

  report.candidate_count = static_cast<std::size_t>(
    std::count_if(report.orbits.begin(), report.orbits.end(),
                  [](auto const &o) { return o.filter_candidate; }));
  return report;
}

ScanReport scan(ScanFamily const &family, ScanOptions const &options)
{
  return scan(family_members(family), options, family.str());
}

std::vector<FixedPointProbe> fixed_point_probe(PatternSet const &t, std::size_t n_from,
                                               std::size_t n_to)
{
  std::vector<FixedPointProbe> out;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    FixedPointProbe probe;
    probe.n = n;
    for (auto &o : avoider_group(n, t).group.orbits()) {
      probe.orbit_sizes.push_back(o.size());
      if (o.size() == 1)
        probe.fixed_points.push_back(o.front());
      else if (o.size() == 2)
        probe.swapped_pairs.push_back(std::move(o));
    }
    out.push_back(std::move(probe));
  }
  return out;
}

// --------------------------------------------------------------------------
// Scenarios

namespace
{

struct Context
{
  std::size_t n_max;
  std::vector<Check> checks;

  void add(std::string label, std::string patterns, std::optional<std::size_t> n,
           std::string expected, std::string actual, bool pass, std::string anchor)
  {
    checks.push_back({std::move(label), std::move(patterns), n, std::move(expected),
                      std::move(actual), pass, std::move(anchor)});
  }

  void equal(std::string label, std::string patterns, std::optional<std::size_t> n,
             std::string const &expected, std::string const &actual, std::string anchor)
  {
    add(std::move(label), std::move(patterns), n, expected, actual, expected == actual,
        std::move(anchor));
  }

  void truth(std::string label, std::string patterns, std::optional<std::size_t> n,
             bool value, std::string anchor)
  {
    add(std::move(label), std::move(patterns), n, "true", value ? "true" : "false", value,
        std::move(anchor));
  }
};

GroupClass expect(GroupKind kind, std::size_t param = 0, std::string ref = {})
{
  GroupClass c;
  c.kind = kind;
  c.param = param;
  c.ref = std::move(ref);
  return c;
}

/// Verdict check up to the small-group identifications (S_2 ~ Z_2 etc.).
void verdict(Context &ctx, PatternSet const &t, std::size_t n, GroupClass const &want,
             std::string const &anchor)
{
  auto got = classify(avoider_group(n, t).group);
  bool ok = isomorphic_verdicts(want, got) && got.satisfies_order_law();
  ctx.add("group", t.key(), n, want.signature(), got.str(), ok, anchor);
}

void generates_sn(Context &ctx, PatternSet const &t, std::size_t n, std::string const &anchor)
{
  auto order = avoider_group(n, t).group.order();
  auto full = factorial(static_cast<unsigned>(n));
  ctx.add("generates S_n", t.key(), n, "order " + full.str(), "order " + order.str(),
          order == full, anchor);
}

void count(Context &ctx, PatternSet const &t, std::size_t n, BigInt const &want,
           std::string const &anchor)
{
  auto got = count_avoiders(n, t);
  ctx.add("count", t.key(), n, want.str(), got.str(), got == want, anchor);
}

std::string join(std::vector<Permutation> const &ps)
{
  std::string s;
  for (auto const &p : ps)
    s += (s.empty() ? "" : ", ") + p.compact();
  return s;
}

std::string join(std::vector<int> const &xs)
{
  std::string s = "{";
  for (auto x : xs)
    s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + "}";
}

std::string join(std::vector<PatternSet> const &sets)
{
  std::string s;
  for (auto const &t : sets)
    s += (s.empty() ? "" : "; ") + ("{" + t.key() + "}");
  return s;
}

std::vector<PatternSet> all_subsets_of_s3()
{
  auto s3 = all_permutations(3);
  std::vector<PatternSet> out;
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<Permutation> pick;
    for (unsigned i = 0; i < 6; ++i)
      if (mask & (1u << i))
        pick.push_back(s3[i]);
    out.emplace_back(std::move(pick));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation cyc(std::string_view text, std::size_t n)
{
  return from_cycles(CycleForm::parse(text, n));
}

/// True when every generator of b lies in a.
bool group_contains(GroupHandle const &a, GroupHandle const &b)
{
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](auto const &g) { return a.is_member(g); });
}

bool same_group(GroupHandle const &a, GroupHandle const &b)
{
  return a.order() == b.order() && group_contains(a, b);
}

// generating-sk ------------------------------------------------------------

void scenario_generating_sk(Context &ctx)
{
  std::string const anchor = "theorem:generating-sk";
  for (std::size_t k = 3; k <= 5; ++k) {
    std::vector<int> last(k);
    last[0] = static_cast<int>(k);
    std::iota(last.begin() + 1, last.end(), 1);
    PatternSet t({Permutation::parse("132"), Permutation::parse("231"),
                  Permutation::parse("321"), Permutation(last)});

    for (std::size_t n = k; n <= ctx.n_max; ++n) {
      std::vector<Permutation> want{Permutation::identity(n)};
      for (std::size_t s = 2; s <= k - 1; ++s) {
        std::vector<int> w{static_cast<int>(s)};
        for (std::size_t v = 1; v <= n; ++v)
          if (v != s)
            w.push_back(static_cast<int>(v));
        want.push_back(Permutation(std::move(w)));
      }
      std::sort(want.begin(), want.end());
      ctx.equal("members", t.key(), n, join(want), join(enumerate_avoiders(n, t).members),
                anchor);

      auto got = classify(avoider_group(n, t).group);
      ctx.equal("group", t.key(), n, expect(GroupKind::symmetric, k - 1).signature(),
                got.str(), anchor);
    }
  }
}

// three-of-three -----------------------------------------------------------

void scenario_three_of_three(Context &ctx)
{
  std::string const anchor = "theorem:three-of-three";
  PatternSet const cyclic{"132", "213", "321"};
  PatternSet const dihedral{"123", "231", "312"};
  auto const id3 = Permutation::parse("123");
  auto const psi3 = Permutation::parse("321");

  for (std::size_t n = 3; n <= ctx.n_max; ++n) {
    count(ctx, dihedral, n, n, anchor);
    std::vector<Permutation> want;
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<int> w;
      for (auto v = static_cast<int>(k); v >= 1; --v)
        w.push_back(v);
      for (auto v = static_cast<int>(n); v > static_cast<int>(k); --v)
        w.push_back(v);
      want.push_back(Permutation(std::move(w)));
    }
    std::sort(want.begin(), want.end());
    ctx.equal("members", dihedral.key(), n, join(want),
              join(enumerate_avoiders(n, dihedral).members), anchor);
  }

  for (auto const &t : family_members({3, 3, false})) {
    for (std::size_t n = 5; n <= ctx.n_max; ++n) {
      if (t.has(id3) && t.has(psi3))
        verdict(ctx, t, n, expect(GroupKind::trivial), anchor);
      else if (t == cyclic)
        verdict(ctx, t, n, expect(GroupKind::cyclic, n), anchor);
      else if (t == dihedral)
        verdict(ctx, t, n, expect(GroupKind::dihedral, n), anchor);
      else
        generates_sn(ctx, t, n, anchor);
    }
  }
  for (std::size_t n = 3; n < 5 && n <= ctx.n_max; ++n)
    verdict(ctx, dihedral, n, expect(GroupKind::dihedral, n), anchor);
}

// le-three-patterns ----------------------------------------------------------

void scenario_le_three(Context &ctx)
{
  std::string const anchor = "corollary:le-three";

  struct Bound
  {
    PatternSet t;
    std::size_t bound;
  };
  std::vector<Bound> const bounds{{PatternSet{"123", "321"}, 4},
                                  {PatternSet{"12", "21"}, 1},
                                  {PatternSet{"1234", "321"}, 6},
                                  {PatternSet{"123", "4321"}, 6},
                                  {PatternSet{"1234", "4321", "132"}, 9}};
  for (auto const &[t, b] : bounds) {
    auto got = es_empty_bound(t);
    ctx.equal("emptiness bound", t.key(), std::nullopt, std::to_string(b),
              got ? std::to_string(*got) : "none", anchor);
    count(ctx, t, b + 1, 0, anchor);
    verdict(ctx, t, b + 1, expect(GroupKind::trivial), anchor);
  }
  ctx.equal("emptiness bound", "132", std::nullopt, "none",
            es_empty_bound(PatternSet{"132"}) ? "some" : "none", anchor);

  PatternSet const ex1{"132", "213", "321"};
  PatternSet const ex2{"123", "231", "312"};
  for (auto const &t : all_subsets_of_s3()) {
    if (t.size() > 3 || t == ex1 || t == ex2)
      continue;
    if (t.has(Permutation::parse("123")) && t.has(Permutation::parse("321")))
      continue;
    for (std::size_t n = 5; n <= ctx.n_max; ++n)
      generates_sn(ctx, t, n, anchor);
  }

  // Mixed-length sets from the two exceptional cases of the argument.
  for (auto const *text : {"132, 213, 4321", "231, 312, 1234", "132, 213, 54321",
                           "12345, 231, 312", "1432, 213, 321", "132, 2413, 321"}) {
    auto t = PatternSet::parse(text);
    for (std::size_t n = 5; n <= ctx.n_max; ++n)
      generates_sn(ctx, t, n, anchor);
  }
}

// four-of-three ------------------------------------------------------------

void scenario_four_of_three(Context &ctx)
{
  std::string const anchor = "theorem:four-of-three";
  auto const id3 = Permutation::parse("123");
  auto const psi3 = Permutation::parse("321");

  struct Item
  {
    std::vector<PatternSet> sets;
    std::function<GroupClass(std::size_t)> want;
  };
  std::vector<Item> const items{
    {{{"213", "231", "312", "321"}, {"132", "231", "312", "321"}, {"132", "213", "231", "312"}},
     [](std::size_t) { return expect(GroupKind::cyclic, 2); }},
    {{{"123", "132", "213", "231"}, {"123", "132", "213", "312"}},
     [](std::size_t) { return expect(GroupKind::dihedral, 4); }},
    {{{"132", "213", "312", "321"}, {"132", "213", "231", "321"}},
     [](std::size_t n) { return expect(GroupKind::cyclic, n); }},
    {{{"123", "213", "231", "312"}, {"123", "132", "231", "312"}},
     [](std::size_t n) { return expect(GroupKind::dihedral, n); }},
    {{{"123", "132", "213", "231", "312"}},
     [](std::size_t) { return expect(GroupKind::cyclic, 2); }},
    {{{"132", "213", "231", "312", "321"}},
     [](std::size_t) { return expect(GroupKind::trivial); }},
  };

  std::size_t covered = 0;
  std::size_t total = 0;
  for (auto const &t : all_subsets_of_s3()) {
    if (t.size() < 4)
      continue;
    ++total;
    std::function<GroupClass(std::size_t)> want;
    if (t.has(id3) && t.has(psi3))
      want = [](std::size_t) { return expect(GroupKind::trivial); };
    for (auto const &item : items)
      if (std::find(item.sets.begin(), item.sets.end(), t) != item.sets.end())
        want = item.want;
    if (!want)
      continue;
    ++covered;
    for (std::size_t n = 5; n <= ctx.n_max; ++n)
      verdict(ctx, t, n, want(n), anchor);
  }
  ctx.equal("sets with at least four patterns covered by the statement", "", std::nullopt,
            std::to_string(total), std::to_string(covered), anchor);

  // psi and (1,2)psi, the latter of order 4
  for (std::size_t n = 5; n <= ctx.n_max; ++n) {
    PatternSet t{"123", "132", "213", "231"};
    auto psi = Permutation::decreasing(n);
    std::vector<Permutation> want{psi, compose(transposition(n, 1, 2), psi)};
    std::sort(want.begin(), want.end());
    ctx.equal("members", t.key(), n, join(want), join(enumerate_avoiders(n, t).members),
              anchor);
  }
}

// three-three-one-four -------------------------------------------------------

struct ThreeOneItem
{
  std::vector<char const *> sets;
  std::size_t n0;
  std::function<GroupClass(std::size_t)> want;
};

std::vector<ThreeOneItem> three_one_items()
{
  return {
    {{"123, 132, 213, 4231", "132, 213, 231, 4123", "132, 231, 312, 3214"}, 4,
     [](std::size_t) { return expect(GroupKind::dihedral, 4); }},
    {{"123, 132, 231, 3214", "132, 213, 231, 1234"}, 6,
     [](std::size_t) { return expect(GroupKind::named, 0, "s3xs3:2"); }},
    {{"123, 231, 312, 1432", "123, 231, 312, 2143", "132, 213, 231, 4312",
      "132, 231, 312, 2134"},
     3, [](std::size_t n) { return expect(GroupKind::dihedral, n); }},
    {{"132, 213, 321, 2341", "132, 213, 321, 3412"}, 3,
     [](std::size_t n) { return expect(GroupKind::cyclic, n); }},
    {{"132, 231, 312, 4321", "132, 231, 321, 4123"}, 4,
     [](std::size_t) { return expect(GroupKind::symmetric, 3); }},
    {{"231, 312, 321, 1243", "231, 312, 321, 2134"}, 5,
     [](std::size_t) { return expect(GroupKind::symmetric, 4); }},
    {{"231, 312, 321, 1324"}, 4, [](std::size_t) { return expect(GroupKind::klein_four); }},
    {{"123, 132, 213, 4312"}, 8,
     [](std::size_t) { return expect(GroupKind::named, 0, "g1152"); }},
  };
}

void scenario_three_three_one_four(Context &ctx)
{
  std::string const anchor = "theorem:three-three-one-four";

  std::set<PatternSet> listed;
  for (auto const &item : three_one_items()) {
    for (auto const *text : item.sets) {
      auto t = PatternSet::parse(text);
      bool full = false;
      for (auto const &m : symmetry_orbit(t, full))
        listed.insert(m);
      for (std::size_t n = item.n0; n <= std::max(ctx.n_max, item.n0); ++n)
        verdict(ctx, t, n, item.want(n), anchor);
    }
  }

  // The remaining sets end up as S_n or trivial.
  auto const s3 = all_permutations(3);
  auto const s4 = all_permutations(4);
  std::size_t remaining = 0, settled = 0;
  std::size_t const top = std::max<std::size_t>(ctx.n_max, 7);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      for (std::size_t c = b + 1; c < 6; ++c)
        for (auto const &tau4 : s4) {
          if (contains(tau4, s3[a]) || contains(tau4, s3[b]) || contains(tau4, s3[c]))
            continue;
          PatternSet t({s3[a], s3[b], s3[c], tau4});
          if (listed.count(t))
            continue;
          ++remaining;
          bool ok = true;
          std::string seen;
          for (std::size_t n = top - 2; n <= top; ++n) {
            auto g = avoider_group(n, t).group.order();
            bool good = g == 1 || g == factorial(static_cast<unsigned>(n));
            ok = ok && good;
            if (!good)
              seen += " n=" + std::to_string(n) + " order " + g.str();
          }
          settled += ok ? 1 : 0;
          if (!ok)
            ctx.add("S_n or trivial", t.key(), top, "S_n or trivial", seen, false, anchor);
        }
  ctx.equal("other sets that are S_n or trivial on the top of the range", "", top,
            std::to_string(remaining), std::to_string(settled), anchor);

  auto filt = three_plus_one_filter();
  ctx.equal("filter without psi_3/psi_4", "", std::nullopt, "26",
            std::to_string(filt.psi_free.size()), anchor);
  ctx.equal("filter with psi_3", "", std::nullopt, "14", std::to_string(filt.psi3.size()),
            anchor);
  ctx.equal("filter with psi_4", "", std::nullopt,
            join(std::vector<PatternSet>{PatternSet::parse("132, 213, 231, 4321"),
                                         PatternSet::parse("132, 213, 312, 4321"),
                                         PatternSet::parse("132, 231, 312, 4321"),
                                         PatternSet::parse("213, 231, 312, 4321")}),
            join(filt.psi4), anchor);
  for (auto const *text : {"132, 231, 312, 1234", "123, 132, 231, 4312",
                           "123, 213, 231, 4312"}) {
    auto t = PatternSet::parse(text);
    ctx.truth("reduced case survives the filter", t.key(), std::nullopt,
              std::find(filt.psi_free.begin(), filt.psi_free.end(), t) != filt.psi_free.end(),
              anchor);
  }
  auto const rest = PatternSet::parse("213, 312, 321, 1243");
  ctx.truth("remaining psi_3 case survives the filter", rest.key(), std::nullopt,
            std::find(filt.psi3.begin(), filt.psi3.end(), rest) != filt.psi3.end(), anchor);
  for (std::size_t n = 5; n <= ctx.n_max; ++n) {
    generates_sn(ctx, rest, n, anchor);
    for (auto const &t : filt.psi_free)
      if (!listed.count(t) && !(t.has(Permutation::parse("123")) &&
                                t.has(Permutation::decreasing(4))))
        generates_sn(ctx, t, n, anchor);
  }
}

// four-of-four -----------------------------------------------------------------

void scenario_four_of_four(Context &ctx)
{
  std::string const anchor = "theorem:four-of-four";
  auto const set1 = PatternSet::parse("1234, 1432, 3214, 4312");
  auto const set1_inv = PatternSet::parse("1234, 1432, 3214, 3421");
  auto const set2 = PatternSet::parse("1234, 1432, 3214, 4231");

  for (std::size_t n = 9; n <= ctx.n_max + 3; ++n)
    count(ctx, set1, n, 145, anchor);

  // For n >= 9 the last n - 9 entries are 1..n-9 in decreasing order.
  for (std::size_t n = 9; n <= ctx.n_max + 3; ++n) {
    bool tail = true;
    for_each_avoider(n, set1, [&](Permutation const &p) {
      for (std::size_t i = 9; i < n; ++i)
        tail = tail && p[i] == static_cast<int>(n - i);
      return tail;
    });
    ctx.truth("tail is the smallest entries decreasing", set1.key(), n, tail, anchor);
  }

  ScanOptions opts;
  opts.n_from = 5;
  opts.n_to = ctx.n_max;
  opts.probe_ns = {12, 13, 18, 21, 22};
  auto report = scan(ScanFamily{4, 4, true}, opts);

  std::vector<PatternSet> candidates;
  for (auto const &o : report.orbits)
    if (o.filter_candidate)
      candidates.insert(candidates.end(), o.members.begin(), o.members.end());
  std::sort(candidates.begin(), candidates.end());
  std::vector<PatternSet> listed;
  for (auto const *text : {"1234, 3214, 3421, 4312", "1234, 1324, 3421, 4312",
                           "1234, 1432, 3421, 4312", "1234, 1432, 3214, 4312",
                           "1234, 1432, 3214, 3421", "1234, 1432, 3214, 4231"})
    listed.push_back(PatternSet::parse(text));
  std::sort(listed.begin(), listed.end());
  ctx.equal("sets surviving the generating filter", "", std::nullopt, join(listed),
            join(candidates), anchor);

  std::vector<PatternSet> exceptional;
  for (auto const *o : report.with_status(OrbitStatus::exceptional))
    exceptional.insert(exceptional.end(), o->members.begin(), o->members.end());
  std::sort(exceptional.begin(), exceptional.end());
  std::vector<PatternSet> want{set1, set1_inv, set2};
  std::sort(want.begin(), want.end());
  ctx.equal("exceptional orbits (members)", "", std::nullopt, join(want), join(exceptional),
            anchor);
  ctx.equal("exceptional orbit count", "", std::nullopt, "2",
            std::to_string(report.with_status(OrbitStatus::exceptional).size()), anchor);
  ctx.equal("trivial orbits", "", std::nullopt, "0",
            std::to_string(report.with_status(OrbitStatus::trivial).size()), anchor);

  // Where generation stops.
  generates_sn(ctx, set1, 17, anchor);
  for (std::size_t n : {18u, 19u, 21u})
    ctx.truth("does not generate S_n", set1.key(), n,
              avoider_group(n, set1).group.order() != factorial(static_cast<unsigned>(n)),
              anchor);
  generates_sn(ctx, set2, 11, anchor);
  for (std::size_t n : {12u, 13u})
    ctx.truth("does not generate S_n", set2.key(), n,
              avoider_group(n, set2).group.order() != factorial(static_cast<unsigned>(n)),
              anchor);

  auto probe = [&](PatternSet const &t, std::size_t n) {
    return fixed_point_probe(t, n, n).front();
  };
  ctx.equal("fixed points", set1.key(), 21, "{11}", join(probe(set1, 21).fixed_points),
            anchor);
  ctx.equal("fixed points", set1.key(), 19, "{10}", join(probe(set1, 19).fixed_points),
            anchor);
  auto p22 = probe(set1, 22);
  ctx.equal("swapped pair", set1.key(), 22, "{11,12}",
            p22.swapped_pairs.empty() ? "none" : join(p22.swapped_pairs.back()), anchor);
  ctx.equal("fixed points", set1.key(), 11, "{}", join(probe(set1, 11).fixed_points), anchor);
  ctx.equal("fixed points", set2.key(), 13, "{7}", join(probe(set2, 13).fixed_points), anchor);
  ctx.truth("middle block decreasing", set2.key(), 13, [&] {
    bool ok = true;
    for_each_avoider(13, set2, [&](Permutation const &p) {
      for (std::size_t i = 6; i < 7; ++i)
        ok = ok && p[i] == 7;
      return ok;
    });
    return ok;
  }(), anchor);

  // The inverse of the first set generates the same group at every n.
  for (std::size_t n = 5; n <= 22; n += (n < ctx.n_max ? 1 : 4))
    ctx.truth("same group as the inverse set", set1_inv.key(), n,
              same_group(avoider_group(n, set1).group, avoider_group(n, set1_inv).group),
              anchor);
  auto const sub = PatternSet::parse("123, 132, 213, 3421");
  for (std::size_t n = 8; n <= ctx.n_max; ++n)
    verdict(ctx, sub, n, expect(GroupKind::named, 0, "g1152"), anchor);
}

// generator-pattern-sets ----------------------------------------------------

void scenario_generator_pattern_sets(Context &ctx)
{
  std::string const anchor = "theorem:generator-pattern-sets";
  std::array<std::vector<char const *>, 2> const listed_texts{
    std::vector<char const *>{"123, 231, 312, 321", "123, 132, 213", "123, 213, 231",
                              "123, 132, 231"},
    std::vector<char const *>{"1234, 2341, 4123, 4231", "1234, 1243, 1324, 2134",
                              "1234, 2134, 2341", "1234, 1243, 2341"}};

  for (std::size_t k = 3; k <= 4; ++k) {
    auto sets = generator_pattern_sets(k);
    for (std::size_t i = 0; i < 4; ++i)
      ctx.equal("pattern family " + std::to_string(i + 1), "", k,
                PatternSet::parse(listed_texts[k - 3][i]).key(), sets[i].key(), anchor);
    for (std::size_t n = k + 2; n <= 2 * k + 6; ++n) {
      auto at_n = generator_pattern_sets(k, n);
      ctx.truth("families stable in n (k=" + std::to_string(k) + ")", "", n,
                at_n == sets, anchor);
    }
  }

  // Closed forms for general k.
  for (std::size_t k = 3; k <= 6; ++k) {
    auto const sets = generator_pattern_sets(k);
    auto word = [&](std::vector<int> w) { return Permutation(std::move(w)); };
    std::vector<int> up(k);
    std::iota(up.begin(), up.end(), 1);
    auto id = word(up);
    std::vector<int> w1 = up, w2 = up, w3 = up;
    std::rotate(w3.begin(), w3.begin() + 1, w3.end()); // 2 3 .. k 1
    std::rotate(w2.rbegin(), w2.rbegin() + 1, w2.rend()); // k 1 2 .. k-1
    std::swap(w1.front(), w1.back());                     // k 2 .. k-1 1
    PatternSet a({word(w1), word(w2), word(w3), id});
    std::vector<Permutation> adj{id};
    for (std::size_t r = 2; r <= k; ++r) {
      auto w = up;
      std::swap(w[r - 2], w[r - 1]);
      adj.push_back(word(w));
    }
    auto t12 = up;
    std::swap(t12[0], t12[1]);
    auto tlast = up;
    std::swap(tlast[k - 2], tlast[k - 1]);
    ctx.equal("first family closed form", "", k, a.key(), sets[0].key(), anchor);
    ctx.equal("second family closed form", "", k, PatternSet(adj).key(), sets[1].key(), anchor);
    ctx.equal("third family closed form", "", k, PatternSet({word(w3), id, word(t12)}).key(),
              sets[2].key(), anchor);
    ctx.equal("fourth family closed form", "", k,
              PatternSet({word(w3), id, word(tlast)}).key(), sets[3].key(), anchor);
  }

  // Standard generating sets of S_n.
  for (std::size_t n = 2; n <= ctx.n_max; ++n) {
    auto full = factorial(static_cast<unsigned>(n));
    std::vector<Permutation> adj, star;
    for (std::size_t j = 1; j < n; ++j) {
      adj.push_back(transposition(n, static_cast<int>(j), static_cast<int>(j + 1)));
      star.push_back(transposition(n, 1, static_cast<int>(j + 1)));
    }
    ctx.equal("adjacent transpositions generate", "", n, full.str(),
              GroupHandle(adj, n).order().str(), "lemma:generating-sets");
    ctx.equal("transpositions (1,j) generate", "", n, full.str(),
              GroupHandle(star, n).order().str(), "lemma:generating-sets");
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = a + 1; b <= n; ++b) {
        bool coprime = std::gcd(b - a, n) == 1;
        auto order = GroupHandle({transposition(n, static_cast<int>(a), static_cast<int>(b)),
                                  long_cycle(n)},
                                 n)
                       .order();
        if (coprime)
          ctx.equal("(a,b) with the n-cycle generates", "", n, full.str(), order.str(),
                    "lemma:generating-sets");
      }
  }

  // Filter hit implies S_n, for every T inside S_3.
  for (auto const &t : all_subsets_of_s3()) {
    if (!generating_filter_hit(t))
      continue;
    for (std::size_t n = 4; n <= ctx.n_max; ++n)
      generates_sn(ctx, t, n, anchor);
  }
  std::size_t survivors = 0;
  for (auto const &t : family_members({3, 3, false}))
    survivors += generating_filter_candidate(t) ? 1 : 0;
  ctx.add("triples in S_3 surviving the filter", "", std::nullopt, "includes the 6 non-S_n",
          std::to_string(survivors), survivors >= 6, anchor);
}

// subgroup-lemma ---------------------------------------------------------------

std::vector<std::vector<Permutation>> subgroups_of(std::size_t k)
{
  auto all = all_permutations(k);
  std::set<std::vector<Permutation>> found;
  // Every subgroup of S_3 and S_4 is generated by at most two elements.
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      std::vector<Permutation> gens{all[i], all[j]};
      found.insert(*closure_by_search(gens, k, all.size()));
    }
  return {found.begin(), found.end()};
}

void scenario_subgroup_lemma(Context &ctx)
{
  std::string const anchor = "lemma:subgroup";
  for (std::size_t k : {3u, 4u}) {
    auto subs = subgroups_of(k);
    ctx.equal("subgroups of S_" + std::to_string(k), "", std::nullopt,
              k == 3 ? "6" : "30", std::to_string(subs.size()), anchor);
    auto all = all_permutations(k);
    for (auto const &g : subs) {
      std::vector<Permutation> complement;
      std::set_difference(all.begin(), all.end(), g.begin(), g.end(),
                          std::back_inserter(complement));
      PatternSet t(complement);
      std::size_t const lo = k + 1;
      std::size_t const hi = k == 3 ? std::min<std::size_t>(7, ctx.n_max)
                                    : std::min<std::size_t>(6, ctx.n_max);
      for (std::size_t n = lo; n <= hi; ++n)
        ctx.truth("S_n(S_k minus G) is a group", t.key(), n, is_subgroup_set(n, t), anchor);
    }
  }
}

// abelian / alternating scans -------------------------------------------------

std::vector<PatternSet> stability_universe()
{
  auto sets = all_subsets_of_s3();
  for (auto const &item : three_one_items())
    for (auto const *text : item.sets)
      sets.push_back(PatternSet::parse(text));
  for (auto const *text : {"1234, 3214, 3421, 4312", "1234, 1324, 3421, 4312",
                           "1234, 1432, 3421, 4312", "1234, 1432, 3214, 4312",
                           "1234, 1432, 3214, 3421", "1234, 1432, 3214, 4231"})
    sets.push_back(PatternSet::parse(text));
  return sets;
}

bool is_abelian(GroupClass const &c)
{
  switch (c.kind) {
  case GroupKind::trivial:
  case GroupKind::cyclic:
  case GroupKind::klein_four:
    return true;
  case GroupKind::symmetric:
    return c.param <= 2;
  case GroupKind::alternating:
    return c.param <= 3;
  default:
    return c.fingerprint && c.fingerprint->abelian;
  }
}

void stability_scan(Context &ctx, bool abelian)
{
  std::string const anchor = abelian ? "theorem:abelian" : "theorem:alternating";
  std::size_t const lo = 6;
  std::size_t const hi = std::max<std::size_t>(ctx.n_max, lo + 2);
  std::size_t stable = 0, relevant = 0;
  for (auto const &t : stability_universe()) {
    auto rep = classify_sequence(t, lo, hi);
    if (!rep.stabilized)
      continue;
    ++stable;
    auto const &v = rep.verdicts.back();
    if (abelian) {
      if (!is_abelian(v))
        continue;
      ++relevant;
      bool ok = isomorphic_verdicts(v, expect(GroupKind::trivial)) ||
                isomorphic_verdicts(v, expect(GroupKind::cyclic, 2)) ||
                isomorphic_verdicts(v, expect(GroupKind::klein_four));
      ctx.add("stable abelian verdict", t.key(), hi, "Trivial, Cyclic(2) or KleinFour",
              v.str(), ok, anchor);
    } else {
      bool alt = v.kind == GroupKind::alternating ||
                 isomorphic_verdicts(v, expect(GroupKind::cyclic, 3));
      relevant += alt ? 1 : 0;
      ctx.add("stable verdict is not A_m with m >= 3", t.key(), hi, "not alternating",
              v.str(), !alt, anchor);
    }
  }
  ctx.add("sets with a stable verdict", "", hi, "> 0", std::to_string(stable), stable > 0,
          anchor);
  if (abelian)
    ctx.add("stable abelian cases seen", "", hi, "> 0", std::to_string(relevant),
            relevant > 0, anchor);

  if (!abelian) {
    // Parity of psi_n follows floor(n/2).
    for (std::size_t n = 0; n <= 12; ++n) {
      bool odd = parity(Permutation::decreasing(n)) == Parity::odd;
      ctx.equal("parity of psi_n", "", n, (n / 2) % 2 ? "odd" : "even", odd ? "odd" : "even",
                anchor);
    }
  }
}

// semidirect-72 ----------------------------------------------------------------

void scenario_semidirect(Context &ctx)
{
  std::string const anchor = "lemma:semidirect";
  GroupHandle g({cyc("(1,6,3,4,2,5)", 6), cyc("(1,6,2,5)(3,4)", 6)}, 6);
  GroupHandle nn({cyc("(4,6,5)", 6), cyc("(2,3)(4,5)", 6), cyc("(1,3,2)(4,5,6)", 6),
                  cyc("(1,6,3,4,2,5)", 6)},
                 6);
  GroupHandle h({cyc("(5,6)", 6)}, 6);
  ctx.equal("order G", "", 6, "72", g.order().str(), anchor);
  ctx.equal("order N", "", 6, "36", nn.order().str(), anchor);
  ctx.equal("order H", "", 6, "2", h.order().str(), anchor);
  ctx.truth("G = N x| H", "", 6, semidirect_check(g, nn, h), anchor);

  GroupHandle s3xs3({cyc("(1,2,3)", 6), cyc("(1,2)", 6), cyc("(4,5,6)", 6), cyc("(4,5)", 6)},
                    6);
  ctx.truth("N has the fingerprint of S_3 x S_3", "", 6,
            fingerprint(nn) == fingerprint(s3xs3), anchor);

  GroupHandle trivial({}, 6);
  ctx.truth("trivial case", "", 6, semidirect_check(trivial, trivial, trivial), anchor);
  GroupHandle s3({cyc("(1,2)", 3), cyc("(2,3)", 3)}, 3);
  ctx.truth("non-normal N is rejected", "", 3,
            !semidirect_check(s3, GroupHandle({cyc("(1,2)", 3)}, 3),
                              GroupHandle({cyc("(2,3)", 3)}, 3)),
            anchor);

  PatternSet const t{"123", "132", "231", "3214"};
  for (std::size_t n = 6; n <= ctx.n_max; ++n) {
    std::vector<int> a, b;
    for (auto v = static_cast<int>(n); v >= 4; --v) {
      a.push_back(v);
      b.push_back(v);
    }
    a.insert(a.end(), {2, 1, 3});
    b.insert(b.end(), {3, 1, 2});
    Permutation alpha(a), beta(b);
    auto psi = Permutation::decreasing(n);
    auto bi = inverse(beta), ai = inverse(alpha);
    auto x = compose(bi, ai);
    ctx.truth("psi = (b^-1 a^-1)^3 b^-1", t.key(), n,
              compose(compose(x, compose(x, x)), bi) == psi, anchor);
    std::vector<Permutation> want{psi, alpha, beta};
    std::sort(want.begin(), want.end());
    ctx.equal("members", t.key(), n, join(want), join(enumerate_avoiders(n, t).members),
              anchor);
    ctx.truth("<alpha, beta> has the fingerprint of G", t.key(), n,
              fingerprint(GroupHandle({alpha, beta}, n)) == fingerprint(g), anchor);
  }
}

// symmetry lemmas --------------------------------------------------------------

void scenario_symmetry_lemmas(Context &ctx)
{
  auto const sets = all_subsets_of_s3();
  std::size_t const hi = std::min<std::size_t>(6, ctx.n_max);

  for (std::size_t n = 1; n <= hi; ++n) {
    std::vector<GroupHandle> groups;
    for (auto const &t : sets)
      groups.push_back(avoider_group(n, t).group);

    bool inclusion = true;
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = 0; j < sets.size(); ++j) {
        auto const &a = sets[i].patterns();
        auto const &b = sets[j].patterns();
        if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
          inclusion = inclusion && group_contains(groups[i], groups[j]);
      }
    ctx.truth("T subset of T' gives <S_n(T')> inside <S_n(T)>", "all T in S_3", n, inclusion,
              "lemma:inclusion");

    bool inv = true, conj = true, psi_free = true;
    auto psi = Permutation::decreasing(n);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      auto const &t = sets[i];
      auto gi = avoider_group(n, apply(Symmetry::inverse, t)).group;
      inv = inv && same_group(groups[i], gi);
      auto grc = avoider_group(n, apply(Symmetry::reverse_complement, t)).group;
      conj = conj && same_group(conjugate_group(groups[i], psi), grc);
      if (!t.has_decreasing()) {
        for (auto s : {Symmetry::reverse, Symmetry::complement, Symmetry::reverse_complement})
          for (auto const &p : enumerate_avoiders(n, apply(s, t)).members)
            psi_free = psi_free && groups[i].is_member(p);
      }
    }
    ctx.truth("<S_n(T)> = <S_n(T^-1)>", "all T in S_3", n, inv, "lemma:rc-inverse");
    ctx.truth("psi <S_n(T)> psi = <S_n(T^rc)>", "all T in S_3", n, conj, "lemma:rc-inverse");
    ctx.truth("psi-free T absorbs its r, c, rc images", "all T in S_3", n, psi_free,
              "lemma:psi-free");
  }

  // sigma_i <= tau_i elementwise
  auto s3 = all_permutations(3);
  auto s4 = all_permutations(4);
  for (std::size_t n = 4; n <= hi; ++n) {
    bool mono = true;
    for (auto const &a : s3)
      for (auto const &b : s3) {
        if (!(a < b))
          continue;
        PatternSet small({a, b});
        auto sub = avoider_group(n, small).group;
        for (auto const &x : s4) {
          if (!contains(x, a))
            continue;
          for (auto const &y : s4) {
            if (!contains(y, b))
              continue;
            auto big = avoider_group(n, PatternSet({x, y})).group;
            mono = mono && group_contains(big, sub);
          }
        }
      }
    ctx.truth("sigma_i <= tau_i gives containment of the groups", "pairs in S_3 vs S_4", n,
              mono, "lemma:subpattern");
  }

  bool identity = true;
  for (auto const &p : all_permutations(5))
    identity = identity && inverse(reverse(p)) == complement(inverse(p));
  ctx.truth("(p^r)^-1 = (p^-1)^c", "", 5, identity, "lemma:rc-inverse");
}

// bounded classes and structure --------------------------------------------

void scenario_bounded_classes(Context &ctx)
{
  std::string const prop = "proposition:bounded-classes";
  std::string const structure = "theorem:structure";

  auto peg = PegPermutation::parse("4-213");
  auto rep = bounded_class_check({peg});
  ctx.truth("4-213 bounded", peg.str(), std::nullopt, rep.bounded, prop);
  ctx.equal("4-213 eventual size", peg.str(), std::nullopt, "3",
            rep.constant ? std::to_string(*rep.constant) : "not constant", prop);

  auto two = PegPermutation::parse("1+2+");
  ctx.truth("two labels are unbounded", two.str(), std::nullopt,
            !bounded_class_check({two}).bounded, prop);
  auto one = bounded_class_check({PegPermutation::parse("1")});
  ctx.equal("unlabeled peg eventual size", "1", std::nullopt, "0",
            one.constant ? std::to_string(*one.constant) : "not constant", prop);

  for (std::size_t n = 1; n <= ctx.n_max; ++n) {
    auto members = enumerate_avoiders(n, PatternSet{"123", "231", "312"}).members;
    ctx.equal("S_n(123,231,312) = Grid(1-2-)", "123, 231, 312", n, join(members),
              join(grid_section(PegPermutation::parse("1-2-"), n)), prop);
  }
  for (std::size_t n = 3; n <= ctx.n_max; ++n) {
    auto members = enumerate_avoiders(n, PatternSet{"132", "312", "321", "2314"}).members;
    std::set<Permutation> grid;
    for (auto const *text : {"213+", "2+1"})
      for (auto &p : grid_section(PegPermutation::parse(text), n))
        grid.insert(p);
    ctx.equal("S_n(132,312,321,2314) = Grid(213+, 2+1)", "132, 312, 321, 2314", n,
              join(members), join(std::vector<Permutation>(grid.begin(), grid.end())), prop);
    auto members2 = enumerate_avoiders(n, PatternSet{"123", "132", "231", "3214"}).members;
    ctx.equal("S_n(123,132,231,3214) = Grid(4-213)", "123, 132, 231, 3214", n,
              join(members2), join(grid_section(peg, n)), prop);
  }

  // Two labels: the monotone pair t_1..t_k s_1..s_{n-k} alone gives n distinct
  // members, more once unlabeled entries join.
  for (auto const *text : {"1+2-", "2-1+", "1+32-", "3+1-24-"}) {
    auto p = PegPermutation::parse(text);
    bool grows = true;
    std::size_t prev = 0;
    for (std::size_t n = 2; n <= ctx.n_max; ++n) {
      auto c = grid_section(p, n).size();
      grows = grows && c >= n && c > prev;
      prev = c;
    }
    ctx.truth("section size grows", p.str(), std::nullopt, grows, prop);
  }

  // Every member of an eventually constant class has the 123/321 shape.
  for (auto const &item : three_one_items()) {
    if (item.sets.empty() || item.want(100).kind == GroupKind::dihedral ||
        item.want(100).kind == GroupKind::cyclic)
      continue;
    for (auto const *text : item.sets) {
      auto t = PatternSet::parse(text);
      for (std::size_t n = 8; n <= std::max<std::size_t>(ctx.n_max, 8); ++n) {
        bool ok = true;
        for (auto const &p : enumerate_avoiders(n, t).members)
          ok = ok && structure_form_check(p).has_value();
        ctx.truth("members have a monotone core", t.key(), n, ok, structure);
      }
    }
  }
  for (std::size_t n = 5; n <= ctx.n_max; ++n) {
    std::vector<int> w;
    for (auto v = static_cast<int>(n); v >= 4; --v)
      w.push_back(v);
    w.insert(w.end(), {2, 1, 3});
    auto form = structure_form_check(Permutation(w));
    ctx.equal("alpha = n..4 2 1 3", Permutation(w).compact(), n,
              "321[, psi_" + std::to_string(n - 3) + ", 213]", form ? form->str() : "none",
              structure);
  }
}

// catalog ------------------------------------------------------------------

struct Entry
{
  ScenarioInfo info;
  std::function<void(Context &)> run;
};

std::vector<Entry> const &entries()
{
  static std::vector<Entry> const list{
    {{"generating-sk", "S_n(132,231,321,k12..k-1) generates a copy of S_{k-1}",
      {"theorem:generating-sk"}, 9},
     scenario_generating_sk},
    {{"three-of-three", "all twenty triples of length-3 patterns",
      {"theorem:three-of-three"}, 9},
     scenario_three_of_three},
    {{"le-three-patterns", "sets of at most three patterns, emptiness bound",
      {"corollary:le-three"}, 8},
     scenario_le_three},
    {{"four-of-three", "four or more patterns of length 3", {"theorem:four-of-three"}, 9},
     scenario_four_of_three},
    {{"three-three-one-four", "three length-3 patterns plus one of length 4",
      {"theorem:three-three-one-four"}, 9},
     scenario_three_three_one_four},
    {{"four-of-four", "four patterns of length 4 without 4321", {"theorem:four-of-four"}, 9},
     scenario_four_of_four},
    {{"generator-pattern-sets", "pattern families of the standard generating sets",
      {"theorem:generator-pattern-sets", "lemma:generating-sets"}, 8},
     scenario_generator_pattern_sets},
    {{"subgroup-lemma", "S_n(S_k minus G) is a group", {"lemma:subgroup"}, 7},
     scenario_subgroup_lemma},
    {{"abelian-scan", "stable abelian verdicts are Z_2 or Z_2 x Z_2", {"theorem:abelian"}, 9},
     [](Context &ctx) { stability_scan(ctx, true); }},
    {{"alternating-scan", "no stable alternating verdict A_m with m >= 3",
      {"theorem:alternating"}, 9},
     [](Context &ctx) { stability_scan(ctx, false); }},
    {{"semidirect-72", "the order-72 group as N x| H", {"lemma:semidirect"}, 9},
     scenario_semidirect},
    {{"symmetry-lemmas", "inclusion, sub-pattern and symmetry lemmas",
      {"lemma:inclusion", "lemma:subpattern", "lemma:rc-inverse", "lemma:psi-free"}, 6},
     scenario_symmetry_lemmas},
    {{"bounded-classes", "peg permutations of eventually constant classes",
      {"proposition:bounded-classes", "theorem:structure"}, 8},
     scenario_bounded_classes},
  };
  return list;
}

} // namespace

std::vector<ScenarioInfo> const &scenario_catalog()
{
  static std::vector<ScenarioInfo> const infos = [] {
    std::vector<ScenarioInfo> out;
    for (auto const &e : entries())
      out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::vector<std::string> const &in_scope_results()
{
  static std::vector<std::string> const tags{
    "lemma:inclusion",
    "lemma:subpattern",
    "lemma:rc-inverse",
    "lemma:psi-free",
    "lemma:generating-sets",
    "lemma:semidirect",
    "lemma:subgroup",
    "theorem:generating-sk",
    "proposition:bounded-classes",
    "theorem:structure",
    "theorem:abelian",
    "theorem:alternating",
    "theorem:generator-pattern-sets",
    "theorem:three-of-three",
    "corollary:le-three",
    "theorem:four-of-three",
    "theorem:three-three-one-four",
    "theorem:four-of-four",
  };
  return tags;
}

ScenarioReport run_scenario(std::string const &id, std::optional<std::size_t> n_max)
{
  for (auto const &e : entries()) {
    if (e.info.id != id)
      continue;
    Context ctx{n_max.value_or(e.info.default_n_max), {}};
    e.run(ctx);
    return {e.info.id, e.info.description, ctx.n_max, std::move(ctx.checks)};
  }
  throw UnknownScenario(id);
}

} // namespace patgroup
