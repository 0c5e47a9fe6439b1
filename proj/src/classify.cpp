#include "patgroup/classify.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace patgroup
{

std::string Fingerprint::str() const
{
  std::ostringstream out;
  out << "order " << order;
  if (partial)
    return out.str() + " (partial)";
  out << ", orders {";
  bool first = true;
  for (auto const &[k, count] : histogram) {
    out << (first ? "" : ",") << k << ':' << count;
    first = false;
  }
  out << "}, center " << center_order << ", classes " << class_count << ", "
      << (abelian ? "abelian" : "nonabelian");
  return out.str();
}

Fingerprint fingerprint(GroupHandle const &g, std::size_t cap)
{
  if (g.order() > cap)
    throw CapExceeded(g.order(), cap);

  std::vector<Permutation> elems;
  elems.reserve(static_cast<std::size_t>(g.order()));
  g.chain().for_each_element([&](Permutation const &p) { elems.push_back(p); });

  std::unordered_map<Permutation, std::size_t> index;
  index.reserve(elems.size() * 2);
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], i);

  Fingerprint fp;
  fp.order = g.order();
  for (auto const &p : elems)
    ++fp.histogram[element_order(p)];

  auto const &gens = g.generators();
  for (auto const &p : elems) {
    bool central = std::all_of(gens.begin(), gens.end(), [&](auto const &s) {
      return compose(s, p) == compose(p, s);
    });
    fp.center_order += central ? 1 : 0;
  }
  fp.abelian = fp.center_order == elems.size();

  // Conjugacy classes are the orbits of conjugation by the generators.
  std::vector<Permutation> gens_inv;
  for (auto const &s : gens)
    gens_inv.push_back(inverse(s));
  std::vector<bool> seen(elems.size(), false);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[i])
      continue;
    ++fp.class_count;
    seen[i] = true;
    std::deque<std::size_t> queue{i};
    while (!queue.empty()) {
      auto const &x = elems[queue.front()];
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        auto j = index.at(compose(gens[k], compose(x, gens_inv[k])));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
  }
  return fp;
}

DuplicateReference::DuplicateReference(std::string const &id)
  : std::invalid_argument("reference '" + id + "' is already registered")
{}

void ReferenceRegistry::register_reference(std::string id,
                                           std::vector<Permutation> generators,
                                           std::size_t degree)
{
  for (auto const &e : _entries) {
    if (e.id == id)
      throw DuplicateReference(id);
  }
  GroupHandle g(generators, degree);
  _entries.push_back({std::move(id), degree, std::move(generators), fingerprint(g)});
}

std::vector<std::string> ReferenceRegistry::matches(Fingerprint const &fp) const
{
  std::vector<std::string> ids;
  if (fp.partial)
    return ids;
  for (auto const &e : _entries) {
    if (e.fingerprint == fp)
      ids.push_back(e.id);
  }
  return ids;
}

std::optional<std::string> ReferenceRegistry::match_named(Fingerprint const &fp) const
{
  auto ids = matches(fp);
  if (ids.empty())
    return std::nullopt;
  return ids.front();
}

ReferenceRegistry const &ReferenceRegistry::shipped()
{
  static ReferenceRegistry const registry = [] {
    ReferenceRegistry r;
    for (std::size_t k = 2; k <= 6; ++k) {
      std::vector<int> cycle(k);
      for (std::size_t i = 0; i < k; ++i)
        cycle[i] = static_cast<int>((i + 1) % k + 1);
      r.register_reference("sym:" + std::to_string(k),
                           {from_cycles(CycleForm{k, {{1, 2}}}),
                            Permutation(std::move(cycle))},
                           k);
    }
    r.register_reference("s3xs3:2",
                         {from_cycles(CycleForm::parse("(1,6,3,4,2,5)", 6)),
                          from_cycles(CycleForm::parse("(1,6,2,5)(3,4)", 6))},
                         6);
    auto g1152 = avoider_group(8, PatternSet{"123", "132", "213", "4312"});
    r.register_reference("g1152", g1152.group.generators(), 8);
    return r;
  }();
  return registry;
}

std::string to_string(GroupKind kind)
{
  switch (kind) {
  case GroupKind::trivial: return "Trivial";
  case GroupKind::cyclic: return "Cyclic";
  case GroupKind::klein_four: return "KleinFour";
  case GroupKind::dihedral: return "Dihedral";
  case GroupKind::symmetric: return "Symmetric";
  case GroupKind::alternating: return "Alternating";
  case GroupKind::named: return "Named";
  case GroupKind::other: return "Other";
  }
  return "?";
}

std::string GroupClass::signature() const
{
  switch (kind) {
  case GroupKind::trivial:
  case GroupKind::klein_four:
    return to_string(kind);
  case GroupKind::named:
    return "Named(" + ref + ")";
  case GroupKind::other:
    return "Other(" + (fingerprint ? fingerprint->str() : "order " + order.str()) + ")";
  default:
    return to_string(kind) + "(" + std::to_string(param) + ")";
  }
}

std::string GroupClass::str() const
{
  auto s = signature();
  if (ambiguous)
    s += " [ambiguous]";
  return s;
}

bool GroupClass::satisfies_order_law() const
{
  auto f = factorial(static_cast<unsigned>(param));
  switch (kind) {
  case GroupKind::trivial: return order == 1;
  case GroupKind::cyclic: return param >= 1 && order == param;
  case GroupKind::klein_four: return order == 4;
  case GroupKind::dihedral: return param >= 3 && order == 2 * param;
  case GroupKind::symmetric: return order == f;
  case GroupKind::alternating: return param >= 3 && order * 2 == f;
  case GroupKind::named: return fingerprint && fingerprint->order == order;
  case GroupKind::other: return order >= 1;
  }
  return false;
}

namespace
{

std::vector<int> support(GroupHandle const &g)
{
  std::vector<bool> moved(g.degree() + 1, false);
  for (auto const &s : g.generators())
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != static_cast<int>(i + 1))
        moved[i + 1] = true;
  std::vector<int> points;
  for (std::size_t i = 1; i <= g.degree(); ++i)
    if (moved[i])
      points.push_back(static_cast<int>(i));
  return points;
}

std::optional<std::size_t> dihedral_param(std::vector<Permutation> const &elems,
                                          std::vector<std::uint64_t> const &orders)
{
  std::size_t const size = elems.size();
  if (size % 2 != 0 || size < 6)
    return std::nullopt;
  std::uint64_t const m = size / 2;

  auto r = std::find(orders.begin(), orders.end(), m);
  if (r == orders.end())
    return std::nullopt;
  auto const &rot = elems[r - orders.begin()];
  auto rot_inv = inverse(rot);
  for (std::size_t i = 0; i < size; ++i) {
    if (orders[i] == 2 && compose(elems[i], compose(rot, elems[i])) == rot_inv)
      return m;
  }
  return std::nullopt;
}

} // namespace

GroupClass classify(GroupHandle const &g, ReferenceRegistry const &registry,
                    std::size_t cap)
{
  GroupClass verdict;
  verdict.order = g.order();

  if (g.order() == 1) {
    verdict.kind = GroupKind::trivial;
    return verdict;
  }

  auto const m = support(g).size();
  auto const m_fact = factorial(static_cast<unsigned>(m));
  if (g.order() == m_fact && (m < g.degree() || m >= 4)) {
    verdict.kind = GroupKind::symmetric;
    verdict.param = m;
    return verdict;
  }
  bool all_even = std::all_of(g.generators().begin(), g.generators().end(),
                              [](auto const &s) { return parity(s) == Parity::even; });
  if (m >= 4 && g.order() * 2 == m_fact && all_even) {
    verdict.kind = GroupKind::alternating;
    verdict.param = m;
    return verdict;
  }

  if (g.order() > cap) {
    verdict.kind = GroupKind::other;
    verdict.partial = true;
    Fingerprint fp;
    fp.order = g.order();
    fp.partial = true;
    verdict.fingerprint = fp;
    return verdict;
  }

  auto elems = g.elements(cap);
  std::vector<std::uint64_t> orders;
  orders.reserve(elems.size());
  for (auto const &p : elems)
    orders.push_back(element_order(p));

  auto const size = static_cast<std::uint64_t>(elems.size());
  if (std::find(orders.begin(), orders.end(), size) != orders.end()) {
    verdict.kind = GroupKind::cyclic;
    verdict.param = size;
    return verdict;
  }
  if (size == 4) {
    verdict.kind = GroupKind::klein_four;
    return verdict;
  }
  if (auto d = dihedral_param(elems, orders)) {
    verdict.kind = GroupKind::dihedral;
    verdict.param = *d;
    return verdict;
  }

  auto fp = fingerprint(g, cap);
  verdict.fingerprint = fp;
  auto ids = registry.matches(fp);
  verdict.ambiguous = ids.size() > 1;
  if (!ids.empty()) {
    auto const &id = ids.front();
    if (id.rfind("sym:", 0) == 0) {
      verdict.kind = GroupKind::symmetric;
      verdict.param = std::stoul(id.substr(4));
    } else {
      verdict.kind = GroupKind::named;
      verdict.ref = id;
    }
    return verdict;
  }
  verdict.kind = GroupKind::other;
  return verdict;
}

namespace
{

std::string canonical_signature(GroupClass c)
{
  if (c.kind == GroupKind::symmetric && c.param == 2)
    c.kind = GroupKind::cyclic;
  else if (c.kind == GroupKind::symmetric && c.param == 3)
    c.kind = GroupKind::dihedral;
  else if (c.kind == GroupKind::alternating && c.param == 3)
    c.kind = GroupKind::cyclic;
  else if (c.kind == GroupKind::dihedral && c.param == 2)
    c.kind = GroupKind::klein_four;
  else if (c.kind == GroupKind::symmetric && c.param <= 1)
    c.kind = GroupKind::trivial;
  return c.signature();
}

} // namespace

bool isomorphic_verdicts(GroupClass const &a, GroupClass const &b)
{
  return canonical_signature(a) == canonical_signature(b);
}

StabilityReport classify_sequence(PatternSet const &t, std::size_t n_from,
                                  std::size_t n_to,
                                  ReferenceRegistry const &registry)
{
  StabilityReport report;
  report.patterns = t;
  report.n_from = n_from;
  report.n_to = n_to;
  for (std::size_t n = n_from; n <= n_to; ++n)
    report.verdicts.push_back(classify(avoider_group(n, t).group, registry));

  if (report.verdicts.empty()) {
    report.constant_from = n_from;
    return report;
  }
  std::size_t k = report.verdicts.size() - 1;
  auto const top = report.verdicts.back().signature();
  while (k > 0 && report.verdicts[k - 1].signature() == top)
    --k;
  report.constant_from = n_from + k;
  report.stabilized = report.verdicts.size() - k >= 3;
  return report;
}

} // namespace patgroup
