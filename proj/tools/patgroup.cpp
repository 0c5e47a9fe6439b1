#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "patgroup/report.hpp"

using namespace patgroup;

namespace
{

int run_enumerate(std::size_t n, std::string const &patterns, bool count_only,
                  std::string const &out)
{
  auto t = PatternSet::parse(patterns);
  if (count_only) {
    Json j;
    j["n"] = n;
    j["patterns"] = t.key();
    j["count"] = count_avoiders(n, t).str();
    emit(j, out);
  } else {
    emit(to_json(enumerate_avoiders(n, t), true), out);
  }
  return 0;
}

int run_group(std::size_t n, std::string const &patterns, bool order_only,
              std::string const &cas)
{
  auto t = PatternSet::parse(patterns);
  auto g = avoider_group(n, t);
  emit(group_json(n, t, g, order_only), "-");
  if (!cas.empty()) {
    std::ofstream file(cas);
    if (!file)
      throw std::runtime_error("cannot write " + cas);
    for (auto const &s : g.group.generators())
      file << to_cycles(s).str() << '\n';
  }
  return 0;
}

int run_grid(std::string const &peg_text, std::string const &member,
             std::optional<std::size_t> section, bool witness)
{
  auto peg = PegPermutation::parse(peg_text);
  if (!member.empty()) {
    auto p = Permutation::parse(member);
    emit(grid_member_json(peg, p, grid_member(p, peg), witness), "-");
    return 0;
  }
  emit(grid_section_json(peg, *section, grid_section(peg, *section)), "-");
  return 0;
}

int run_classify_range(std::size_t from, std::size_t to, std::string const &patterns,
                       std::string const &out)
{
  if (from > to)
    throw std::invalid_argument("--n-from must not exceed --n-to");
  emit(to_json(classify_sequence(PatternSet::parse(patterns), from, to)), out);
  return 0;
}

int run_verify(std::vector<std::string> ids, bool all, std::optional<std::size_t> n_max,
               std::string const &out)
{
  if (all)
    for (auto const &s : scenario_catalog())
      ids.push_back(s.id);
  if (ids.empty())
    throw std::invalid_argument("give --scenario <id> or --all");

  bool ok = true;
  Json doc = Json::array();
  for (auto const &id : ids) {
    auto report = run_scenario(id, n_max);
    std::cerr << (report.passed() ? "PASS " : "FAIL ") << report.id << " ("
              << report.checks.size() << " checks)\n";
    if (auto const *f = report.first_failure()) {
      std::cerr << "  first failure: " << f->label << " [" << f->patterns << "]"
                << (f->n ? " n=" + std::to_string(*f->n) : "") << ": expected "
                << f->expected << ", got " << f->actual << "\n"
                << "  reproduce: " << report.reproduce() << "\n";
    }
    ok = ok && report.passed();
    doc.push_back(to_json(report));
  }
  if (!out.empty())
    emit(doc.size() == 1 ? doc.front() : doc, out);
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Groups generated by pattern-avoiding permutations"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::string patterns;
  std::string out;

  auto *enumerate = app.add_subcommand("enumerate", "list or count S_n(T)");
  bool count_only = false;
  enumerate->add_option("--n", n, "permutation length")->required();
  enumerate->add_option("--patterns", patterns, "e.g. \"132, 231, 321\"")->required();
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_option("--out", out, "JSON output file");

  auto *group = app.add_subcommand("group", "order and generators of <S_n(T)>");
  bool order_only = false;
  std::string cas;
  group->add_option("--n", n)->required();
  group->add_option("--patterns", patterns)->required();
  group->add_flag("--order-only", order_only);
  group->add_option("--export-cas", cas, "write generators in cycle notation");

  auto *grid = app.add_subcommand("grid", "grid class membership or sections");
  std::string peg, member;
  std::optional<std::size_t> section;
  bool witness = false;
  grid->add_option("--peg", peg, "e.g. \"3+1-24-\"")->required();
  auto *member_opt = grid->add_option("--member", member);
  auto *section_opt = grid->add_option("--section", section);
  member_opt->excludes(section_opt);
  grid->add_flag("--witness", witness);

  auto *classify_cmd = app.add_subcommand("classify", "isomorphism type of <S_n(T)>");
  classify_cmd->add_option("--n", n)->required();
  classify_cmd->add_option("--patterns", patterns)->required();

  auto *range = app.add_subcommand("classify-range", "verdicts over a range of n");
  std::size_t n_from = 0, n_to = 0;
  range->add_option("--n-from", n_from)->required();
  range->add_option("--n-to", n_to)->required();
  range->add_option("--patterns", patterns)->required();
  range->add_option("--out", out);

  auto *verify = app.add_subcommand("verify", "run verification scenarios");
  std::vector<std::string> ids;
  bool all = false, list = false;
  std::optional<std::size_t> n_max;
  verify->add_option("--scenario", ids, "scenario id (repeatable)");
  verify->add_flag("--all", all);
  verify->add_flag("--list", list, "print scenario ids");
  verify->add_option("--n-max", n_max);
  verify->add_option("--out", out);

  auto *scan_cmd = app.add_subcommand("scan", "exhaustive scan of a pattern-set family");
  ScanFamily family;
  ScanOptions options;
  scan_cmd->add_option("--pattern-length", family.pattern_length)->required();
  scan_cmd->add_option("--subset-size", family.subset_size)->required();
  scan_cmd->add_flag("--exclude-psi", family.exclude_psi);
  scan_cmd->add_option("--n-from", options.n_from)->required();
  scan_cmd->add_option("--n-to", options.n_to)->required();
  scan_cmd->add_option("--probe", options.probe_ns, "extra n for filter survivors")
      ->delimiter(',');
  scan_cmd->add_option("--threads", options.threads);
  scan_cmd->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate)
      return run_enumerate(n, patterns, count_only, out);
    if (*group)
      return run_group(n, patterns, order_only, cas);
    if (*grid) {
      if (member.empty() && !section)
        throw std::invalid_argument("grid needs --member or --section");
      return run_grid(peg, member, section, witness);
    }
    if (*classify_cmd) {
      auto verdict = classify(avoider_group(n, PatternSet::parse(patterns)).group);
      emit(to_json(verdict, n), "-");
      return 0;
    }
    if (*range)
      return run_classify_range(n_from, n_to, patterns, out);
    if (*verify) {
      if (list) {
        for (auto const &s : scenario_catalog())
          std::cout << s.id << "  " << s.description << "\n";
        return 0;
      }
      return run_verify(ids, all, n_max, out);
    }
    if (*scan_cmd) {
      if (options.n_from > options.n_to)
        throw std::invalid_argument("--n-from must not exceed --n-to");
      emit(to_json(scan(family, options)), out);
      return 0;
    }
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
