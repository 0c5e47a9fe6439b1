#include "patgroup/grid.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace patgroup
{

PegPermutation::PegPermutation(Permutation skeleton, std::vector<PegLabel> labels)
  : _skeleton(std::move(skeleton)), _labels(std::move(labels))
{
  if (_labels.size() != _skeleton.size())
    throw std::invalid_argument("peg permutation needs one label per entry");
}

PegPermutation PegPermutation::parse(std::string_view text)
{
  std::vector<int> values;
  std::vector<PegLabel> labels;
  bool spaced = text.find(' ') != std::string_view::npos;

  auto label_of = [](char c) {
    return c == '+' ? PegLabel::plus : PegLabel::minus;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("unexpected '" + std::string(1, c) + "' in peg permutation");

    int value = 0;
    if (spaced) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + (text[i++] - '0');
    } else {
      value = c - '0';
      ++i;
    }
    values.push_back(value);

    if (i < text.size() && (text[i] == '+' || text[i] == '-'))
      labels.push_back(label_of(text[i++]));
    else
      labels.push_back(PegLabel::none);

    if (spaced && i < text.size() && text[i] != ' ')
      throw ParseError("peg tokens must be separated by spaces");
  }

  try {
    return PegPermutation(Permutation(std::move(values)), std::move(labels));
  } catch (ParseError const &) {
    throw;
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
}

std::size_t PegPermutation::labeled_count() const
{
  return static_cast<std::size_t>(
    std::count_if(_labels.begin(), _labels.end(),
                  [](PegLabel l) { return l != PegLabel::none; }));
}

std::string PegPermutation::str() const
{
  bool compact = size() <= 9;
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!compact && i > 0)
      out += ' ';
    out += std::to_string(_skeleton[i]);
    if (_labels[i] == PegLabel::plus)
      out += '+';
    else if (_labels[i] == PegLabel::minus)
      out += '-';
  }
  return out;
}

Permutation inflate(Permutation const &sigma, std::vector<Permutation> const &parts)
{
  if (parts.size() != sigma.size())
    throw std::invalid_argument("inflation needs one part per entry of the skeleton");

  std::size_t const m = sigma.size();
  // offset[v] = number of values in blocks whose skeleton value is below v
  std::vector<std::size_t> len_by_value(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    len_by_value[sigma[i]] = parts[i].size();
  std::vector<std::size_t> offset(m + 2, 0);
  for (std::size_t v = 1; v <= m; ++v)
    offset[v + 1] = offset[v] + len_by_value[v];

  std::vector<int> word;
  word.reserve(offset[m + 1]);
  for (std::size_t i = 0; i < m; ++i) {
    auto base = static_cast<int>(offset[sigma[i]]);
    for (int x : parts[i].word())
      word.push_back(base + x);
  }
  return Permutation(std::move(word));
}

namespace
{

struct Block
{
  std::size_t start = 0;
  std::size_t length = 0;
  int low = 0;
  int high = 0;
};

class GridMatcher
{
public:
  GridMatcher(Permutation const &p, PegPermutation const &peg)
    : _p(p), _peg(peg), _blocks(peg.size())
  {
    // Positions the remaining blocks can absorb at most, for pruning.
    _capacity.assign(peg.size() + 1, 0);
    for (std::size_t i = peg.size(); i-- > 0;) {
      bool open = peg.labels()[i] != PegLabel::none;
      _capacity[i] = open ? p.size() : std::min(p.size(), _capacity[i + 1] + 1);
    }
  }

  bool run() { return place(0, 0); }

  std::vector<Permutation> witness() const
  {
    std::vector<Permutation> parts;
    for (auto const &b : _blocks) {
      auto w = _p.word();
      parts.push_back(Permutation::standardize(
        std::span<int const>(w.data() + b.start, b.length)));
    }
    return parts;
  }

private:
  bool place(std::size_t block, std::size_t pos)
  {
    std::size_t const n = _p.size();
    if (block == _peg.size())
      return pos == n;
    if (n - pos > _capacity[block])
      return false;

    PegLabel label = _peg.labels()[block];
    std::size_t max_len = label == PegLabel::none ? std::min<std::size_t>(1, n - pos)
                                                  : n - pos;

    int low = 0, high = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
      if (len > 0) {
        int v = _p[pos + len - 1];
        if (len == 1) {
          low = high = v;
        } else {
          int prev = _p[pos + len - 2];
          if ((label == PegLabel::plus && v < prev) ||
              (label == PegLabel::minus && v > prev))
            break;
          low = std::min(low, v);
          high = std::max(high, v);
        }
        if (static_cast<std::size_t>(high - low + 1) != len)
          continue;
      }
      _blocks[block] = {pos, len, low, high};
      if (len > 0 && !consistent(block))
        continue;
      if (place(block + 1, pos + len))
        return true;
    }
    return false;
  }

  bool consistent(std::size_t block) const
  {
    auto const &b = _blocks[block];
    int rank = _peg.skeleton()[block];
    for (std::size_t j = 0; j < block; ++j) {
      auto const &a = _blocks[j];
      if (a.length == 0)
        continue;
      bool above = _peg.skeleton()[j] > rank;
      if (above ? a.low < b.high : a.high > b.low)
        return false;
    }
    return true;
  }

  Permutation const &_p;
  PegPermutation const &_peg;
  std::vector<Block> _blocks;
  std::vector<std::size_t> _capacity;
};

Permutation monotone_part(PegLabel label, std::size_t len)
{
  return label == PegLabel::minus ? Permutation::decreasing(len)
                                  : Permutation::identity(len);
}

template<typename Visit>
void for_each_inflation(PegPermutation const &peg, std::size_t n, Visit &&visit)
{
  std::size_t const m = peg.size();
  std::vector<Permutation> parts(m);

  auto rec = [&](auto &self, std::size_t i, std::size_t left) -> void {
    if (i == m) {
      if (left == 0)
        visit(inflate(peg.skeleton(), parts));
      return;
    }
    PegLabel label = peg.labels()[i];
    std::size_t max_len = label == PegLabel::none ? std::min<std::size_t>(1, left)
                                                  : left;
    for (std::size_t len = 0; len <= max_len; ++len) {
      parts[i] = monotone_part(label, len);
      self(self, i + 1, left - len);
    }
  };
  rec(rec, 0, n);
}

} // namespace

std::optional<std::vector<Permutation>> grid_member(Permutation const &p,
                                                    PegPermutation const &peg)
{
  GridMatcher matcher(p, peg);
  if (!matcher.run())
    return std::nullopt;
  return matcher.witness();
}

std::vector<Permutation> grid_section(PegPermutation const &peg, std::size_t n)
{
  std::set<Permutation> found;
  for_each_inflation(peg, n, [&](Permutation p) { found.insert(std::move(p)); });
  return {found.begin(), found.end()};
}

std::size_t grid_union_count(std::vector<PegPermutation> const &pegs, std::size_t n)
{
  std::set<Permutation> found;
  for (auto const &peg : pegs)
    for_each_inflation(peg, n, [&](Permutation p) { found.insert(std::move(p)); });
  return found.size();
}

BoundedClassReport bounded_class_check(std::vector<PegPermutation> const &pegs)
{
  BoundedClassReport report;
  report.bounded = std::all_of(pegs.begin(), pegs.end(),
                               [](auto const &peg) { return peg.labeled_count() <= 1; });

  // With one label and r + s unlabeled entries the count settles at
  // n = r + s + 1 (at n = r + s distinct inflations can still collide).
  for (auto const &peg : pegs) {
    std::size_t start = peg.labeled_count() == 0 ? peg.size() + 1
                                                 : peg.size() - peg.labeled_count() + 1;
    report.n_star = std::max(report.n_star, start);
  }

  for (std::size_t n = report.n_star; n <= report.n_star + 3; ++n)
    report.counts.push_back(grid_union_count(pegs, n));

  if (report.bounded &&
      std::adjacent_find(report.counts.begin(), report.counts.end(),
                         std::not_equal_to<>()) == report.counts.end())
    report.constant = report.counts.front();
  return report;
}

std::string StructureForm::str() const
{
  std::ostringstream out;
  if (direction == CoreDirection::ascending)
    out << "123[" << before.compact() << ", id_" << core_length << ", "
        << after.compact() << "]";
  else
    out << "321[" << before.compact() << ", psi_" << core_length << ", "
        << after.compact() << "]";
  return out.str();
}

std::optional<StructureForm> structure_form_check(Permutation const &p)
{
  auto const n = static_cast<int>(p.size());
  auto const &w = p.word();

  struct Candidate
  {
    CoreDirection direction;
    int first = 0;
    int core = 0;
    int tau = 0;
  };
  std::optional<Candidate> best;

  auto offer = [&](Candidate c) {
    if (c.core < 1)
      return;
    if (!best || c.core > best->core ||
        (c.core == best->core &&
         (c.direction < best->direction ||
          (c.direction == best->direction && c.tau < best->tau))))
      best = c;
  };

  int prefix_max = 0;
  int prefix_min = n + 1;
  for (int a = 0; a <= n; ++a) {
    if (a > 0) {
      prefix_max = std::max(prefix_max, w[a - 1]);
      prefix_min = std::min(prefix_min, w[a - 1]);
    }
    if (prefix_max == a) {
      int m = 0;
      while (a + m < n && w[a + m] == a + m + 1)
        ++m;
      offer({CoreDirection::ascending, a, m, a});
    }
    if (a == 0 || prefix_min == n - a + 1) {
      int m = 0;
      while (a + m < n && w[a + m] == n - a - m)
        ++m;
      offer({CoreDirection::descending, a, m, n - a - m});
    }
  }

  if (!best)
    return std::nullopt;

  auto block = [&](int from, int len) {
    return Permutation::standardize(std::span<int const>(w.data() + from, len));
  };
  return StructureForm{best->direction, block(0, best->first),
                       static_cast<std::size_t>(best->core),
                       block(best->first + best->core, n - best->first - best->core)};
}

} // namespace patgroup
