#include "pia/green.hpp"

#include <map>

#include "pia/errors.hpp"

namespace pia {

namespace {

std::vector<int> classify_by_sets(const std::vector<std::vector<char>>& sets) {
  std::map<std::vector<char>, int> ids;
  std::vector<int> labels(sets.size());
  for (size_t x = 0; x < sets.size(); ++x)
    labels[x] = ids.emplace(sets[x], static_cast<int>(ids.size())).first->second;
  return labels;
}

} // namespace

GreenData green(const FiniteSemigroup& s) {
  int n = s.n;
  std::vector<std::vector<char>> left(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> right(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> two(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x) {
    left[x][x] = right[x][x] = two[x][x] = 1; // the S^1 factor
    for (int a = 0; a < n; ++a) {
      left[x][s.at(a, x)] = 1;
      right[x][s.at(x, a)] = 1;
      two[x][s.at(a, x)] = 1;
      two[x][s.at(x, a)] = 1;
      for (int b = 0; b < n; ++b) two[x][s.at(s.at(a, x), b)] = 1;
    }
  }

  GreenData g;
  g.l = Partition::from_labels(n, classify_by_sets(left));
  g.r = Partition::from_labels(n, classify_by_sets(right));
  g.h = meet(g.l, g.r);
  g.d = join(g.l, g.r);
  g.j = Partition::from_labels(n, classify_by_sets(two));
  if (!(g.d == g.j))
    fail(Errc::invalid_argument, "D and J differ on a finite carrier");
  g.group_h.assign(g.h.size(), false);
  for (int x = 0; x < n; ++x)
    if (s.at(x, x) == x) g.group_h[g.h.block_of(x)] = true;
  return g;
}

} // namespace pia
