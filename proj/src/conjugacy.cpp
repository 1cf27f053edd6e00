#include "pia/conjugacy.hpp"

#include <numeric>

#include "pia/errors.hpp"

namespace pia {

bool conjugation_condition(const FiniteSemigroup& s1, int k, int a, int b, int g, int h) {
  switch (k) {
    case 0: return s1.at(a, g) == s1.at(g, b);             // ag = gb
    case 1: return s1.at(b, h) == s1.at(h, a);             // bh = ha
    case 2: return s1.at(s1.at(h, a), g) == b;             // hag = b
    case 3: return s1.at(s1.at(g, b), h) == a;             // gbh = a
    case 4: return s1.at(s1.at(h, g), b) == b;             // hg.b = b
    case 5: return s1.at(s1.at(g, h), a) == a;             // gh.a = a
    case 6: return s1.at(b, s1.at(h, g)) == b;             // b.hg = b
    case 7: return s1.at(a, s1.at(g, h)) == a;             // a.gh = a
    default: fail(Errc::invalid_argument, "condition index out of range");
  }
}

namespace {

inline bool witnesses(const FiniteSemigroup& s1, int a, int b, int g, int h) {
  return conjugation_condition(s1, 0, a, b, g, h) && conjugation_condition(s1, 1, a, b, g, h) &&
         conjugation_condition(s1, 2, a, b, g, h) && conjugation_condition(s1, 3, a, b, g, h);
}

} // namespace

std::optional<ConjugacyWitness> conjugators(const SemigroupWithOne& s, int a, int b) {
  const auto order = s.scan_order();
  for (int g : order)
    for (int h : order)
      if (witnesses(s.s1, a, b, g, h)) return ConjugacyWitness{g, h};
  return std::nullopt;
}

Partition conjugacy_classes(const SemigroupWithOne& s) {
  int n = s.base.n;
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (find(a) == find(b)) continue;
      if (conjugators(s, a, b)) root[find(b)] = find(a);
    }
  std::vector<int> labels(n);
  for (int x = 0; x < n; ++x) labels[x] = find(x);
  return Partition::from_labels(n, labels);
}

std::vector<std::pair<int, int>> k_pairs(const SemigroupWithOne& s, int g, int h) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < s.base.n; ++a)
    for (int b = 0; b < s.base.n; ++b)
      if (witnesses(s.s1, a, b, g, h)) out.emplace_back(a, b);
  return out;
}

} // namespace pia
