#include "pia/partial_map.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "pia/errors.hpp"

namespace pia {

PartialMap PartialMap::identity(int n) {
  PartialMap m;
  m.n = n;
  m.pairs.reserve(n);
  for (int i = 0; i < n; ++i) m.pairs.emplace_back(i, i);
  return m;
}

PartialMap PartialMap::identity_on(int n, const std::vector<int>& domain) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(domain.size());
  for (int x : domain) pairs.emplace_back(x, x);
  return from_pairs(n, std::move(pairs));
}

PartialMap PartialMap::from_pairs(int n, std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  std::vector<char> target_seen(n, 0);
  int prev_src = -1;
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(Errc::invalid_argument, "partial map pair out of range");
    if (a == prev_src) fail(Errc::invalid_argument, "duplicate source in partial map");
    if (target_seen[b]) fail(Errc::invalid_argument, "duplicate target in partial map");
    target_seen[b] = 1;
    prev_src = a;
  }
  PartialMap m;
  m.n = n;
  m.pairs = std::move(pairs);
  return m;
}

std::optional<int> PartialMap::apply(int x) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(x, -1));
  if (it != pairs.end() && it->first == x) return it->second;
  return std::nullopt;
}

std::vector<int> PartialMap::domain() const {
  std::vector<int> out;
  out.reserve(pairs.size());
  for (auto [a, _] : pairs) out.push_back(a);
  return out;
}

std::vector<int> PartialMap::image() const {
  std::vector<int> out;
  out.reserve(pairs.size());
  for (auto [_, b] : pairs) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

PartialMap compose(const PartialMap& f, const PartialMap& g) {
  if (f.n != g.n) fail(Errc::ambient_mismatch, "composing maps over different carriers");
  std::vector<std::pair<int, int>> pairs;
  for (auto [x, y] : f.pairs)
    if (auto z = g.apply(y)) pairs.emplace_back(x, *z);
  PartialMap m;
  m.n = f.n;
  m.pairs = std::move(pairs); // f sorted by source, so the result is too
  return m;
}

PartialMap invert(const PartialMap& f) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(f.pairs.size());
  for (auto [a, b] : f.pairs) pairs.emplace_back(b, a);
  std::sort(pairs.begin(), pairs.end());
  PartialMap m;
  m.n = f.n;
  m.pairs = std::move(pairs);
  return m;
}

bool subset_of(const PartialMap& f, const PartialMap& g) {
  if (f.n != g.n) fail(Errc::ambient_mismatch, "comparing maps over different carriers");
  for (auto [a, b] : f.pairs) {
    auto v = g.apply(a);
    if (!v || *v != b) return false;
  }
  return true;
}

std::vector<PartialMap> closure(std::vector<PartialMap> generators, std::optional<size_t> limit) {
  size_t cap = limit.value_or(kDefaultClosureLimit);
  std::vector<PartialMap> elems;
  std::unordered_set<PartialMap, PartialMapHash> seen;
  std::deque<size_t> work;
  auto push = [&](PartialMap m) {
    if (seen.insert(m).second) {
      elems.push_back(std::move(m));
      if (elems.size() > cap)
        fail(Errc::limit_exceeded, "closure exceeded " + std::to_string(cap) + " elements");
      work.push_back(elems.size() - 1);
    }
  };
  for (auto& g : generators) push(std::move(g));
  while (!work.empty()) {
    size_t u = work.front();
    work.pop_front();
    push(invert(elems[u]));
    // note: elems grows while iterating; products with later entries are
    // handled when those entries are popped
    for (size_t v = 0; v < elems.size(); ++v) {
      push(compose(elems[u], elems[v]));
      push(compose(elems[v], elems[u]));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

FiniteSemigroup abstract_cayley(const std::vector<PartialMap>& closed) {
  std::vector<PartialMap> sorted = closed;
  std::sort(sorted.begin(), sorted.end());
  std::unordered_map<PartialMap, int, PartialMapHash> index;
  for (size_t i = 0; i < sorted.size(); ++i) index.emplace(sorted[i], static_cast<int>(i));
  int n = static_cast<int>(sorted.size());
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(compose(sorted[a], sorted[b]));
      if (it == index.end())
        fail(Errc::not_closed,
             "set not closed under composition at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      table[a * n + b] = it->second;
    }
  return validate(n, std::move(table));
}

std::string to_string(const PartialMap& m) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < m.pairs.size(); ++i) {
    if (i) os << ", ";
    os << m.pairs[i].first << "->" << m.pairs[i].second;
  }
  os << '}';
  return os.str();
}

} // namespace pia
