// Partial bijections of a finite carrier: composition, inversion, containment,
// inverse-monoid closure and export as an abstract Cayley table.
#ifndef PIA_PARTIAL_MAP_HPP
#define PIA_PARTIAL_MAP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pia/semigroup.hpp"

namespace pia {

struct PartialMap {
  int n = 0;                               // ambient carrier size
  std::vector<std::pair<int, int>> pairs;  // (source, target), sorted by source

  static PartialMap empty(int n) { return PartialMap{n, {}}; }
  static PartialMap identity(int n);
  static PartialMap identity_on(int n, const std::vector<int>& domain);
  // canonicalizes and checks injectivity / ranges
  static PartialMap from_pairs(int n, std::vector<std::pair<int, int>> pairs);

  std::optional<int> apply(int x) const;
  std::vector<int> domain() const;
  std::vector<int> image() const;
  size_t size() const { return pairs.size(); }

  bool operator==(const PartialMap& o) const { return n == o.n && pairs == o.pairs; }
  bool operator<(const PartialMap& o) const {
    return pairs != o.pairs ? pairs < o.pairs : n < o.n;
  }
};

struct PartialMapHash {
  size_t operator()(const PartialMap& m) const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(m.n));
    for (auto [a, b] : m.pairs) {
      mix(static_cast<uint64_t>(a) + 1);
      mix(static_cast<uint64_t>(b) + 1);
    }
    return static_cast<size_t>(h);
  }
};

// left-to-right: x(fg) defined iff xf and (xf)g are
PartialMap compose(const PartialMap& f, const PartialMap& g);
PartialMap invert(const PartialMap& f);
bool subset_of(const PartialMap& f, const PartialMap& g);

// Smallest set containing the generators and closed under compose and invert.
// Output is sorted (deterministic, independent of generator order). Throws
// limit_exceeded when the closure grows past the cap.
inline constexpr size_t kDefaultClosureLimit = 1000000;
std::vector<PartialMap> closure(std::vector<PartialMap> generators,
                                std::optional<size_t> limit = std::nullopt);

// Cayley table of a compose-closed set on its sorted indices.
FiniteSemigroup abstract_cayley(const std::vector<PartialMap>& closed);

// text form: "{0->1, 2->0}", "{}" when empty
std::string to_string(const PartialMap& m);

} // namespace pia

#endif
