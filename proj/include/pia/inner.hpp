// Partial inner automorphisms: domains D_{g,h}, the maps a -> hag, the
// generated inverse monoid, and the mutually-inverse conjugator reduction.
#ifndef PIA_INNER_HPP
#define PIA_INNER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pia/partial_map.hpp"
#include "pia/semigroup.hpp"

namespace pia {

struct InnGenerator {
  int g;                   // index in S^1
  int h;                   // index in S^1
  PartialMap map;          // a -> hag on domain, ambient = |S|
  std::vector<int> domain; // D_{g,h}, sorted
};

// D_{g,h} = { a in S : gh.a = a.gh = a }; g,h range over S^1, a over S.
std::vector<int> domain_dgh(const SemigroupWithOne& s, int g, int h);

InnGenerator phi(const SemigroupWithOne& s, int g, int h);

// Distinct generator maps with their (g,h) provenance, ordered by map.
struct InnGenerators {
  std::vector<PartialMap> maps;
  std::vector<std::vector<std::pair<int, int>>> provenance; // parallel to maps
};
InnGenerators inn_generators(const SemigroupWithOne& s);

// Closure of all phi maps; sorted, deterministic.
std::vector<PartialMap> inn(const SemigroupWithOne& s,
                            std::optional<size_t> limit = std::nullopt);

// Mutually inverse pair (gbar, hbar) = ((gh)^w g, h (gh)') whose map contains
// phi_{g,h}.
std::pair<int, int> reduce_conjugators(const SemigroupWithOne& s, int g, int h);

} // namespace pia

#endif
