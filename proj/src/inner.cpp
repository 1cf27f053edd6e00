#include "pia/inner.hpp"

#include <algorithm>
#include <map>

namespace pia {

std::vector<int> domain_dgh(const SemigroupWithOne& s, int g, int h) {
  int gh = s.s1.at(g, h);
  std::vector<int> out;
  for (int a = 0; a < s.base.n; ++a)
    if (s.s1.at(gh, a) == a && s.s1.at(a, gh) == a) out.push_back(a);
  return out;
}

InnGenerator phi(const SemigroupWithOne& s, int g, int h) {
  InnGenerator out;
  out.g = g;
  out.h = h;
  out.domain = domain_dgh(s, g, h);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(out.domain.size());
  for (int a : out.domain) pairs.emplace_back(a, s.s1.at(s.s1.at(h, a), g));
  out.map = PartialMap::from_pairs(s.base.n, std::move(pairs));
  return out;
}

InnGenerators inn_generators(const SemigroupWithOne& s) {
  std::map<PartialMap, std::vector<std::pair<int, int>>> dedup;
  for (int g = 0; g < s.s1.n; ++g)
    for (int h = 0; h < s.s1.n; ++h) {
      InnGenerator gen = phi(s, g, h);
      dedup[std::move(gen.map)].emplace_back(g, h);
    }
  InnGenerators out;
  out.maps.reserve(dedup.size());
  for (auto& [m, prov] : dedup) {
    out.maps.push_back(m);
    out.provenance.push_back(std::move(prov));
  }
  return out;
}

std::vector<PartialMap> inn(const SemigroupWithOne& s, std::optional<size_t> limit) {
  return closure(inn_generators(s).maps, limit);
}

std::pair<int, int> reduce_conjugators(const SemigroupWithOne& s, int g, int h) {
  int gh = s.s1.at(g, h);
  OmegaData w = omega_data(s.s1, gh);
  int gbar = s.s1.at(w.omega, g);
  int hbar = s.s1.at(h, w.pseudo_inverse);
  return {gbar, hbar};
}

} // namespace pia
