// Finite abelian G-sets: equivariant endomorphism enumeration, stabilizer
// machinery, standard pairs with the block-merge normalization, tau generator
// tuples, and the G-compatible pair calculus.
#ifndef PIA_GSET_HPP
#define PIA_GSET_HPP

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pia/partition.hpp"
#include "pia/semigroup.hpp"
#include "pia/tx_structure.hpp"

namespace pia {

struct GSet {
  FiniteSemigroup group; // abelian group with identity
  int x_size = 0;
  std::vector<int> action; // |G| x |X| row-major

  int act(int k, int x) const { return action[k * x_size + x]; }
  std::vector<int> act_set(int k, const std::vector<int>& xs) const;

  // caches filled by make_gset
  Partition orbits;
  std::vector<std::vector<int>> point_stab; // per point, sorted subgroup
};

GSet make_gset(FiniteSemigroup group, int x_size, std::vector<int> action);

GSet trivial_gset(int x_size);
// the order-2 group swapping points 0,1 and fixing 2,3
GSet z2_swap_gset();
// the order-2 group swapping two disjoint pairs; no fully fixed points
GSet z2_two_swaps_gset();
// the order-4 cyclic group acting through its parity quotient on one pair,
// fixing two points; stabilizers form a three-step chain
GSet z4_folded_gset();

// subgroup helpers (subgroups as sorted element vectors)
bool subgroup_leq(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> subgroup_generated(const FiniteSemigroup& group, std::vector<int> gens);
std::vector<int> setwise_stabilizer(const GSet& gs, const std::vector<int>& block);

struct StabilizerData {
  std::vector<std::vector<int>> point;                        // G_x per point
  Partition orbits;                                           // G-orbits on X
  std::vector<std::vector<int>> orbit_stab;                   // per orbit block
  std::vector<std::vector<int>> block_setwise;                // G_B per partition block
  std::vector<std::optional<std::vector<int>>> block_max;     // G^B when the block is non-null
  std::vector<std::vector<int>> block_gprime;                 // G'_B relative to I
};

// p and i optional: block data is empty without p, G'_B data empty without i
StabilizerData stabilizers(const GSet& gs, const std::optional<Partition>& p = std::nullopt,
                           const std::optional<std::vector<int>>& i = std::nullopt);

struct EndGData {
  TransformationCodec codec;
  std::vector<std::vector<int>> maps; // sorted by code
  FiniteSemigroup monoid;             // left-to-right composition table
  std::unordered_map<int, int> code_index;

  int index_of(const std::vector<int>& f) const;
};

// all equivariant self-maps; products left-to-right (the right-to-left
// convention of group-action composition is flipped exactly here)
EndGData end_g(const GSet& gs);

struct StandardPair {
  Partition p;
  std::vector<int> i;
  bool is_accessible = false;
  bool is_standard = false;
  bool is_valid = false;
  std::optional<int> sink;

  bool operator==(const StandardPair& o) const { return p == o.p && i == o.i; }
  bool operator<(const StandardPair& o) const {
    return p == o.p ? i < o.i : p < o.p;
  }
};

// every block can map into i stabilizer-compatibly
bool accessible(const GSet& gs, const Partition& p, const std::vector<int>& i);
bool is_g_invariant(const GSet& gs, const Partition& p);
// the unique i with full stabilizer, when unique
std::optional<int> find_sink(const GSet& gs, const std::vector<int>& i);

// raw descriptors of (g then h) and (h then g); theory conditions checked
// separately via tau_conditions
std::pair<StandardPair, StandardPair> tau_descriptor(const GSet& gs, const std::vector<int>& g,
                                                     const std::vector<int>& h);

// conditions on a raw descriptor: partial section per block / stabilizer
// domination inside blocks / forced membership of dominating points /
// cyclic G_B/G^B quotients
std::array<bool, 4> tau_conditions(const GSet& gs, const Partition& p, const std::vector<int>& i);

// the extended bar operator: inaccessible input collapses to ({X}, {}),
// otherwise blocks merge along G'_B translates and the sink rule
StandardPair standardize(const GSet& gs, const Partition& p, const std::vector<int>& i);

bool is_valid_standard_pair(const GSet& gs, const StandardPair& sp);

// all endomorphisms with image inside i and kernel refined by p
std::vector<int> endg_domain(const GSet& gs, const EndGData& endg, const Partition& p,
                             const std::vector<int>& i);

// alpha = g restricted to the fixed set, beta the induced block bijection on
// the standard pairs; degenerate inputs produce small-domain normal forms
GeneratorTuple tau_generator_tuple(const GSet& gs, const std::vector<int>& g,
                                   const std::vector<int>& h);

// G-compatible pair calculus: normal form via the bar operator, composition
// via join/intersection then normalization
WElement gw_normalize(const GSet& gs, WElement w);
WElement gw_compose(const GSet& gs, const WElement& a, const WElement& b);
WElement gw_invert(const GSet& gs, const WElement& w);

} // namespace pia

#endif
