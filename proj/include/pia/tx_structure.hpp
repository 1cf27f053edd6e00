// Structure theory for Inn(T(X)): domain descriptors (P,I), generator tuples,
// the (alpha,beta) pair calculus with partition joins and bar-lifts, the
// finite membership test, and the embedding oracle used to cross-check the
// brute-force closure.
#ifndef PIA_TX_STRUCTURE_HPP
#define PIA_TX_STRUCTURE_HPP

#include <vector>

#include "pia/constructors.hpp"
#include "pia/partial_map.hpp"
#include "pia/partition.hpp"

namespace pia {

// domain descriptor: transformations t with im t inside i and p inside ker t
struct TxDescriptor {
  Partition p;
  std::vector<int> i; // sorted

  bool operator==(const TxDescriptor& o) const { return p == o.p && i == o.i; }
};

// fixed points and weak function-graph components of a transformation
TxDescriptor descriptor_of_product(const std::vector<int>& p);
// descriptors of (g then h) and (h then g)
std::pair<TxDescriptor, TxDescriptor> descriptor_from_pair(const std::vector<int>& g,
                                                           const std::vector<int>& h);
// all transformations in the descriptor's domain, deterministic order
std::vector<std::vector<int>> descriptor_domain(const TxDescriptor& d);

// classification data of a generator acting on more than one transformation
struct GeneratorTuple {
  Partition p, p_prime;
  std::vector<int> i, i_prime;
  PartialMap alpha;        // bijection i -> i_prime
  PartitionBijection beta; // p -> p_prime, extends the block map induced by alpha
};

// throws small_domain when |I| <= 1
GeneratorTuple generator_tuple(const std::vector<int>& g, const std::vector<int>& h);

// theta-class representative of a compatible (alpha, beta) pair; when
// |dom alpha| <= 1 the canonical beta is the identity on {{X}}
struct WElement {
  int n = 0;
  PartialMap alpha;
  PartitionBijection beta;

  bool operator==(const WElement& o) const {
    return n == o.n && alpha == o.alpha && beta == o.beta;
  }
  bool operator<(const WElement& o) const;
};

bool w_compatible(const WElement& w); // [i]_P beta = [i alpha]_P' for all i
WElement w_identity(int n);
WElement w_empty(int n);
WElement w_of_tuple(const GeneratorTuple& t);
WElement w_normalize(WElement w);

// join/intersection composition, without / with theta normalization
WElement w_compose_raw(const WElement& a, const WElement& b);
WElement w_compose(const WElement& a, const WElement& b);

// membership of a normalized element in the image of Inn(T(X))
bool finite_membership(const WElement& w, int x_size);

// action on a transformation of the descriptor domain; throws not_in_domain
std::vector<int> apply_w(const WElement& w, const std::vector<int>& t);

// Independent derivation of the (alpha, beta) data from a concrete partial
// map on transformation codes: alpha from constants, the domain partition as
// the meet of kernels, beta from indicator transformations. Validates that
// the map's domain and image have descriptor form.
WElement embed_transformation_map(const PartialMap& m, const TransformationCodec& codec);

// all partitions of {0..n-1}; all normalized W elements over n (n <= 4)
std::vector<Partition> all_partitions(int n);
std::vector<WElement> enumerate_w(int n);

std::string to_string(const WElement& w);

} // namespace pia

#endif
