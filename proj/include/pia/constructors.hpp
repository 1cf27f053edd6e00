// Builders for the example semigroups and families: Rees matrix semigroups,
// full transformation monoids, symmetric inverse monoids, left-zero
// semigroups, cyclic/symmetric groups, and the two fixed example tables.
#ifndef PIA_CONSTRUCTORS_HPP
#define PIA_CONSTRUCTORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pia/inner.hpp"
#include "pia/semigroup.hpp"

namespace pia {

// Rees matrix semigroup data: group Gamma, index sets I and Lambda, and the
// Lambda x I sandwich matrix of Gamma-indices.
struct ReesSpec {
  FiniteSemigroup group;
  int i_size = 0;
  int lambda_size = 0;
  std::vector<std::vector<int>> sandwich; // sandwich[lambda][i]

  int carrier_size() const { return i_size * group.n * lambda_size; }
  // (i, gamma, lambda) <-> carrier index, lexicographic in that order
  int encode(int i, int gamma, int lambda) const {
    return (i * group.n + gamma) * lambda_size + lambda;
  }
  struct Triple {
    int i, gamma, lambda;
  };
  Triple decode(int code) const {
    Triple t;
    t.lambda = code % lambda_size;
    code /= lambda_size;
    t.gamma = code % group.n;
    t.i = code / group.n;
    return t;
  }
  int p(int lambda, int i) const { return sandwich[lambda][i]; }
  int group_inverse(int g) const;
};

// checks the group axioms and sandwich ranges
ReesSpec make_rees_spec(FiniteSemigroup group, int i_size, int lambda_size,
                        std::vector<std::vector<int>> sandwich);

// product (i,a,l)(j,b,m) = (i, a p_{l,j} b, m)
FiniteSemigroup rees_matrix(const ReesSpec& spec);

// D_{a,b} nonempty iff b's group part equals (p_{eta,G} g p_{gamma,H})^-1
bool rees_domain_nonempty(const ReesSpec& spec, ReesSpec::Triple a, ReesSpec::Triple b);

// The structural generator family: for each g in Gamma, G,H in I and
// gamma,eta in Lambda, the map {G} x Gamma x {eta} -> {H} x Gamma x {gamma},
// (G,a,eta) -> (H, (g p_{gamma,H})^-1 a (p_{eta,G} g), gamma).
std::vector<InnGenerator> rees_generators(const ReesSpec& spec);

struct TransformationCodec {
  int x_size = 0;
  int encode(const std::vector<int>& f) const; // base-|X|, f(0) least significant
  std::vector<int> decode(int code) const;
  int monoid_size() const;
};

// T(X) with its codec; products are left-to-right composition. x_size <= 4.
std::pair<FiniteSemigroup, TransformationCodec> full_transformation_monoid(int x_size);

// the two tables used as running examples, exactly as printed
FiniteSemigroup clifford8();
FiniteSemigroup strict4();

FiniteSemigroup left_zero(int k);
FiniteSemigroup cyclic_group(int k);
FiniteSemigroup symmetric_group(int k);    // permutations of k points, k <= 4
FiniteSemigroup null_semigroup(int k);     // all products equal 0
FiniteSemigroup chain_semilattice(int k);  // min(a, b)

// all partial injections on k points as an abstract monoid, k <= 4;
// also returns the maps in carrier order
std::pair<FiniteSemigroup, std::vector<PartialMap>> symmetric_inverse_monoid(int k);

// catalog names: clifford8, strict4, leftzero:k, cyclic:k, T:k, I:k
std::optional<FiniteSemigroup> catalog_lookup(const std::string& name);

} // namespace pia

#endif
