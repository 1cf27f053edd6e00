// Finite semigroups by dense Cayley table: validation, identity adjunction,
// natural/H-preorders and omega-power arithmetic.
#ifndef PIA_SEMIGROUP_HPP
#define PIA_SEMIGROUP_HPP

#include <optional>
#include <string>
#include <vector>

namespace pia {

struct FiniteSemigroup {
  int n = 0;
  std::vector<int> table; // row-major, entry (a,b) = product ab
  std::optional<int> identity;
  std::vector<std::string> labels; // empty or size n

  int at(int a, int b) const { return table[a * n + b]; }
  std::string label(int x) const {
    return labels.empty() ? std::to_string(x) : labels[x];
  }
  bool operator==(const FiniteSemigroup& o) const { return n == o.n && table == o.table; }
};

// Checks entries and associativity exhaustively, detects an identity.
FiniteSemigroup validate(int n, std::vector<int> table, std::vector<std::string> labels = {});

// S itself when it has an identity, else S with one new top index acting as 1.
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);

std::vector<int> idempotents(const FiniteSemigroup& s);

// a^k for k >= 1
int power(const FiniteSemigroup& s, int a, int k);

// natural partial order: exist s,t in S^1 with sa=a=at and sb=a=bt
bool natural_leq(const FiniteSemigroup& s, int a, int b);
// H-preorder: exist s,t in S^1 with sb=a=bt
bool h_preorder_leq(const FiniteSemigroup& s, int a, int b);

struct OmegaData {
  int omega;          // the idempotent power of a
  int omega_plus_one; // a * a^omega
  int pseudo_inverse; // inverse of a^(omega+1) in the cyclic group with identity a^omega
};
OmegaData omega_data(const FiniteSemigroup& s, int a);

// S with its monoidization materialized; `one` indexes the identity of s1.
// Original element indices are preserved in s1.
struct SemigroupWithOne {
  FiniteSemigroup base;
  FiniteSemigroup s1;
  int one = -1;
  bool adjoined = false;

  explicit SemigroupWithOne(FiniteSemigroup s);
  // scan order for witness searches: identity first, then index order
  std::vector<int> scan_order() const;
};

// unique inverse per element when S is an inverse semigroup, else nullopt
std::optional<std::vector<int>> inverse_vector(const FiniteSemigroup& s);

// centralizer of a in S
std::vector<int> centralizer(const FiniteSemigroup& s, int a);

} // namespace pia

#endif
