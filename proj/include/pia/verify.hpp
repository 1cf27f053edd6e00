// Property suites cross-validating the structural results against brute-force
// computation, plus the deterministic test corpus they run over.
#ifndef PIA_VERIFY_HPP
#define PIA_VERIFY_HPP

#include <string>
#include <vector>

#include "pia/constructors.hpp"
#include "pia/gset.hpp"
#include "pia/semigroup.hpp"

namespace pia {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  void add(const std::string& name, bool pass, const std::string& detail = "");
  int failures() const;
};

struct CorpusEntry {
  std::string name;
  FiniteSemigroup s;
};

// named constructions used as test subjects everywhere
std::vector<CorpusEntry> catalog_corpus();
// exhaustive tables of order <= 3 plus seeded-random validated order-4 tables
std::vector<CorpusEntry> random_corpus(int max_order);

// exhaustive bijection search
bool tables_isomorphic(const FiniteSemigroup& a, const FiniteSemigroup& b);

// conjugacy laws: the sixteen equation sets, pair-set closure, powers,
// conjugacy inside D, idempotent classes and witnesses, H/conjugacy commuting
SuiteReport verify_conjugacy_suite(const std::vector<CorpusEntry>& corpus);

// partial inner automorphism laws: domain facts, isomorphism and H-class
// bijections, composition inclusion with strictness witness, pseudo-inverse
// identities, conjugator reduction
SuiteReport verify_inner_suite(const std::vector<CorpusEntry>& corpus, int quadruple_max_order);

// Rees structure: forced-inverse emptiness rule, generator family vs direct
// phi maps, closure of the family vs the full monoid
SuiteReport verify_rees_suite(const std::string& name, const ReesSpec& spec);
std::vector<std::pair<std::string, ReesSpec>> default_rees_examples();

// transformation monoid structure: descriptors, generator tuples, the pair
// calculus vs the brute-force closure, finite membership census
SuiteReport verify_tx_suite(int n, bool full_closure);

// G-set structure: equivariant enumeration, tau descriptors and conditions,
// standardization, valid-pair bijection, tuple action, embedded pair calculus
SuiteReport verify_gset_suite(const std::string& name, const GSet& gs);

// trivial-group collapse onto the plain transformation-monoid results
SuiteReport verify_gset_trivial_regression(int max_n);

// concrete example facts (fixed tables, groups, left-zero, inverse monoids)
SuiteReport verify_examples_suite();

struct VerifyOptions {
  int max_order = 4;  // corpus bound for the conjugacy suite
  int inner_max_order = 5;  // quadruple bound for the composition inclusion scan
  int tx_max = 4;
  bool tx_full = false;
};
std::vector<SuiteReport> verify_all(const VerifyOptions& opts);

} // namespace pia

#endif
