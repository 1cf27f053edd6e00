// Natural conjugacy: witnesses, classes, and the per-conjugator pair sets.
#ifndef PIA_CONJUGACY_HPP
#define PIA_CONJUGACY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pia/partition.hpp"
#include "pia/semigroup.hpp"

namespace pia {

// Conjugator pair in S^1; once the defining equations hold, all eight
// conjugation conditions do.
struct ConjugacyWitness {
  int g;
  int h;
};

// The eight conjugation conditions for (a, b, g, h), all over S^1:
//   ag=gb, bh=ha, hag=b, gbh=a, hg.b=b, gh.a=a, b.hg=b, a.gh=a
// cond(k) evaluates the k-th (0-based) condition.
bool conjugation_condition(const FiniteSemigroup& s1, int k, int a, int b, int g, int h);

// First witness in lexicographic (g,h) order with the identity scanned first.
std::optional<ConjugacyWitness> conjugators(const SemigroupWithOne& s, int a, int b);

// Partition of the carrier into natural-conjugacy classes.
Partition conjugacy_classes(const SemigroupWithOne& s);

// K_{g,h}: all (a,b) witnessed by this exact conjugator pair. |K| <= n since
// b is forced to hag.
std::vector<std::pair<int, int>> k_pairs(const SemigroupWithOne& s, int g, int h);

} // namespace pia

#endif
