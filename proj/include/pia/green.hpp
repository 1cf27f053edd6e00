// Green's relations from principal ideal equality.
#ifndef PIA_GREEN_HPP
#define PIA_GREEN_HPP

#include "pia/partition.hpp"
#include "pia/semigroup.hpp"

namespace pia {

struct GreenData {
  Partition l, r, h, d, j;
  std::vector<bool> group_h; // per h-block: contains an idempotent
};

// L via S^1 a equality, R dually, H = L meet R, D = L join R, J via two-sided
// ideals. On finite carriers D == J; green() checks this.
GreenData green(const FiniteSemigroup& s);

} // namespace pia

#endif
