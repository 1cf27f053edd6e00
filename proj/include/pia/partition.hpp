// Canonical set partitions of {0..n-1}, joins/meets, and bijections between
// partitions with the induced lift to coarser partitions.
#ifndef PIA_PARTITION_HPP
#define PIA_PARTITION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace pia {

// Blocks are sorted internally and ordered by minimum element, so equal
// partitions compare equal and can be hashed via their serialization.
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_index; // element -> position of its block

  static Partition singletons(int n);
  static Partition whole(int n);
  static Partition from_blocks(int n, std::vector<std::vector<int>> blocks);
  // labels[x] == labels[y] iff x,y share a block (labels are arbitrary ints)
  static Partition from_labels(int n, const std::vector<int>& labels);

  int block_of(int x) const { return block_index[x]; }
  size_t size() const { return blocks.size(); }
  bool same_block(int x, int y) const { return block_index[x] == block_index[y]; }

  bool operator==(const Partition& other) const {
    return n == other.n && blocks == other.blocks;
  }
  bool operator<(const Partition& other) const { return blocks < other.blocks; }
};

Partition join(const Partition& a, const Partition& b);
Partition meet(const Partition& a, const Partition& b);
// every block of fine lies inside a block of coarse
bool refines(const Partition& fine, const Partition& coarse);

// text form: "0 1 | 2 | 3"
std::string to_string(const Partition& p);

// Bijection between two partitions of the same carrier, as a block-index map.
struct PartitionBijection {
  Partition dom;
  Partition im;
  std::vector<int> map; // dom block -> im block, bijective

  static PartitionBijection identity(const Partition& p);

  int image_block(int dom_block) const { return map[dom_block]; }
  PartitionBijection inverse() const;

  bool operator==(const PartitionBijection& other) const {
    return dom == other.dom && im == other.im && map == other.map;
  }
};

PartitionBijection compose(const PartitionBijection& a, const PartitionBijection& b);

// Lift beta to a coarsening of its domain: the block formed by a union of
// dom-blocks maps to the union of their images. Throws not_a_refinement if
// coarser does not coarsen beta.dom.
PartitionBijection bar_lift(const PartitionBijection& beta, const Partition& coarser);

} // namespace pia

#endif
