#include "pia/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "pia/errors.hpp"

namespace pia {

namespace {

// minimal union-find over 0..n-1
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

Partition canonicalize(int n, std::vector<std::vector<int>> blocks) {
  Partition p;
  p.n = n;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  p.blocks = std::move(blocks);
  p.block_index.assign(n, -1);
  for (size_t i = 0; i < p.blocks.size(); ++i)
    for (int x : p.blocks[i]) {
      if (x < 0 || x >= n || p.block_index[x] != -1)
        fail(Errc::invalid_argument, "blocks do not partition the carrier");
      p.block_index[x] = static_cast<int>(i);
    }
  for (int x = 0; x < n; ++x)
    if (p.block_index[x] == -1) fail(Errc::invalid_argument, "partition misses element " + std::to_string(x));
  return p;
}

} // namespace

Partition Partition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int i = 0; i < n; ++i) blocks.push_back({i});
  return canonicalize(n, std::move(blocks));
}

Partition Partition::whole(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return canonicalize(n, {std::move(all)});
}

Partition Partition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  return canonicalize(n, std::move(blocks));
}

Partition Partition::from_labels(int n, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != n) fail(Errc::invalid_argument, "label vector size mismatch");
  std::vector<std::pair<int, int>> order(n);
  for (int x = 0; x < n; ++x) order[x] = {labels[x], x};
  std::sort(order.begin(), order.end());
  std::vector<std::vector<int>> blocks;
  for (int k = 0; k < n; ++k) {
    if (k == 0 || order[k].first != order[k - 1].first) blocks.emplace_back();
    blocks.back().push_back(order[k].second);
  }
  return canonicalize(n, std::move(blocks));
}

Partition join(const Partition& a, const Partition& b) {
  if (a.n != b.n) fail(Errc::invalid_argument, "partition join over different carriers");
  UnionFind uf(a.n);
  for (const auto& blk : a.blocks)
    for (size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
  for (const auto& blk : b.blocks)
    for (size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
  std::vector<int> labels(a.n);
  for (int x = 0; x < a.n; ++x) labels[x] = uf.find(x);
  return Partition::from_labels(a.n, labels);
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.n != b.n) fail(Errc::invalid_argument, "partition meet over different carriers");
  std::vector<int> labels(a.n);
  for (int x = 0; x < a.n; ++x)
    labels[x] = a.block_of(x) * static_cast<int>(b.size()) + b.block_of(x);
  return Partition::from_labels(a.n, labels);
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.n != coarse.n) return false;
  for (const auto& blk : fine.blocks)
    for (size_t i = 1; i < blk.size(); ++i)
      if (!coarse.same_block(blk[0], blk[i])) return false;
  return true;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) os << " | ";
    for (size_t j = 0; j < p.blocks[i].size(); ++j) {
      if (j) os << ' ';
      os << p.blocks[i][j];
    }
  }
  return os.str();
}

PartitionBijection PartitionBijection::identity(const Partition& p) {
  PartitionBijection b;
  b.dom = p;
  b.im = p;
  b.map.resize(p.size());
  std::iota(b.map.begin(), b.map.end(), 0);
  return b;
}

PartitionBijection PartitionBijection::inverse() const {
  PartitionBijection inv;
  inv.dom = im;
  inv.im = dom;
  inv.map.assign(map.size(), -1);
  for (size_t i = 0; i < map.size(); ++i) inv.map[map[i]] = static_cast<int>(i);
  return inv;
}

PartitionBijection compose(const PartitionBijection& a, const PartitionBijection& b) {
  if (!(a.im == b.dom)) fail(Errc::invalid_argument, "partition bijections do not chain");
  PartitionBijection c;
  c.dom = a.dom;
  c.im = b.im;
  c.map.resize(a.map.size());
  for (size_t i = 0; i < a.map.size(); ++i) c.map[i] = b.map[a.map[i]];
  return c;
}

PartitionBijection bar_lift(const PartitionBijection& beta, const Partition& coarser) {
  if (!refines(beta.dom, coarser))
    fail(Errc::not_a_refinement, "lift target does not coarsen the domain partition");
  // image of a coarser block = union of the images of the dom-blocks inside it
  std::vector<std::vector<int>> im_blocks(coarser.size());
  for (size_t d = 0; d < beta.dom.size(); ++d) {
    int cb = coarser.block_of(beta.dom.blocks[d].front());
    const auto& target = beta.im.blocks[beta.map[d]];
    im_blocks[cb].insert(im_blocks[cb].end(), target.begin(), target.end());
  }
  Partition lifted_im = Partition::from_blocks(beta.im.n, im_blocks);
  PartitionBijection out;
  out.dom = coarser;
  out.im = lifted_im;
  out.map.resize(coarser.size());
  for (size_t c = 0; c < coarser.size(); ++c)
    out.map[c] = lifted_im.block_of(im_blocks[c].front());
  return out;
}

} // namespace pia
