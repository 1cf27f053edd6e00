#include "pia/tx_structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pia/errors.hpp"

namespace pia {

namespace {

std::vector<int> set_union_sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<int> compose_lr(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (size_t x = 0; x < f.size(); ++x) out[x] = g[f[x]];
  return out;
}

Partition kernel_of(const std::vector<int>& t) {
  return Partition::from_labels(static_cast<int>(t.size()), t);
}

} // namespace

TxDescriptor descriptor_of_product(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  TxDescriptor d;
  for (int x = 0; x < n; ++x)
    if (p[x] == x) d.i.push_back(x);
  // weak components of the function graph x -> p(x)
  std::vector<int> root(n);
  for (int x = 0; x < n; ++x) root[x] = x;
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int x = 0; x < n; ++x) {
    int a = find(x), b = find(p[x]);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> labels(n);
  for (int x = 0; x < n; ++x) labels[x] = find(x);
  d.p = Partition::from_labels(n, labels);
  return d;
}

std::pair<TxDescriptor, TxDescriptor> descriptor_from_pair(const std::vector<int>& g,
                                                           const std::vector<int>& h) {
  if (g.size() != h.size()) fail(Errc::invalid_argument, "transformations over different carriers");
  return {descriptor_of_product(compose_lr(g, h)), descriptor_of_product(compose_lr(h, g))};
}

std::vector<std::vector<int>> descriptor_domain(const TxDescriptor& d) {
  std::vector<std::vector<int>> out;
  if (d.i.empty()) return out;
  size_t blocks = d.p.size();
  std::vector<size_t> choice(blocks, 0);
  while (true) {
    std::vector<int> t(d.p.n);
    for (size_t b = 0; b < blocks; ++b)
      for (int x : d.p.blocks[b]) t[x] = d.i[choice[b]];
    out.push_back(std::move(t));
    size_t b = 0;
    for (; b < blocks; ++b) {
      if (++choice[b] < d.i.size()) break;
      choice[b] = 0;
    }
    if (b == blocks) break;
  }
  return out;
}

GeneratorTuple generator_tuple(const std::vector<int>& g, const std::vector<int>& h) {
  auto [d, d2] = descriptor_from_pair(g, h);
  if (d.i.size() <= 1)
    fail(Errc::small_domain, "generator tuple requires at least two fixed points");
  GeneratorTuple t;
  t.p = d.p;
  t.i = d.i;
  t.p_prime = d2.p;
  t.i_prime = d2.i;
  std::vector<std::pair<int, int>> apairs;
  for (int i : d.i) {
    if (!contains(d2.i, g[i])) fail(Errc::invalid_argument, "restriction of g leaves the fixed set");
    apairs.emplace_back(i, g[i]);
  }
  t.alpha = PartialMap::from_pairs(d.p.n, std::move(apairs));
  if (t.i.size() != t.i_prime.size() || t.p.size() != t.p_prime.size())
    fail(Errc::invalid_argument, "descriptor sizes disagree");
  t.beta.dom = t.p;
  t.beta.im = t.p_prime;
  t.beta.map.assign(t.p.size(), -1);
  for (size_t b = 0; b < t.p.size(); ++b) {
    int target = -1;
    for (int x : t.p.blocks[b]) {
      int tb = t.p_prime.block_of(g[x]);
      if (target == -1) target = tb;
      if (tb != target) fail(Errc::invalid_argument, "block image under g is not well-defined");
    }
    t.beta.map[b] = target;
  }
  std::vector<char> hit(t.p_prime.size(), 0);
  for (int v : t.beta.map) {
    if (hit[v]) fail(Errc::invalid_argument, "block map is not injective");
    hit[v] = 1;
  }
  return t;
}

bool WElement::operator<(const WElement& o) const {
  if (alpha != o.alpha) return alpha < o.alpha;
  if (!(beta.dom == o.beta.dom)) return beta.dom < o.beta.dom;
  if (!(beta.im == o.beta.im)) return beta.im < o.beta.im;
  return beta.map < o.beta.map;
}

bool w_compatible(const WElement& w) {
  for (auto [i, j] : w.alpha.pairs) {
    int b = w.beta.dom.block_of(i);
    if (w.beta.map[b] != w.beta.im.block_of(j)) return false;
  }
  return true;
}

WElement w_identity(int n) {
  WElement w;
  w.n = n;
  w.alpha = PartialMap::identity(n);
  w.beta = PartitionBijection::identity(Partition::singletons(n));
  return w;
}

WElement w_empty(int n) {
  WElement w;
  w.n = n;
  w.alpha = PartialMap::empty(n);
  w.beta = PartitionBijection::identity(Partition::whole(n));
  return w;
}

WElement w_of_tuple(const GeneratorTuple& t) {
  WElement w;
  w.n = t.p.n;
  w.alpha = t.alpha;
  w.beta = t.beta;
  return w;
}

WElement w_normalize(WElement w) {
  if (w.alpha.size() <= 1)
    w.beta = PartitionBijection::identity(Partition::whole(w.n));
  return w;
}

WElement w_compose_raw(const WElement& a, const WElement& b) {
  if (a.n != b.n) fail(Errc::ambient_mismatch, "composing W elements over different carriers");
  Partition j = join(a.beta.im, b.beta.dom);
  PartitionBijection lift_back = bar_lift(a.beta.inverse(), j); // j -> coarsening of dom a
  PartitionBijection lift_fwd = bar_lift(b.beta, j);            // j -> coarsening of im b
  WElement out;
  out.n = a.n;
  out.alpha = compose(a.alpha, b.alpha);
  out.beta = compose(lift_back.inverse(), lift_fwd);
  return out;
}

WElement w_compose(const WElement& a, const WElement& b) {
  return w_normalize(w_compose_raw(a, b));
}

bool finite_membership(const WElement& w, int x_size) {
  size_t dom_size = w.alpha.size();
  if (dom_size <= 1) return !(x_size == 1 && dom_size == 0);
  bool total_on_singletons = static_cast<int>(dom_size) == x_size &&
                             w.beta.dom == Partition::singletons(x_size);
  if (total_on_singletons) return true;
  std::vector<int> dom = w.alpha.domain();
  for (const auto& block : w.beta.dom.blocks) {
    if (block.size() < 2) continue;
    bool inside = true;
    for (int x : block) inside = inside && contains(dom, x);
    if (!inside) return true;
  }
  return false;
}

std::vector<int> apply_w(const WElement& w, const std::vector<int>& t) {
  int n = w.n;
  if (static_cast<int>(t.size()) != n) fail(Errc::ambient_mismatch, "transformation carrier mismatch");
  std::vector<int> dom = w.alpha.domain();
  for (int x = 0; x < n; ++x)
    if (!contains(dom, t[x])) fail(Errc::not_in_domain, "image leaves the fixed set");
  for (const auto& block : w.beta.dom.blocks)
    for (int x : block)
      if (t[x] != t[block.front()]) fail(Errc::not_in_domain, "kernel does not refine the descriptor partition");
  PartitionBijection inv = w.beta.inverse();
  std::vector<int> out(n);
  for (int x = 0; x < n; ++x) {
    int pre_block = inv.map[w.beta.im.block_of(x)];
    int i = t[w.beta.dom.blocks[pre_block].front()];
    out[x] = *w.alpha.apply(i);
  }
  return out;
}

WElement embed_transformation_map(const PartialMap& m, const TransformationCodec& codec) {
  int n = codec.x_size;
  if (m.pairs.empty()) return w_empty(n);

  std::vector<std::vector<int>> dom_ts, im_ts;
  for (auto [a, b] : m.pairs) {
    dom_ts.push_back(codec.decode(a));
    im_ts.push_back(codec.decode(b));
  }
  auto images_union = [](const std::vector<std::vector<int>>& ts) {
    std::vector<int> out;
    for (const auto& t : ts) out.insert(out.end(), t.begin(), t.end());
    return set_union_sorted(std::move(out));
  };
  std::vector<int> i_set = images_union(dom_ts);
  std::vector<int> i_prime = images_union(im_ts);

  if (m.pairs.size() == 1) {
    // a map acting on one transformation sends a constant to a constant
    if (i_set.size() != 1 || i_prime.size() != 1)
      fail(Errc::invalid_argument, "singleton domain is not a constant-to-constant map");
    WElement w;
    w.n = n;
    w.alpha = PartialMap::from_pairs(n, {{i_set[0], i_prime[0]}});
    w.beta = PartitionBijection::identity(Partition::whole(n));
    return w;
  }

  Partition p = kernel_of(dom_ts[0]);
  for (size_t k = 1; k < dom_ts.size(); ++k) p = meet(p, kernel_of(dom_ts[k]));
  Partition p_prime = kernel_of(im_ts[0]);
  for (size_t k = 1; k < im_ts.size(); ++k) p_prime = meet(p_prime, kernel_of(im_ts[k]));

  // the domain must be exactly the descriptor set of (p, i_set)
  TxDescriptor d{p, i_set};
  auto expect = descriptor_domain(d);
  if (expect.size() != m.pairs.size())
    fail(Errc::invalid_argument, "domain is not of descriptor form");
  std::set<int> dom_codes;
  for (auto [a, _] : m.pairs) dom_codes.insert(a);
  for (const auto& t : expect)
    if (!dom_codes.count(codec.encode(t)))
      fail(Errc::invalid_argument, "domain is not of descriptor form");

  // alpha from the constant transformations
  std::vector<std::pair<int, int>> apairs;
  for (int i : i_set) {
    std::vector<int> ci(n, i);
    auto v = m.apply(codec.encode(ci));
    if (!v) fail(Errc::invalid_argument, "constant transformation missing from the domain");
    std::vector<int> u = codec.decode(*v);
    for (int x = 1; x < n; ++x)
      if (u[x] != u[0]) fail(Errc::invalid_argument, "constant does not map to a constant");
    apairs.emplace_back(i, u[0]);
  }
  PartialMap alpha = PartialMap::from_pairs(n, std::move(apairs));

  // beta from indicator transformations B -> i0, elsewhere j0
  int i0 = i_set[0], j0 = i_set[1];
  int a_i0 = *alpha.apply(i0);
  PartitionBijection beta;
  beta.dom = p;
  beta.im = p_prime;
  beta.map.assign(p.size(), -1);
  for (size_t b = 0; b < p.size(); ++b) {
    std::vector<int> tb(n, j0);
    for (int x : p.blocks[b]) tb[x] = i0;
    auto v = m.apply(codec.encode(tb));
    if (!v) fail(Errc::invalid_argument, "indicator transformation missing from the domain");
    std::vector<int> u = codec.decode(*v);
    std::vector<int> target;
    for (int x = 0; x < n; ++x)
      if (u[x] == a_i0) target.push_back(x);
    int tb_idx = p_prime.block_of(target.front());
    if (p_prime.blocks[tb_idx] != target)
      fail(Errc::invalid_argument, "indicator image is not a block of the image partition");
    beta.map[b] = tb_idx;
  }
  WElement w;
  w.n = n;
  w.alpha = std::move(alpha);
  w.beta = std::move(beta);
  if (!w_compatible(w)) fail(Errc::invalid_argument, "derived pair is not compatible");
  return w_normalize(std::move(w));
}

std::vector<Partition> all_partitions(int n) {
  // restricted growth strings
  std::vector<Partition> out;
  std::vector<int> labels(n, 0);
  auto rec = [&](auto&& self, int pos, int max_label) -> void {
    if (pos == n) {
      out.push_back(Partition::from_labels(n, labels));
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      labels[pos] = l;
      self(self, pos + 1, std::max(max_label, l));
    }
  };
  rec(rec, 0, -1);
  return out;
}

std::vector<WElement> enumerate_w(int n) {
  std::vector<Partition> parts = all_partitions(n);
  std::set<WElement> seen;
  for (const auto& p : parts)
    for (const auto& q : parts) {
      if (p.size() != q.size()) continue;
      std::vector<int> perm(p.size());
      for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      do {
        PartitionBijection beta{p, q, perm};
        // alphas compatible with beta: targets stay in the mapped block
        std::vector<std::pair<int, int>> stack_pairs;
        std::vector<char> used(n, 0);
        auto rec = [&](auto&& self, int x) -> void {
          if (x == n) {
            WElement w;
            w.n = n;
            w.alpha = PartialMap::from_pairs(n, stack_pairs);
            w.beta = beta;
            seen.insert(w_normalize(std::move(w)));
            return;
          }
          self(self, x + 1); // x undefined
          for (int y : q.blocks[perm[p.block_of(x)]]) {
            if (used[y]) continue;
            used[y] = 1;
            stack_pairs.emplace_back(x, y);
            self(self, x + 1);
            stack_pairs.pop_back();
            used[y] = 0;
          }
        };
        rec(rec, 0);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  return {seen.begin(), seen.end()};
}

std::string to_string(const WElement& w) {
  std::ostringstream os;
  os << "alpha: " << to_string(w.alpha) << "; beta: [" << to_string(w.beta.dom) << "] -> ["
     << to_string(w.beta.im) << "] via";
  for (int v : w.beta.map) os << ' ' << v;
  return os.str();
}

} // namespace pia
