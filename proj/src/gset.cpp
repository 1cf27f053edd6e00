#include "pia/gset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pia/errors.hpp"

namespace pia {

namespace {

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<int> compose_lr(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (size_t x = 0; x < f.size(); ++x) out[x] = g[f[x]];
  return out;
}

} // namespace

std::vector<int> GSet::act_set(int k, const std::vector<int>& xs) const {
  std::vector<int> out;
  out.reserve(xs.size());
  for (int x : xs) out.push_back(act(k, x));
  std::sort(out.begin(), out.end());
  return out;
}

GSet make_gset(FiniteSemigroup group, int x_size, std::vector<int> action) {
  if (!group.identity) fail(Errc::invalid_argument, "acting group has no identity");
  if (x_size <= 0) fail(Errc::invalid_argument, "carrier must be nonempty");
  if (static_cast<int>(action.size()) != group.n * x_size)
    fail(Errc::invalid_argument, "action matrix must be |G| x |X|");
  for (int v : action)
    if (v < 0 || v >= x_size) fail(Errc::out_of_range_entry, "action entry out of range");
  for (int a = 0; a < group.n; ++a)
    for (int b = 0; b < group.n; ++b)
      if (group.at(a, b) != group.at(b, a)) fail(Errc::invalid_argument, "acting group must be abelian");
  GSet gs;
  gs.group = std::move(group);
  gs.x_size = x_size;
  gs.action = std::move(action);
  int e = *gs.group.identity;
  for (int x = 0; x < x_size; ++x)
    if (gs.act(e, x) != x) fail(Errc::invalid_argument, "identity must act trivially");
  for (int k = 0; k < gs.group.n; ++k)
    for (int l = 0; l < gs.group.n; ++l)
      for (int x = 0; x < x_size; ++x)
        if (gs.act(gs.group.at(k, l), x) != gs.act(k, gs.act(l, x)))
          fail(Errc::invalid_argument, "action is not compatible with the group product");
  // inverses exist, so each element acts as a permutation; caches:
  std::vector<int> labels(x_size);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<int> root(x_size);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int k = 0; k < gs.group.n; ++k)
    for (int x = 0; x < x_size; ++x) {
      int a = find(x), b = find(gs.act(k, x));
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  for (int x = 0; x < x_size; ++x) labels[x] = find(x);
  gs.orbits = Partition::from_labels(x_size, labels);
  gs.point_stab.resize(x_size);
  for (int x = 0; x < x_size; ++x)
    for (int k = 0; k < gs.group.n; ++k)
      if (gs.act(k, x) == x) gs.point_stab[x].push_back(k);
  return gs;
}

GSet trivial_gset(int x_size) {
  std::vector<int> action(x_size);
  std::iota(action.begin(), action.end(), 0);
  return make_gset(cyclic_group(1), x_size, std::move(action));
}

GSet z2_swap_gset() {
  return make_gset(cyclic_group(2), 4, {0, 1, 2, 3, 1, 0, 2, 3});
}

GSet z2_two_swaps_gset() {
  return make_gset(cyclic_group(2), 4, {0, 1, 2, 3, 1, 0, 3, 2});
}

GSet z4_folded_gset() {
  return make_gset(cyclic_group(4), 4,
                   {0, 1, 2, 3, 1, 0, 2, 3, 0, 1, 2, 3, 1, 0, 2, 3});
}

bool subgroup_leq(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> subgroup_generated(const FiniteSemigroup& group, std::vector<int> gens) {
  std::set<int> out;
  std::vector<int> work;
  auto push = [&](int x) {
    if (out.insert(x).second) work.push_back(x);
  };
  push(*group.identity);
  for (int g : gens) push(g);
  for (size_t head = 0; head < work.size(); ++head)
    for (int g : gens) push(group.at(work[head], g));
  return {out.begin(), out.end()};
}

std::vector<int> setwise_stabilizer(const GSet& gs, const std::vector<int>& block) {
  std::vector<int> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int k = 0; k < gs.group.n; ++k)
    if (gs.act_set(k, sorted) == sorted) out.push_back(k);
  return out;
}

StabilizerData stabilizers(const GSet& gs, const std::optional<Partition>& p,
                           const std::optional<std::vector<int>>& i) {
  StabilizerData out;
  out.point = gs.point_stab;
  out.orbits = gs.orbits;
  out.orbit_stab.reserve(gs.orbits.size());
  for (const auto& orbit : gs.orbits.blocks) out.orbit_stab.push_back(gs.point_stab[orbit.front()]);
  if (!p) return out;
  for (const auto& block : p->blocks) {
    out.block_setwise.push_back(setwise_stabilizer(gs, block));
    // G^B: a point whose stabilizer contains every stabilizer in the block
    std::optional<std::vector<int>> best;
    for (int x : block) {
      bool dominates = true;
      for (int y : block) dominates = dominates && subgroup_leq(gs.point_stab[y], gs.point_stab[x]);
      if (dominates) {
        best = gs.point_stab[x];
        break;
      }
    }
    out.block_max.push_back(std::move(best));
  }
  if (!i) return out;
  for (size_t b = 0; b < p->blocks.size(); ++b) {
    std::vector<int> acc;
    bool first = true;
    for (int ix : *i) {
      if (!subgroup_leq(out.block_setwise[b], gs.point_stab[ix])) continue;
      if (first) {
        acc = gs.point_stab[ix];
        first = false;
      } else {
        std::vector<int> tmp;
        std::set_intersection(acc.begin(), acc.end(), gs.point_stab[ix].begin(),
                              gs.point_stab[ix].end(), std::back_inserter(tmp));
        acc = std::move(tmp);
      }
    }
    if (first) { // no accessible target: intersection over the empty family
      acc.resize(gs.group.n);
      std::iota(acc.begin(), acc.end(), 0);
    }
    out.block_gprime.push_back(std::move(acc));
  }
  return out;
}

int EndGData::index_of(const std::vector<int>& f) const {
  auto it = code_index.find(codec.encode(f));
  return it == code_index.end() ? -1 : it->second;
}

EndGData end_g(const GSet& gs) {
  EndGData out;
  out.codec = TransformationCodec{gs.x_size};
  // choose images for orbit representatives with stabilizer domination,
  // extend equivariantly
  std::vector<int> reps;
  for (const auto& orbit : gs.orbits.blocks) reps.push_back(orbit.front());
  std::vector<int> image(reps.size(), 0);
  std::vector<int> f(gs.x_size, -1);
  auto emit = [&]() {
    std::fill(f.begin(), f.end(), -1);
    for (size_t r = 0; r < reps.size(); ++r)
      for (int k = 0; k < gs.group.n; ++k) f[gs.act(k, reps[r])] = gs.act(k, image[r]);
    out.maps.push_back(f);
  };
  auto rec = [&](auto&& self, size_t r) -> void {
    if (r == reps.size()) {
      emit();
      return;
    }
    for (int y = 0; y < gs.x_size; ++y) {
      if (!subgroup_leq(gs.point_stab[reps[r]], gs.point_stab[y])) continue;
      image[r] = y;
      self(self, r + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.maps.begin(), out.maps.end(), [&](const auto& a, const auto& b) {
    return out.codec.encode(a) < out.codec.encode(b);
  });
  int n = static_cast<int>(out.maps.size());
  for (int idx = 0; idx < n; ++idx) out.code_index.emplace(out.codec.encode(out.maps[idx]), idx);
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int idx = out.index_of(compose_lr(out.maps[a], out.maps[b]));
      if (idx < 0) fail(Errc::invalid_argument, "equivariant maps not closed under composition");
      table[a * n + b] = idx;
    }
  out.monoid = validate(n, std::move(table));
  return out;
}

bool accessible(const GSet& gs, const Partition& p, const std::vector<int>& i) {
  StabilizerData sd = stabilizers(gs, p);
  for (size_t b = 0; b < p.size(); ++b) {
    bool ok = false;
    for (int ix : i) ok = ok || subgroup_leq(sd.block_setwise[b], gs.point_stab[ix]);
    if (!ok) return false;
  }
  return true;
}

std::optional<int> find_sink(const GSet& gs, const std::vector<int>& i) {
  std::optional<int> sink;
  for (int ix : i)
    if (static_cast<int>(gs.point_stab[ix].size()) == gs.group.n) {
      if (sink) return std::nullopt; // not unique
      sink = ix;
    }
  return sink;
}

std::pair<StandardPair, StandardPair> tau_descriptor(const GSet& gs, const std::vector<int>& g,
                                                     const std::vector<int>& h) {
  auto annotate = [&](const TxDescriptor& d) {
    StandardPair sp;
    sp.p = d.p;
    sp.i = d.i;
    sp.is_accessible = accessible(gs, sp.p, sp.i);
    sp.sink = find_sink(gs, sp.i);
    StandardPair fixed = standardize(gs, sp.p, sp.i);
    sp.is_standard = fixed.p == sp.p && fixed.i == sp.i;
    sp.is_valid = sp.is_standard && is_valid_standard_pair(gs, sp);
    return sp;
  };
  auto [d1, d2] = descriptor_from_pair(g, h);
  return {annotate(d1), annotate(d2)};
}

std::array<bool, 4> tau_conditions(const GSet& gs, const Partition& p, const std::vector<int>& i) {
  std::array<bool, 4> ok{true, true, true, true};
  StabilizerData sd = stabilizers(gs, p);
  // (1) each block holds at most one element of i
  for (const auto& block : p.blocks) {
    int count = 0;
    for (int x : block) count += contains(i, x);
    if (count > 1) ok[0] = false;
  }
  // (2) the member of i dominates the stabilizers in its block
  for (int ix : i)
    for (int x : p.blocks[p.block_of(ix)])
      if (!subgroup_leq(gs.point_stab[x], gs.point_stab[ix])) ok[1] = false;
  // (3) a point strictly dominating the rest of its block must lie in i
  for (int x = 0; x < gs.x_size; ++x) {
    bool strict = true;
    for (int y : p.blocks[p.block_of(x)]) {
      if (y == x) continue;
      bool proper = subgroup_leq(gs.point_stab[y], gs.point_stab[x]) &&
                    gs.point_stab[y].size() < gs.point_stab[x].size();
      strict = strict && proper;
    }
    if (strict && !contains(i, x)) ok[2] = false;
  }
  // (4) G_B / G^B cyclic: some l in G_B generates G_B together with G^B
  for (size_t b = 0; b < p.size(); ++b) {
    if (!sd.block_max[b]) {
      ok[3] = false;
      continue;
    }
    bool cyclic = false;
    for (int l : sd.block_setwise[b]) {
      std::vector<int> gens = *sd.block_max[b];
      gens.push_back(l);
      if (subgroup_generated(gs.group, gens) == sd.block_setwise[b]) cyclic = true;
    }
    if (!cyclic) ok[3] = false;
  }
  return ok;
}

bool is_g_invariant(const GSet& gs, const Partition& p) {
  for (int k = 0; k < gs.group.n; ++k)
    for (const auto& block : p.blocks) {
      int target = p.block_of(gs.act(k, block.front()));
      for (int x : block)
        if (p.block_of(gs.act(k, x)) != target) return false;
    }
  return true;
}

StandardPair standardize(const GSet& gs, const Partition& p, const std::vector<int>& i) {
  if (!is_g_invariant(gs, p)) fail(Errc::invalid_argument, "partition is not invariant under the action");
  std::vector<int> i_sorted = i;
  std::sort(i_sorted.begin(), i_sorted.end());
  for (int x : i_sorted)
    for (int k = 0; k < gs.group.n; ++k)
      if (!contains(i_sorted, gs.act(k, x)))
        fail(Errc::invalid_argument, "fixed set is not a union of orbits");
  StandardPair out;
  if (i_sorted.empty() || !accessible(gs, p, i_sorted)) {
    out.p = Partition::whole(gs.x_size);
    out.i = {};
    out.is_accessible = false;
    out.is_standard = true;
    out.is_valid = is_valid_standard_pair(gs, out);
    return out;
  }
  StabilizerData sd = stabilizers(gs, p, i_sorted);
  std::vector<int> root(p.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  };
  // merge a block with its translates under G'_B
  for (size_t b = 0; b < p.size(); ++b)
    for (int l : sd.block_gprime[b]) {
      int x = p.blocks[b].front();
      unite(static_cast<int>(b), p.block_of(gs.act(l, x)));
    }
  // sink rule: blocks that can only map to the sink merge together
  std::optional<int> sink = find_sink(gs, i_sorted);
  if (sink) {
    int first_forced = -1;
    for (size_t b = 0; b < p.size(); ++b) {
      bool forced = true;
      for (int ix : i_sorted) {
        if (ix == *sink) continue;
        if (subgroup_leq(sd.block_setwise[b], gs.point_stab[ix])) forced = false;
      }
      if (!forced) continue;
      if (first_forced < 0)
        first_forced = static_cast<int>(b);
      else
        unite(first_forced, static_cast<int>(b));
    }
  }
  std::vector<int> labels(gs.x_size);
  for (int x = 0; x < gs.x_size; ++x) labels[x] = find(p.block_of(x));
  out.p = Partition::from_labels(gs.x_size, labels);
  out.i = std::move(i_sorted);
  out.is_accessible = true;
  out.sink = sink;
  out.is_standard = true;
  out.is_valid = is_valid_standard_pair(gs, out);
  return out;
}

bool is_valid_standard_pair(const GSet& gs, const StandardPair& sp) {
  if (sp.i.empty()) {
    int full = 0;
    for (int x = 0; x < gs.x_size; ++x)
      if (static_cast<int>(gs.point_stab[x].size()) == gs.group.n) ++full;
    return full != 1;
  }
  StabilizerData sd = stabilizers(gs, sp.p, sp.i);
  for (size_t b = 0; b < sp.p.size(); ++b) {
    bool meets_i = false;
    for (int x : sp.p.blocks[b]) meets_i = meets_i || contains(sp.i, x);
    if (meets_i) continue;
    if (!sd.block_max[b]) return false;
    bool found = false;
    for (int l : sd.block_setwise[b]) {
      std::vector<int> gens = *sd.block_max[b];
      gens.push_back(l);
      std::vector<int> span = subgroup_generated(gs.group, gens);
      bool ok = true;
      for (int ix : sp.i)
        if (subgroup_leq(span, gs.point_stab[ix]) &&
            !subgroup_leq(sd.block_setwise[b], gs.point_stab[ix]))
          ok = false;
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<int> endg_domain(const GSet& gs, const EndGData& endg, const Partition& p,
                             const std::vector<int>& i) {
  std::vector<int> sorted_i = i;
  std::sort(sorted_i.begin(), sorted_i.end());
  std::vector<int> out;
  for (size_t idx = 0; idx < endg.maps.size(); ++idx) {
    const auto& t = endg.maps[idx];
    bool ok = true;
    for (int x = 0; x < gs.x_size && ok; ++x) ok = contains(sorted_i, t[x]);
    for (const auto& block : p.blocks)
      for (int x : block) ok = ok && t[x] == t[block.front()];
    if (ok) out.push_back(static_cast<int>(idx));
  }
  return out;
}

GeneratorTuple tau_generator_tuple(const GSet& gs, const std::vector<int>& g,
                                   const std::vector<int>& h) {
  auto [raw1, raw2] = descriptor_from_pair(g, h);
  StandardPair sp1 = standardize(gs, raw1.p, raw1.i);
  StandardPair sp2 = standardize(gs, raw2.p, raw2.i);
  GeneratorTuple t;
  t.p = sp1.p;
  t.i = sp1.i;
  t.p_prime = sp2.p;
  t.i_prime = sp2.i;
  std::vector<std::pair<int, int>> apairs;
  for (int ix : sp1.i) {
    if (!contains(sp2.i, g[ix])) fail(Errc::invalid_argument, "restriction of g leaves the fixed set");
    apairs.emplace_back(ix, g[ix]);
  }
  t.alpha = PartialMap::from_pairs(gs.x_size, std::move(apairs));
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
    if (v < 0 || hit[v]) fail(Errc::invalid_argument, "block map is not a bijection");
    hit[v] = 1;
  }
  return t;
}

namespace {

// Tuples that differ by the diagonal action of one group element describe the
// same partial automorphism: an equivariant argument turns the shifted block
// lookup into a shifted fixed point, and the shifts cancel through alpha. The
// normal form is the least representative of that twist orbit.
WElement least_twist(const GSet& gs, const WElement& w) {
  WElement best = w;
  for (int l = 0; l < gs.group.n; ++l) {
    WElement cand;
    cand.n = w.n;
    std::vector<std::pair<int, int>> ap;
    ap.reserve(w.alpha.pairs.size());
    for (auto [i, j] : w.alpha.pairs) ap.emplace_back(i, gs.act(l, j));
    cand.alpha = PartialMap::from_pairs(w.n, std::move(ap));
    cand.beta.dom = w.beta.dom;
    cand.beta.im = w.beta.im;
    cand.beta.map.resize(w.beta.map.size());
    for (size_t b = 0; b < w.beta.map.size(); ++b)
      cand.beta.map[b] = w.beta.im.block_of(gs.act(l, w.beta.im.blocks[w.beta.map[b]].front()));
    if (cand < best) best = cand;
  }
  return best;
}

} // namespace

WElement gw_normalize(const GSet& gs, WElement w) {
  std::vector<int> i = w.alpha.domain();
  if (i.empty() || !accessible(gs, w.beta.dom, i)) return w_empty(gs.x_size);
  StandardPair sp = standardize(gs, w.beta.dom, i);
  StandardPair sp2 = standardize(gs, w.beta.im, w.alpha.image());
  PartitionBijection nb;
  nb.dom = sp.p;
  nb.im = sp2.p;
  nb.map.assign(sp.p.size(), -1);
  for (size_t b = 0; b < w.beta.dom.size(); ++b) {
    int src = sp.p.block_of(w.beta.dom.blocks[b].front());
    int dst = sp2.p.block_of(w.beta.im.blocks[w.beta.map[b]].front());
    if (nb.map[src] != -1 && nb.map[src] != dst)
      fail(Errc::invalid_argument, "merged blocks map to different merged images");
    nb.map[src] = dst;
  }
  std::vector<char> hit(sp2.p.size(), 0);
  for (int v : nb.map) {
    if (v < 0 || hit[v]) fail(Errc::invalid_argument, "induced block map is not a bijection");
    hit[v] = 1;
  }
  WElement out;
  out.n = gs.x_size;
  out.alpha = w.alpha;
  out.beta = std::move(nb);
  return least_twist(gs, out);
}

WElement gw_compose(const GSet& gs, const WElement& a, const WElement& b) {
  return gw_normalize(gs, w_compose_raw(a, b));
}

WElement gw_invert(const GSet& gs, const WElement& w) {
  WElement out;
  out.n = w.n;
  out.alpha = invert(w.alpha);
  out.beta = w.beta.inverse();
  return gw_normalize(gs, std::move(out));
}

} // namespace pia
