#include "pia/constructors.hpp"

#include <algorithm>
#include <numeric>

#include "pia/errors.hpp"

namespace pia {

int ReesSpec::group_inverse(int g) const {
  int e = *group.identity;
  for (int x = 0; x < group.n; ++x)
    if (group.at(g, x) == e && group.at(x, g) == e) return x;
  fail(Errc::invalid_argument, "element has no group inverse");
}

ReesSpec make_rees_spec(FiniteSemigroup group, int i_size, int lambda_size,
                        std::vector<std::vector<int>> sandwich) {
  if (!group.identity) fail(Errc::invalid_argument, "Rees group has no identity");
  if (i_size <= 0 || lambda_size <= 0) fail(Errc::invalid_argument, "Rees index sets must be nonempty");
  if (static_cast<int>(sandwich.size()) != lambda_size)
    fail(Errc::invalid_argument, "sandwich matrix must have |Lambda| rows");
  for (const auto& row : sandwich) {
    if (static_cast<int>(row.size()) != i_size)
      fail(Errc::invalid_argument, "sandwich matrix must have |I| columns");
    for (int v : row)
      if (v < 0 || v >= group.n) fail(Errc::out_of_range_entry, "sandwich entry out of range");
  }
  ReesSpec spec;
  spec.group = std::move(group);
  spec.i_size = i_size;
  spec.lambda_size = lambda_size;
  spec.sandwich = std::move(sandwich);
  for (int g = 0; g < spec.group.n; ++g) spec.group_inverse(g); // must be a group
  return spec;
}

FiniteSemigroup rees_matrix(const ReesSpec& spec) {
  int n = spec.carrier_size();
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a) {
    auto ta = spec.decode(a);
    for (int b = 0; b < n; ++b) {
      auto tb = spec.decode(b);
      int prod = spec.group.at(spec.group.at(ta.gamma, spec.p(ta.lambda, tb.i)), tb.gamma);
      table[a * n + b] = spec.encode(ta.i, prod, tb.lambda);
    }
  }
  return validate(n, std::move(table));
}

bool rees_domain_nonempty(const ReesSpec& spec, ReesSpec::Triple a, ReesSpec::Triple b) {
  int forced = spec.group_inverse(
      spec.group.at(spec.group.at(spec.p(b.lambda, a.i), a.gamma), spec.p(a.lambda, b.i)));
  return b.gamma == forced;
}

std::vector<InnGenerator> rees_generators(const ReesSpec& spec) {
  std::vector<InnGenerator> out;
  const auto& grp = spec.group;
  for (int g = 0; g < grp.n; ++g)
    for (int G = 0; G < spec.i_size; ++G)
      for (int H = 0; H < spec.i_size; ++H)
        for (int gamma = 0; gamma < spec.lambda_size; ++gamma)
          for (int eta = 0; eta < spec.lambda_size; ++eta) {
            int h = spec.group_inverse(grp.at(grp.at(spec.p(eta, G), g), spec.p(gamma, H)));
            int pre = spec.group_inverse(grp.at(g, spec.p(gamma, H)));  // (g p_{gamma,H})^-1
            int post = grp.at(spec.p(eta, G), g);                      // p_{eta,G} g
            InnGenerator gen;
            gen.g = spec.encode(G, g, gamma);
            gen.h = spec.encode(H, h, eta);
            std::vector<std::pair<int, int>> pairs;
            pairs.reserve(grp.n);
            for (int a = 0; a < grp.n; ++a) {
              gen.domain.push_back(spec.encode(G, a, eta));
              pairs.emplace_back(spec.encode(G, a, eta),
                                 spec.encode(H, grp.at(grp.at(pre, a), post), gamma));
            }
            std::sort(gen.domain.begin(), gen.domain.end());
            gen.map = PartialMap::from_pairs(spec.carrier_size(), std::move(pairs));
            out.push_back(std::move(gen));
          }
  return out;
}

int TransformationCodec::encode(const std::vector<int>& f) const {
  int code = 0;
  for (int i = x_size - 1; i >= 0; --i) code = code * x_size + f[i];
  return code;
}

std::vector<int> TransformationCodec::decode(int code) const {
  std::vector<int> f(x_size);
  for (int i = 0; i < x_size; ++i) {
    f[i] = code % x_size;
    code /= x_size;
  }
  return f;
}

int TransformationCodec::monoid_size() const {
  int m = 1;
  for (int i = 0; i < x_size; ++i) m *= x_size;
  return m;
}

std::pair<FiniteSemigroup, TransformationCodec> full_transformation_monoid(int x_size) {
  if (x_size < 1 || x_size > 4)
    fail(Errc::invalid_argument, "full transformation monoid supported for 1 <= |X| <= 4");
  TransformationCodec codec{x_size};
  int n = codec.monoid_size();
  std::vector<int> table(n * n);
  std::vector<std::vector<int>> maps(n);
  for (int a = 0; a < n; ++a) maps[a] = codec.decode(a);
  std::vector<int> prod(x_size);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < x_size; ++x) prod[x] = maps[b][maps[a][x]]; // a then b
      table[a * n + b] = codec.encode(prod);
    }
  return {validate(n, std::move(table)), codec};
}

FiniteSemigroup clifford8() {
  // semilattice of the symmetric group on {e,r1,r2,s1,s2,s3} and the
  // two-element group {f,c}; f is the global identity
  std::vector<int> t = {
      0, 1, 2, 3, 4, 5, 0, 3, //
      1, 2, 0, 5, 3, 4, 1, 5, //
      2, 0, 1, 4, 5, 3, 2, 4, //
      3, 4, 5, 0, 1, 2, 3, 0, //
      4, 5, 3, 2, 0, 1, 4, 2, //
      5, 3, 4, 1, 2, 0, 5, 1, //
      0, 1, 2, 3, 4, 5, 6, 7, //
      3, 4, 5, 0, 1, 2, 7, 6, //
  };
  return validate(8, std::move(t), {"e", "r1", "r2", "s1", "s2", "s3", "f", "c"});
}

FiniteSemigroup strict4() {
  std::vector<int> t = {
      0, 0, 3, 3, //
      1, 1, 2, 2, //
      2, 2, 1, 1, //
      3, 3, 0, 0, //
  };
  return validate(4, std::move(t), {"1", "2", "3", "4"});
}

FiniteSemigroup left_zero(int k) {
  if (k < 1) fail(Errc::invalid_argument, "left-zero semigroup needs k >= 1");
  std::vector<int> t(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a * k + b] = a;
  return validate(k, std::move(t));
}

FiniteSemigroup cyclic_group(int k) {
  if (k < 1) fail(Errc::invalid_argument, "cyclic group needs k >= 1");
  std::vector<int> t(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a * k + b] = (a + b) % k;
  return validate(k, std::move(t));
}

FiniteSemigroup symmetric_group(int k) {
  if (k < 1 || k > 4) fail(Errc::invalid_argument, "symmetric group supported for k <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int n = static_cast<int>(perms.size());
  std::vector<int> table(n * n);
  std::vector<int> prod(k);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < k; ++x) prod[x] = perms[b][perms[a][x]];
      table[a * n + b] =
          static_cast<int>(std::find(perms.begin(), perms.end(), prod) - perms.begin());
    }
  return validate(n, std::move(table));
}

FiniteSemigroup null_semigroup(int k) {
  if (k < 1) fail(Errc::invalid_argument, "null semigroup needs k >= 1");
  return validate(k, std::vector<int>(k * k, 0));
}

FiniteSemigroup chain_semilattice(int k) {
  if (k < 1) fail(Errc::invalid_argument, "chain needs k >= 1");
  std::vector<int> t(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a * k + b] = std::min(a, b);
  return validate(k, std::move(t));
}

std::pair<FiniteSemigroup, std::vector<PartialMap>> symmetric_inverse_monoid(int k) {
  if (k < 1 || k > 4) fail(Errc::invalid_argument, "symmetric inverse monoid supported for k <= 4");
  // enumerate all partial maps x -> {undefined, 0..k-1}, keep the injective ones
  std::vector<PartialMap> maps;
  int total = 1;
  for (int i = 0; i < k; ++i) total *= k + 1;
  for (int code = 0; code < total; ++code) {
    int c = code;
    std::vector<std::pair<int, int>> pairs;
    std::vector<char> used(k, 0);
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) {
      int v = c % (k + 1);
      c /= k + 1;
      if (v == k) continue; // undefined
      if (used[v]) ok = false;
      used[v] = 1;
      pairs.emplace_back(x, v);
    }
    if (ok) maps.push_back(PartialMap::from_pairs(k, std::move(pairs)));
  }
  std::sort(maps.begin(), maps.end());
  return {abstract_cayley(maps), maps};
}

std::optional<FiniteSemigroup> catalog_lookup(const std::string& name) {
  auto parse_k = [](const std::string& s, size_t off) -> std::optional<int> {
    if (off >= s.size()) return std::nullopt;
    int k = 0;
    for (size_t i = off; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      k = k * 10 + (s[i] - '0');
      if (k > 1000) return std::nullopt;
    }
    return k;
  };
  if (name == "clifford8") return clifford8();
  if (name == "strict4") return strict4();
  if (name.rfind("leftzero:", 0) == 0) {
    if (auto k = parse_k(name, 9)) return left_zero(*k);
  } else if (name.rfind("cyclic:", 0) == 0) {
    if (auto k = parse_k(name, 7)) return cyclic_group(*k);
  } else if (name.rfind("T:", 0) == 0) {
    if (auto k = parse_k(name, 2)) return full_transformation_monoid(*k).first;
  } else if (name.rfind("I:", 0) == 0) {
    if (auto k = parse_k(name, 2)) return symmetric_inverse_monoid(*k).first;
  }
  return std::nullopt;
}

} // namespace pia
