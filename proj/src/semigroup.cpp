#include "pia/semigroup.hpp"

#include <algorithm>

#include "pia/errors.hpp"

namespace pia {

namespace {

std::optional<int> find_identity(int n, const std::vector<int>& table) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[e * n + x] == x && table[x * n + e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

} // namespace

FiniteSemigroup validate(int n, std::vector<int> table, std::vector<std::string> labels) {
  if (n <= 0) fail(Errc::invalid_argument, "carrier size must be positive");
  if (static_cast<int>(table.size()) != n * n)
    fail(Errc::invalid_argument, "table is not n x n");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    fail(Errc::invalid_argument, "label count differs from carrier size");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int v = table[a * n + b];
      if (v < 0 || v >= n)
        fail(Errc::out_of_range_entry,
             "entry out of range at row " + std::to_string(a) + ", col " + std::to_string(b));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = table[a * n + b];
      for (int c = 0; c < n; ++c) {
        if (table[ab * n + c] != table[a * n + table[b * n + c]])
          fail(Errc::non_associative, "not associative at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }
  FiniteSemigroup s;
  s.n = n;
  s.table = std::move(table);
  s.identity = find_identity(n, s.table);
  s.labels = std::move(labels);
  return s;
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  if (s.identity) return s;
  int m = s.n + 1;
  FiniteSemigroup out;
  out.n = m;
  out.table.assign(m * m, 0);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) out.table[a * m + b] = s.at(a, b);
  for (int x = 0; x < m; ++x) {
    out.table[s.n * m + x] = x;
    out.table[x * m + s.n] = x;
  }
  out.identity = s.n;
  if (!s.labels.empty()) {
    out.labels = s.labels;
    out.labels.push_back("1");
  }
  return out;
}

std::vector<int> idempotents(const FiniteSemigroup& s) {
  std::vector<int> out;
  for (int x = 0; x < s.n; ++x)
    if (s.at(x, x) == x) out.push_back(x);
  return out;
}

int power(const FiniteSemigroup& s, int a, int k) {
  int p = a;
  for (int i = 1; i < k; ++i) p = s.at(p, a);
  return p;
}

bool natural_leq(const FiniteSemigroup& s, int a, int b) {
  // the two existentials factor: s with sa=a, sb=a and t with at=a, bt=a
  bool left = (a == b); // s = 1
  for (int x = 0; x < s.n && !left; ++x) left = s.at(x, a) == a && s.at(x, b) == a;
  if (!left) return false;
  bool right = (a == b);
  for (int x = 0; x < s.n && !right; ++x) right = s.at(a, x) == a && s.at(b, x) == a;
  return right;
}

bool h_preorder_leq(const FiniteSemigroup& s, int a, int b) {
  bool left = (a == b); // s = 1 gives sb = b
  for (int x = 0; x < s.n && !left; ++x) left = s.at(x, b) == a;
  if (!left) return false;
  bool right = (a == b);
  for (int x = 0; x < s.n && !right; ++x) right = s.at(b, x) == a;
  return right;
}

OmegaData omega_data(const FiniteSemigroup& s, int a) {
  // walk powers of a until the idempotent in the cycle appears
  std::vector<int> seen_order;
  std::vector<char> seen(s.n, 0);
  int p = a;
  while (!seen[p]) {
    seen[p] = 1;
    seen_order.push_back(p);
    p = s.at(p, a);
  }
  int omega = -1;
  for (int q : seen_order)
    if (s.at(q, q) == q) {
      omega = q;
      break;
    }
  // the cycle of a's power trajectory is a cyclic group; it has an idempotent
  if (omega == -1) fail(Errc::invalid_argument, "power trajectory has no idempotent");
  int b = s.at(a, omega); // a^(omega+1), lies in the cyclic group with identity omega
  // inverse of b there: b^(k-1) where b^k = omega
  int inv = omega;
  int q = b;
  while (q != omega) {
    inv = q;
    q = s.at(q, b);
  }
  OmegaData out;
  out.omega = omega;
  out.omega_plus_one = b;
  out.pseudo_inverse = inv;
  return out;
}

SemigroupWithOne::SemigroupWithOne(FiniteSemigroup s) : base(std::move(s)) {
  s1 = adjoin_identity(base);
  one = *s1.identity;
  adjoined = !base.identity.has_value();
}

std::vector<int> SemigroupWithOne::scan_order() const {
  std::vector<int> order;
  order.push_back(one);
  for (int x = 0; x < s1.n; ++x)
    if (x != one) order.push_back(x);
  return order;
}

std::optional<std::vector<int>> inverse_vector(const FiniteSemigroup& s) {
  std::vector<int> inv(s.n, -1);
  for (int x = 0; x < s.n; ++x) {
    int count = 0;
    for (int y = 0; y < s.n; ++y) {
      if (s.at(s.at(x, y), x) == x && s.at(s.at(y, x), y) == y) {
        inv[x] = y;
        ++count;
      }
    }
    if (count != 1) return std::nullopt;
  }
  return inv;
}

std::vector<int> centralizer(const FiniteSemigroup& s, int a) {
  std::vector<int> out;
  for (int x = 0; x < s.n; ++x)
    if (s.at(a, x) == s.at(x, a)) out.push_back(x);
  return out;
}

} // namespace pia
