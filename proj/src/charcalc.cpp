#include "qaffin/charcalc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qaffin {

long long form(const Weight& w, const RootVector& eta) {
  long long s = 0;
  for (int i = 1; i <= eta.rank(); ++i) s += eta[i] * w[i];
  return s;
}

namespace {

// All eta in the positive root-lattice cone with ht(eta) <= depth, graded by
// height.
std::vector<RootVector> cone_window(int rank, int depth) {
  std::vector<RootVector> out;
  RootVector cur(rank);
  std::function<void(int, int)> rec = [&](int node, int left) {
    if (node > rank) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[node] = v;
      rec(node + 1, left - v);
    }
    cur[node] = 0;
  };
  rec(1, depth);
  std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
    long long ha = a.ht(), hb = b.ht();
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

}  // namespace

TruncatedCharacter freudenthal(const Diagram& d, const Weight& lambda, int depth) {
  if (!lambda.dominant()) throw std::invalid_argument("highest weight must be dominant");
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");

  TruncatedCharacter ch;
  ch.top = lambda;
  ch.depth = depth;

  const int n = d.rank();
  RootVector zero(n);
  ch.table[zero] = 1;

  for (const RootVector& eta : cone_window(n, depth)) {
    if (eta.is_zero()) continue;
    // denominator (lambda + mu + 2 rho, eta) with mu = lambda - eta
    Weight eta_w = eta.to_weight(d);
    long long denom = 0;
    for (int i = 1; i <= n; ++i) denom += eta[i] * (2 * lambda[i] + 2 - eta_w[i]);

    BigInt num = 0;
    for (const RootVector& alpha : d.positive_roots()) {
      RootVector above = eta;
      for (long long k = 1;; ++k) {
        above = above - alpha;
        if (!above.nonneg()) break;
        auto it = ch.table.find(above);
        if (it == ch.table.end() || it->second == 0) continue;
        // (mu + k alpha, alpha) with mu = lambda - eta
        long long pair = form(lambda, alpha) - form(eta_w, alpha) + 2 * k;
        num += BigInt(pair) * it->second;
      }
    }
    num *= 2;
    if (denom == 0) {
      if (num != 0) throw std::logic_error("freudenthal: zero denominator with nonzero sum");
      ch.table[eta] = 0;
      continue;
    }
    if (num % denom != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
    BigInt m = num / denom;
    if (m < 0) throw std::logic_error("freudenthal: negative multiplicity");
    ch.table[eta] = m;
  }
  return ch;
}

TruncatedCharacter tensor_truncated(const Diagram& d,
                                    const std::vector<TruncatedCharacter>& factors) {
  if (factors.empty()) throw std::invalid_argument("tensor of zero factors");
  const int n = d.rank();
  for (const auto& f : factors)
    if (f.depth != factors.front().depth || f.top.rank() != n)
      throw std::invalid_argument("tensor factors must share diagram and depth");

  TruncatedCharacter acc = factors.front();
  for (size_t t = 1; t < factors.size(); ++t) {
    TruncatedCharacter next;
    next.top = acc.top + factors[t].top;
    next.depth = acc.depth;
    for (const auto& [e1, m1] : acc.table) {
      if (m1 == 0) continue;
      for (const auto& [e2, m2] : factors[t].table) {
        if (m2 == 0) continue;
        RootVector e = e1 + e2;
        if (e.ht() > next.depth) continue;
        next.table[e] += m1 * m2;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

std::map<Weight, BigInt> outer_multiplicities(const Diagram& d,
                                              const TruncatedCharacter& w_table,
                                              int depth) {
  if (depth > w_table.depth)
    throw std::invalid_argument("requested depth exceeds table depth");

  std::map<RootVector, BigInt> residual;
  for (const auto& [eta, m] : w_table.table)
    if (eta.ht() <= depth) residual[eta] = m;

  std::map<Weight, BigInt> out;
  for (const RootVector& eta : cone_window(d.rank(), depth)) {
    BigInt r = 0;
    if (auto it = residual.find(eta); it != residual.end()) r = it->second;
    Weight mu = w_table.top - eta.to_weight(d);
    if (!mu.dominant()) {
      if (r != 0)
        throw std::logic_error("stripping: nonzero residual at non-dominant weight");
      continue;
    }
    if (r < 0) throw std::logic_error("stripping: negative residual multiplicity");
    if (r == 0) continue;
    out[mu] = r;
    TruncatedCharacter ch = freudenthal(d, mu, depth - static_cast<int>(eta.ht()));
    for (const auto& [drop, m] : ch.table)
      residual[eta + drop] -= r * m;
  }
  return out;
}

}  // namespace qaffin
