#include "qaffin/minclass.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaffin {

long long p_value(const Diagram& d, const Weight& lambda, int i, int j) {
  if (i == j) return 0;
  NodeSet path = interval(d, i, j);
  long long between = 0;
  for (int u : path.to_vector())
    if (u != i && u != j) between += lambda[u];
  return lambda[i] + lambda[j] + 2 * between + distance(d, i, j);
}

std::vector<std::vector<int>> monotonic_orders(const Diagram& d, NodeSet J) {
  if (J.empty() || !connected(d, J))
    throw std::invalid_argument("monotonic orders need a nonempty connected subdiagram");
  for (int u : J.to_vector()) {
    int deg = 0;
    for (int v : d.neighbors(u))
      if (J.contains(v)) ++deg;
    if (deg > 2) throw std::invalid_argument("subdiagram is not of type A");
  }
  NodeSet ends = boundary(d, J);
  int a = ends.to_vector().front();
  std::vector<int> fwd;
  int prev = 0, cur = a;
  while (true) {
    fwd.push_back(cur);
    int nxt = 0;
    for (int v : d.neighbors(cur))
      if (J.contains(v) && v != prev) nxt = v;
    if (nxt == 0) break;
    prev = cur;
    cur = nxt;
  }
  std::vector<int> bwd(fwd.rbegin(), fwd.rend());
  return {fwd, bwd};
}

Direction minimal_direction(const Diagram& d, const std::vector<int>& order,
                            const DrinfeldSpec& spec) {
  for (size_t t = 0; t + 1 < order.size(); ++t)
    if (!d.adjacent(order[t], order[t + 1]))
      throw std::invalid_argument("order is not a path in the diagram");

  NodeSet J;
  for (int u : order) J.insert(u);
  Weight lam(d.rank());
  std::vector<int> supp;  // support nodes in path order
  std::vector<long long> center;
  for (int u : order) {
    if (const KRString* s = spec.at(u)) {
      lam[u] = s->length;
      supp.push_back(u);
      center.push_back(s->center());
    }
  }
  if (supp.size() <= 1) return Direction::Both;

  long long eps = 0;
  for (size_t t = 0; t + 1 < supp.size(); ++t) {
    long long p = p_value(d, lam, supp[t], supp[t + 1]);
    long long diff = center[t] - center[t + 1];
    if (diff != p && diff != -p) return Direction::None;
    long long e = (diff == p) ? 1 : -1;
    if (eps == 0)
      eps = e;
    else if (eps != e)
      return Direction::None;
  }
  return eps == 1 ? Direction::Decreasing : Direction::Increasing;
}

Classification classify(const Diagram& d, const DrinfeldSpec& spec) {
  int hub = d.trivalent();  // rejects type A
  Classification out;

  // Preminimality over the maximal admissible paths [hub, i]: the ratio
  // condition restricts to subintervals, so these suffice.
  out.preminimal = true;
  std::vector<int> ends = d.extremal().to_vector();
  for (int i : ends) {
    auto orders = monotonic_orders(d, interval(d, hub, i));
    if (minimal_direction(d, orders.front(), spec) == Direction::None)
      out.preminimal = false;
  }

  for (int i : ends) {
    auto orders = monotonic_orders(d, wing(d, i));
    out.wing_minimal[i] =
        minimal_direction(d, orders.front(), spec) != Direction::None;
    if (out.wing_minimal[i]) ++out.mo;
  }

  if (out.preminimal && out.mo == 2) {
    int k = 0;
    for (int i : ends)
      if (!out.wing_minimal[i]) k = i;
    out.failing_node = k;
    std::vector<int> rest;
    for (int i : ends)
      if (i != k) rest.push_back(i);
    int l = rest[0], m = rest[1];
    // coherently ordered wings: both paths read away from k
    std::vector<int> order_l, order_m;
    {
      auto o = monotonic_orders(d, wing(d, l));
      order_l = (o.front().front() == k) ? o.front() : o.back();
      o = monotonic_orders(d, wing(d, m));
      order_m = (o.front().front() == k) ? o.front() : o.back();
    }
    Direction dl = minimal_direction(d, order_l, spec);
    Direction dm = minimal_direction(d, order_m, spec);
    bool coherent = dl == Direction::Both || dm == Direction::Both || dl == dm;
    out.coherence = coherent ? Coherence::Coherent : Coherence::Incoherent;
  }
  return out;
}

DrinfeldSpec incoherent_partner(const Diagram& d, const DrinfeldSpec& spec, int k,
                                int m) {
  int hub = d.trivalent();
  Classification cls = classify(d, spec);
  if (!cls.preminimal || cls.mo != 2 || cls.coherence != Coherence::Coherent ||
      cls.failing_node != k)
    throw std::invalid_argument("partner needs a coherent order-2 spec failing at k");
  if (!d.extremal().contains(m) || m == k)
    throw std::invalid_argument("m must be an extremal node other than k");

  Weight lam = spec.weight(d.rank());
  if (lam[hub] != 0)
    throw std::invalid_argument("partner needs the trivalent node outside the support");

  // anchor string on the k branch
  NodeSet kbranch = interval(d, hub, k).minus(NodeSet::of({hub}));
  const KRString* base = nullptr;
  for (int u : (kbranch & lam.support()).to_vector())
    if (!base || distance(d, hub, u) < distance(d, hub, base->node))
      base = spec.at(u);
  if (!base)
    throw std::invalid_argument("partner needs support on the branch of k");
  long long c0 = base->center();

  NodeSet mbranch = interval(d, hub, m).minus(NodeSet::of({hub}));
  std::vector<KRString> strings;
  for (const KRString& s : spec.strings) {
    if (mbranch.contains(s.node)) {
      long long flipped = 2 * c0 - s.center();
      strings.push_back(
          {s.node, static_cast<int>(flipped - s.length + 1), s.length});
    } else {
      strings.push_back(s);
    }
  }
  DrinfeldSpec partner = DrinfeldSpec::make(std::move(strings));

  Classification pc = classify(d, partner);
  if (!pc.preminimal || pc.mo != 2 || pc.failing_node != k ||
      pc.coherence != Coherence::Incoherent)
    throw std::logic_error("partner construction did not produce an incoherent spec");
  return partner;
}

}  // namespace qaffin
