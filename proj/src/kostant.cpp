#include "qaffin/kostant.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qaffin {

RootVector PartitionFamily::weight(const Diagram& d) const {
  RootVector w(d.rank());
  for (auto [idx, mult] : parts) {
    const RootVector& a = d.positive_roots()[idx];
    for (int i = 1; i <= d.rank(); ++i) w[i] += mult * a[i];
  }
  return w;
}

RootVector BranchFamily::weight(const Diagram& d) const {
  RootVector w(d.rank());
  for (const auto& [i, J] : branch) w = w + theta(d, J);
  return w;
}

NodeSet BranchFamily::support() const {
  NodeSet s;
  for (const auto& [i, J] : branch)
    if (!J.empty()) s.insert(i);
  return s;
}

namespace {

// Depth-first enumeration of root multisets summing to the remaining budget.
// Roots are consumed in cached order, which makes the output lexicographic.
void enumerate_partitions(const Diagram& d, const std::vector<int>& allowed,
                          size_t pos, RootVector& remaining, PartitionFamily& current,
                          const std::function<void(const PartitionFamily&)>& emit) {
  if (remaining.is_zero()) {
    emit(current);
    return;
  }
  if (pos == allowed.size()) return;
  // prune: every later root must fit inside the remaining budget somewhere;
  // cheap check: remaining stays nonnegative throughout by construction.
  const RootVector& a = d.positive_roots()[allowed[pos]];
  long long cap = -1;
  for (int i = 1; i <= d.rank(); ++i)
    if (a[i] > 0) {
      long long q = remaining[i] / a[i];
      cap = (cap < 0) ? q : std::min(cap, q);
    }
  for (long long mult = 0; mult <= cap; ++mult) {
    if (mult > 0) {
      for (int i = 1; i <= d.rank(); ++i) remaining[i] -= a[i];
      current.parts.emplace_back(allowed[pos], mult);
    }
    enumerate_partitions(d, allowed, pos + 1, remaining, current, emit);
    if (mult > 0) current.parts.pop_back();
  }
  for (long long mult = 1; mult <= cap; ++mult)
    for (int i = 1; i <= d.rank(); ++i) remaining[i] += a[i];
}

std::vector<int> allowed_roots(const Diagram& d, const RootVector& eta, NodeSet touch) {
  std::vector<int> out;
  const auto& roots = d.positive_roots();
  for (int idx = 0; idx < static_cast<int>(roots.size()); ++idx) {
    const RootVector& a = roots[idx];
    bool fits = true;
    for (int i = 1; i <= d.rank() && fits; ++i)
      if (a[i] > eta[i]) fits = false;
    if (!fits) continue;
    if (!touch.empty() && !a.rupp().intersects(touch)) continue;
    out.push_back(idx);
  }
  return out;
}

}  // namespace

long long kostant_p(const Diagram& d, const RootVector& eta) {
  if (!eta.nonneg()) return 0;
  if (eta.is_zero()) return 1;
  long long count = 0;
  RootVector remaining = eta;
  PartitionFamily current;
  NodeSet everything = d.all_nodes();
  enumerate_partitions(d, allowed_roots(d, eta, everything), 0, remaining, current,
                       [&count](const PartitionFamily&) { ++count; });
  return count;
}

std::vector<PartitionFamily> restricted_partitions(const Diagram& d,
                                                   const RootVector& eta,
                                                   const Weight& lambda) {
  std::vector<PartitionFamily> out;
  if (!eta.nonneg()) return out;
  NodeSet supp = lambda.support();
  if (supp.empty()) {
    if (eta.is_zero()) out.push_back({});
    return out;
  }
  RootVector remaining = eta;
  PartitionFamily current;
  enumerate_partitions(d, allowed_roots(d, eta, supp), 0, remaining, current,
                       [&out](const PartitionFamily& f) { out.push_back(f); });
  return out;
}

long long theta_weight_space_dim(const Diagram& d, const Weight& lambda, NodeSet J) {
  if (J.empty() || !connected(d, J))
    throw std::invalid_argument("J must be nonempty and connected");
  NodeSet meet = lambda.support() & J;
  if (!meet.subset_of(boundary(d, J)))
    throw std::invalid_argument("supp(lambda) & J must lie in the boundary of J");
  // Partitions of theta_J only ever use roots supported inside J, so the
  // J-restricted count is the plain restricted count with lambda masked to J.
  Weight masked(d.rank());
  for (int i : meet.to_vector()) masked[i] = lambda[i];
  return static_cast<long long>(restricted_partitions(d, theta(d, J), masked).size());
}

std::vector<BranchFamily> branch_families(const Diagram& d, const Weight& lambda,
                                          const RootVector& eta) {
  for (int i = 1; i <= d.rank(); ++i)
    if (eta[i] > 1)
      throw std::invalid_argument("branch families need all coordinates of eta <= 1");
  std::vector<BranchFamily> out;
  if (!eta.nonneg()) return out;

  std::vector<int> supp = lambda.support().to_vector();
  NodeSet target = eta.rupp();

  // Assign to each support node a connected piece of the target set (or
  // nothing); pieces are disjoint and must exhaust the target.
  std::vector<std::vector<NodeSet>> choices(supp.size());
  for (size_t t = 0; t < supp.size(); ++t) {
    choices[t].push_back({});
    if (target.contains(supp[t]))
      for (NodeSet J : connected_subdiagrams(d))
        if (J.contains(supp[t]) && J.subset_of(target)) choices[t].push_back(J);
  }

  BranchFamily current;
  std::function<void(size_t, NodeSet)> rec = [&](size_t t, NodeSet used) {
    if (t == supp.size()) {
      if (used == target) out.push_back(current);
      return;
    }
    for (NodeSet J : choices[t]) {
      if (J.intersects(used)) continue;
      current.branch[supp[t]] = J;
      rec(t + 1, used | J);
    }
    current.branch.erase(supp[t]);
  };
  rec(0, {});
  std::sort(out.begin(), out.end());
  return out;
}

std::map<PartitionFamily, long long> family_to_partition_fibers(
    const Diagram& d, const std::vector<BranchFamily>& families) {
  std::map<PartitionFamily, long long> out;
  for (const auto& fam : families) {
    PartitionFamily xi;
    const auto& roots = d.positive_roots();
    for (const auto& [i, J] : fam.branch) {
      if (J.empty()) continue;
      RootVector t = theta(d, J);
      auto it = std::find(roots.begin(), roots.end(), t);
      if (it == roots.end())
        throw std::logic_error("branch piece does not give a root");
      xi.parts.emplace_back(static_cast<int>(it - roots.begin()), 1);
    }
    std::sort(xi.parts.begin(), xi.parts.end());
    ++out[xi];
  }
  return out;
}

}  // namespace qaffin
