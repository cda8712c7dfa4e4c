// Kostant partition counting, support-restricted partition enumeration and
// the branch-family count behind the tensor weight-space dimensions.

#ifndef QAFFIN_KOSTANT_HPP
#define QAFFIN_KOSTANT_HPP

#include <map>
#include <utility>
#include <vector>

#include "qaffin/dynkin.hpp"

namespace qaffin {

/// Multiset of positive roots summing to a target, stored sparsely as
/// (index into d.positive_roots(), multiplicity) pairs sorted by index.
struct PartitionFamily {
  std::vector<std::pair<int, long long>> parts;

  bool operator==(const PartitionFamily&) const = default;
  auto operator<=>(const PartitionFamily&) const = default;

  RootVector weight(const Diagram& d) const;
  int support_size() const { return static_cast<int>(parts.size()); }
};

/// Family (J_i) of pairwise disjoint connected subdiagrams indexed by the
/// support of a weight, with i in J_i or J_i empty.
struct BranchFamily {
  std::map<int, NodeSet> branch;  // support node -> J_i

  bool operator==(const BranchFamily&) const = default;
  auto operator<=>(const BranchFamily&) const = default;

  RootVector weight(const Diagram& d) const;
  NodeSet support() const;  // nodes i with J_i nonempty
};

/// Kostant partition function: number of ways of writing eta as a multiset
/// of positive roots; zero off the positive cone.
long long kostant_p(const Diagram& d, const RootVector& eta);

/// All partitions of eta where every used root's support meets supp(lambda),
/// in lexicographic order of the cached root order.
std::vector<PartitionFamily> restricted_partitions(const Diagram& d,
                                                   const RootVector& eta,
                                                   const Weight& lambda);

/// dim of the weight space lambda - theta_J of the irreducible of highest
/// weight lambda, as a restricted partition count over the subsystem on J.
/// Requires J connected with supp(lambda) & J inside the boundary of J.
long long theta_weight_space_dim(const Diagram& d, const Weight& lambda, NodeSet J);

/// All branch families of total weight eta; requires every coordinate of
/// eta to be at most 1.
std::vector<BranchFamily> branch_families(const Diagram& d, const Weight& lambda,
                                          const RootVector& eta);

/// Fiber sizes of the collapse map sending a branch family to the partition
/// whose parts are the theta_{J_i}.
std::map<PartitionFamily, long long> family_to_partition_fibers(
    const Diagram& d, const std::vector<BranchFamily>& families);

}  // namespace qaffin

#endif
