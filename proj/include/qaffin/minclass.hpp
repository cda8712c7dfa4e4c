// Classification of Drinfeld specs on D/E diagrams: ratio-condition
// minimality on type-A subdiagrams, preminimality, per-wing minimality,
// minimality order and the coherent/incoherent split at order 2.

#ifndef QAFFIN_MINCLASS_HPP
#define QAFFIN_MINCLASS_HPP

#include <map>
#include <vector>

#include "qaffin/dynkin.hpp"
#include "qaffin/lweight.hpp"

namespace qaffin {

/// p_{i,j}(lambda) along the diagram path between i and j:
/// lambda(h_i) + lambda(h_j) + 2 * (sum strictly between) + d(i,j),
/// and zero when i = j.  Symmetric.
long long p_value(const Diagram& d, const Weight& lambda, int i, int j);

enum class Direction { Increasing, Decreasing, Both, None };

/// The two monotonic orderings of a connected type-A subdiagram, each as a
/// node path.
std::vector<std::vector<int>> monotonic_orders(const Diagram& d, NodeSet J);

/// Whether the restriction of spec to the ordered path `order` satisfies
/// the minimal-affinization ratio condition c_i - c_j = eps * p_{i,j} on
/// support pairs, and in which direction (eps = +1 is Decreasing; Both when
/// the restricted support has at most one node).
Direction minimal_direction(const Diagram& d, const std::vector<int>& order,
                            const DrinfeldSpec& spec);

enum class Coherence { Coherent, Incoherent, NotApplicable };

struct Classification {
  bool preminimal = false;
  std::map<int, bool> wing_minimal;  // extremal node -> i-minimality
  int mo = 0;
  Coherence coherence = Coherence::NotApplicable;
  int failing_node = 0;  // set exactly when mo == 2
};

/// Full classification; the diagram must be of type D or E.
Classification classify(const Diagram& d, const DrinfeldSpec& spec);

/// For a coherent order-2 spec failing at k and a chosen other extremal
/// node m: the unique spec of the same weight agreeing on wing(m),
/// x-minimal for x != k, and incoherent.  Obtained by reflecting every
/// string center on the branch of m across the center of the anchor string
/// on the branch of k.  An involution in the m-strings.
DrinfeldSpec incoherent_partner(const Diagram& d, const DrinfeldSpec& spec, int k,
                                int m);

}  // namespace qaffin

#endif
