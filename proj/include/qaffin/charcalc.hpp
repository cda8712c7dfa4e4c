// Depth-truncated classical characters: Freudenthal weight multiplicities,
// tensor-product tables and outer multiplicities by highest-weight stripping.
// Everything is exact; multiplicities are arbitrary-precision integers.

#ifndef QAFFIN_CHARCALC_HPP
#define QAFFIN_CHARCALC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "qaffin/dynkin.hpp"

namespace qaffin {

using BigInt = boost::multiprecision::cpp_int;

/// Multiplicity table of the irreducible of highest weight `top` (or of a
/// tensor product), complete for all drops eta with ht(eta) <= depth.
/// Keys are the drops eta, so table.at(RootVector(rank)) == 1.
struct TruncatedCharacter {
  Weight top;
  int depth = 0;
  std::map<RootVector, BigInt> table;

  BigInt at(const RootVector& eta) const {
    auto it = table.find(eta);
    return it == table.end() ? BigInt(0) : it->second;
  }
};

/// Normalized invariant form with (alpha_i, alpha_j) = c_{ij}; the first
/// argument is in fundamental-weight coordinates, the second in root
/// coordinates.
long long form(const Weight& w, const RootVector& eta);

/// Exact multiplicities dim V(lambda)_{lambda-eta} for all ht(eta) <= depth.
TruncatedCharacter freudenthal(const Diagram& d, const Weight& lambda, int depth);

/// Truncated character of the tensor product (table convolution); all
/// factors must share the diagram and depth.
TruncatedCharacter tensor_truncated(const Diagram& d,
                                    const std::vector<TruncatedCharacter>& factors);

/// Decomposition multiplicities m_mu for all dominant mu = top - eta with
/// ht(eta) <= depth, by repeated subtraction of irreducible characters.
/// A negative residual or a nonzero residual at a non-dominant weight is an
/// internal inconsistency and throws.
std::map<Weight, BigInt> outer_multiplicities(const Diagram& d,
                                              const TruncatedCharacter& w_table,
                                              int depth);

}  // namespace qaffin

#endif
