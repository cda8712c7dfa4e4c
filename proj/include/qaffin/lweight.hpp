// Laurent monomials in the variables Y[i,r] (node, integer spectral shift),
// the lattice housing highest l-weights with spectral parameters in q^Z.
// The base point is fixed at q^0, so a string of length m starting at shift
// r is Y[i,r] Y[i,r+2] ... Y[i,r+2(m-1)].

#ifndef QAFFIN_LWEIGHT_HPP
#define QAFFIN_LWEIGHT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qaffin/dynkin.hpp"

namespace qaffin {

class LMonomial {
public:
  using Key = std::pair<int, int>;  // (node, shift)

  LMonomial() = default;

  static LMonomial var(int node, int shift, long long exp = 1);

  long long exponent(int node, int shift) const;
  bool is_identity() const { return e_.empty(); }

  LMonomial operator*(const LMonomial& o) const;
  LMonomial inverse() const;
  LMonomial pow(long long k) const;

  bool operator==(const LMonomial&) const = default;
  auto operator<=>(const LMonomial&) const = default;

  /// Classical weight: sum of exponent * omega_node.
  Weight weight(int rank) const;

  bool dominant() const;

  /// Drop every variable at nodes outside J.
  LMonomial restrict_to(NodeSet J) const;

  /// Largest shift carrying a nonzero exponent; the identity is rejected.
  int max_shift() const;

  /// True when every variable at the maximal shift has negative exponent;
  /// the identity is rejected.
  bool right_negative() const;

  /// The entries in canonical (node, shift) order.
  const std::map<Key, long long>& entries() const { return e_; }

  /// "Y[1,0]*Y[2,3]^-1" style text, bit-stable; "1" for the identity.
  std::string str() const;
  static LMonomial parse(const std::string& text);

private:
  std::map<Key, long long> e_;  // zero exponents never stored
};

/// The q-string Y[i,r] Y[i,r+2] ... of length m (empty when m = 0).
LMonomial q_string(int node, int shift, long long length);

/// Generator A[i,r] of the l-root lattice:
/// Y[i,r-1] Y[i,r+1] * prod over neighbors j of Y[j,r]^-1.
/// Its classical weight is alpha_i.
LMonomial simple_lroot(const Diagram& d, int node, int shift);

/// Highest l-weight given as one q-string per node (at most one each).
struct KRString {
  int node = 0;
  int shift = 0;       // start r
  long long length = 0;  // m >= 1

  bool operator==(const KRString&) const = default;
  auto operator<=>(const KRString&) const = default;

  /// Center exponent of the string: shift + length - 1.
  long long center() const { return shift + length - 1; }
};

struct DrinfeldSpec {
  std::vector<KRString> strings;

  static DrinfeldSpec make(std::vector<KRString> strings);  // validates

  LMonomial expand() const;
  Weight weight(int rank) const;
  const KRString* at(int node) const;
};

}  // namespace qaffin

#endif
