// Near-top l-weights of Kirillov-Reshetikhin modules, dominant l-weight
// analysis of boundary-node triple tensor products, tensor-irreducibility
// criteria in types A and D, and the outer-multiplicity replay that
// separates the coherent and incoherent order-2 classes.

#ifndef QAFFIN_KRTENSOR_HPP
#define QAFFIN_KRTENSOR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qaffin/dynkin.hpp"
#include "qaffin/lweight.hpp"
#include "qaffin/minclass.hpp"

namespace qaffin {

/// The l-weight of a KR module at the weight drop theta_J, together with
/// its provenance.  Right negative whenever the marked node lies in a
/// nonempty J.
struct KRFragment {
  LMonomial monomial;
  int node = 0;
  int shift = 0;
  long long length = 0;
  NodeSet J;

  Weight weight(int rank) const { return monomial.weight(rank); }
};

/// Fragment formula: for l in J (connected),
///   Y[l,r,m-1] * prod_{i in J+} Y[i, r+2(m-1)+d(i,l)]
///             * prod_{i in bd_l J} Y[i, r+2m+d(i,l)]^-1
///             * (Y[hub, r+2m+d(hub,l)])^eps
/// with eps = 1 exactly when J is not of type A; the bare string when l is
/// not in J.  Nonempty disconnected J is rejected.
KRFragment kr_fragment(const Diagram& d, int l, int r, long long m, NodeSet J);

/// All fragments for J empty or connected containing l, each of
/// multiplicity one; these are exactly the module's l-weights at the drops
/// theta_J.
std::vector<KRFragment> kr_top_lweights(const Diagram& d, int l, int r, long long m);

/// One lowering step of the q-character recursion: requires the node part
/// of mono to be a single positive q-string Y[i,r,k] and multiplies by the
/// inverse of the l-root centered at the string's top, A[i, r+2k-1]^-1.
LMonomial fm_step(const Diagram& d, const LMonomial& mono, int node);

/// dim of the weight space at drop theta_[i,j] for a product of two
/// q-strings at distinct nodes i, j times a remainder supported away from
/// [i,j]: distance(i,j)+1 in the resonant case r_j - r_i = 2 m_i + d(i,j),
/// distance(i,j)+2 otherwise.  Requires r_i <= r_j.
long long two_string_dim(const Diagram& d, int i, int j, int r_i, long long m_i,
                         int r_j, long long m_j, const LMonomial& rest);

enum class TripleMode { Coherent, Incoherent };

/// One boundary KR string per extremal node of a type D/E diagram with the
/// center relations of an order-2 configuration failing at node k.
/// Coherent: r_x = r_k + 2 m_k + d(k,x) for both x; incoherent: the chain
/// r_l = r_k + 2 m_k + d(k,l), r_k = r_m + 2 m_m + d(k,m) for a unique
/// ordering (l, m).  Mirrored inputs are normalized on construction.
struct TripleConfig {
  Diagram diagram;
  int k = 0;
  TripleMode mode = TripleMode::Coherent;
  std::map<int, KRString> strings;  // keyed by extremal node
  int inc_l = 0, inc_m = 0;         // the incoherent (l, m) ordering
  bool mirrored = false;            // input arrived center-reversed

  static TripleConfig make(const Diagram& d, int k, TripleMode mode,
                           std::vector<KRString> strings);

  Weight weight() const;
  LMonomial top() const;
  long long len(int node) const { return strings.at(node).length; }
  int start(int node) const { return strings.at(node).shift; }
};

struct NamedLMonomial {
  std::string name;
  LMonomial monomial;
};

/// A branch family (J_i) over the extremal nodes with the product of the
/// corresponding fragments.
struct FamilyLWeight {
  std::map<int, NodeSet> family;
  LMonomial monomial;
};

/// All l-weights of the triple tensor product at weights >= lambda - theta.
std::vector<FamilyLWeight> triple_all_lweights(const TripleConfig& cfg);

/// The dominant ones, with canonical names: "omega", "omega_<x>" at weight
/// drop theta_{wing(x)}, "omega_prime" at drop theta, "omega_dblprime" at
/// drop theta_{wing(k)} (present only at the string resonance).
std::vector<NamedLMonomial> triple_dominant_lweights(const TripleConfig& cfg);

struct TpaWitness {
  int condition = 0;       // 1 or 2
  int support_node = 0;    // j' for condition 1
  long long eta_prime = 0;
};

struct TpaResult {
  bool reducible = false;
  std::optional<TpaWitness> witness;
};

/// Reducibility of (increasing minimal affinization of weight lambda on
/// A_rank) tensor (KR string of length eta at node rank, parameter ratio
/// q^s): exact criterion.
TpaResult typeA_tensor_reducible(int rank, const Weight& lambda, long long s,
                                 long long eta);

/// Sufficient irreducibility test for a pair of boundary KR modules of
/// D_rank with parameter ratio q^exponent; a false return is inconclusive.
bool typeD_tensor_irreducible(int rank, bool i_spin, bool j_spin, long long m_i,
                              long long m_j, long long exponent);
bool typeD_tensor_irreducible(const Diagram& d, int i, int j, long long m_i,
                              long long m_j, long long exponent);

/// The forbidden exponent set behind typeD_tensor_irreducible.
std::vector<long long> typeD_forbidden_exponents(int rank, bool i_spin, bool j_spin,
                                                 long long m_i, long long m_j);

/// Outer-multiplicity replay at nu = lambda - theta for a triple config
/// with full boundary support: dim W_nu from the truncated tensor
/// character, dim V(lambda)_nu from restricted partitions, dim V(nu_k)_nu
/// from the closed form, candidate factor dims from the two-string rule,
/// then the unique consistent assignment of factor multiplicities and the
/// correction xi = m_nu.
struct ReplayReport {
  int n = 0;
  TripleMode mode = TripleMode::Coherent;
  int k = 0;
  long long dim_w_nu = 0;
  long long dim_v_lambda_nu = 0;
  long long dim_v_nuk_nu = 0;       // = distance(hub, k)
  long long dim_w_nuk = 0;
  long long dim_v_omega_nuk = 0;    // two-string value, certifies m_nuk = 1
  long long m_nuk = 0;
  std::vector<NamedLMonomial> dominant;
  std::map<std::string, long long> factor_dim_nu;    // candidate -> dim at nu
  std::map<std::string, long long> factor_mult;      // candidate -> multiplicity
  long long xi = 0;
  long long m_nu = 0;
  bool identity_ok = false;
};

ReplayReport replay_outer(const TripleConfig& cfg);

/// Window checks and certificate for the strict comparison between a
/// coherent order-2 spec and its incoherent partner.
struct WindowCheck {
  std::string window_type;  // "A" or "D"
  int boundary_node = 0;    // j_l for A windows, j_k for D windows
  int rank = 0;             // #J_mu
  long long s_coherent = 0, s_incoherent = 0;       // A windows
  long long e_coherent = 0, e_incoherent = 0;       // D windows
  bool coherent_irreducible = false;
  bool incoherent_irreducible = false;
};

struct Certificate {
  std::string hypothesis;  // "(i)", "(ii)" or "(iii)"
  int k = 0, m = 0, l = 0;
  int k_anchor = 0, l_anchor = 0;
  DrinfeldSpec spec;
  DrinfeldSpec partner;
  ReplayReport coherent_replay;
  ReplayReport incoherent_replay;
  std::vector<WindowCheck> windows;
  bool strictly_larger = false;
  std::vector<std::string> citations;  // names of the sub-checks performed
};

/// m_choice = 0 picks the branch end nearest the hub among the two
/// candidates.
Certificate comparison_certificate(const Diagram& d, const DrinfeldSpec& spec,
                                   int m_choice = 0);

}  // namespace qaffin

#endif
