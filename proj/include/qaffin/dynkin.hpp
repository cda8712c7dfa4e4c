// Simply-laced Dynkin diagrams (types A, D, E), subdiagram calculus and
// positive roots.  Node labels are 1..n; A_n is the path 1-2-...-n, D_n has
// the trivalent node at n-2 with spin nodes n-1 and n, E_n uses the Bourbaki
// labeling (path 1-3-4-5-...-n with node 2 attached to 4).

#ifndef QAFFIN_DYNKIN_HPP
#define QAFFIN_DYNKIN_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qaffin {

enum class Kind { A, D, E };

/// Set of node labels, stored as a bitmask (ranks here never exceed 8).
class NodeSet {
public:
  NodeSet() = default;

  static NodeSet of(std::initializer_list<int> nodes) {
    NodeSet s;
    for (int i : nodes) s.insert(i);
    return s;
  }

  bool contains(int i) const { return (bits_ >> i) & 1u; }
  NodeSet& insert(int i) { bits_ |= std::uint64_t{1} << i; return *this; }
  NodeSet& erase(int i) { bits_ &= ~(std::uint64_t{1} << i); return *this; }

  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }

  NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  NodeSet minus(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }

  bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }

  bool operator==(const NodeSet&) const = default;
  auto operator<=>(const NodeSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for (std::uint64_t b = bits_; b; b &= b - 1)
      v.push_back(__builtin_ctzll(b));
    return v;
  }

  std::uint64_t raw() const { return bits_; }

private:
  explicit NodeSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

class Diagram;

/// Element of the weight lattice P in fundamental-weight coordinates,
/// coords[i] = value on the coroot h_i.
class Weight {
public:
  Weight() = default;
  explicit Weight(int rank) : c_(rank + 1, 0) {}

  int rank() const { return static_cast<int>(c_.size()) - 1; }
  long long operator[](int i) const { return c_[i]; }
  long long& operator[](int i) { return c_[i]; }

  NodeSet support() const {
    NodeSet s;
    for (int i = 1; i <= rank(); ++i)
      if (c_[i] != 0) s.insert(i);
    return s;
  }
  bool dominant() const {
    for (int i = 1; i <= rank(); ++i)
      if (c_[i] < 0) return false;
    return true;
  }
  bool is_zero() const { return support().empty(); }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;

  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;

private:
  std::vector<long long> c_;
};

/// Element of the root lattice Q in simple-root coordinates,
/// coords[i] = coefficient of alpha_i.
class RootVector {
public:
  RootVector() = default;
  explicit RootVector(int rank) : c_(rank + 1, 0) {}

  int rank() const { return static_cast<int>(c_.size()) - 1; }
  long long operator[](int i) const { return c_[i]; }
  long long& operator[](int i) { return c_[i]; }

  NodeSet rupp() const {
    NodeSet s;
    for (int i = 1; i <= rank(); ++i)
      if (c_[i] != 0) s.insert(i);
    return s;
  }
  long long ht() const {
    long long h = 0;
    for (int i = 1; i <= rank(); ++i) h += c_[i];
    return h;
  }
  bool nonneg() const {
    for (int i = 1; i <= rank(); ++i)
      if (c_[i] < 0) return false;
    return true;
  }
  bool is_zero() const { return rupp().empty(); }

  /// Image under the linear map Q -> P; applied to alpha_i this gives the
  /// i-th row of the Cartan matrix.
  Weight to_weight(const Diagram& d) const;

  RootVector operator+(const RootVector& o) const;
  RootVector operator-(const RootVector& o) const;

  bool operator==(const RootVector&) const = default;
  auto operator<=>(const RootVector&) const = default;

private:
  std::vector<long long> c_;
};

/// Per-extremal-node branch anchors of a dominant weight: for each extremal
/// node i, the support node on the branch (hub, i] nearest the hub (default
/// i itself), the connected span of all anchors, and its intersection with
/// each wing.
struct Anchors {
  std::map<int, int> anchor;          // extremal node -> anchor node
  NodeSet span;                       // closure of all anchors
  std::map<int, NodeSet> wing_span;   // extremal node i -> wing(i) & span
};

class Diagram {
public:
  Diagram() = default;  // empty; fill via make/parse/from_edges

  static Diagram make(Kind k, int rank);

  /// Parse names like "A5", "D4", "E6".
  static std::optional<Diagram> parse(std::string_view name);

  /// Build from an explicit tree; the kind is detected and must be one of
  /// A, D, E with rank = number of nodes.
  static Diagram from_edges(int rank, const std::vector<std::pair<int, int>>& edges);

  Kind kind() const { return kind_; }
  int rank() const { return n_; }
  std::string name() const;

  const std::vector<int>& neighbors(int i) const { return adj_[i]; }
  bool adjacent(int i, int j) const;
  int degree(int i) const { return static_cast<int>(adj_[i].size()); }

  /// Cartan matrix entry c_{ij} = alpha_j(h_i).
  int cartan(int i, int j) const {
    if (i == j) return 2;
    return adjacent(i, j) ? -1 : 0;
  }

  /// The unique degree-3 node (types D and E only).
  int trivalent() const;
  bool has_trivalent() const { return trivalent_ != 0; }

  /// Extremal nodes of the full diagram (degree <= 1).
  NodeSet extremal() const;
  NodeSet all_nodes() const;

  /// Positive roots, cached, in graded-lex order by (height, coords).
  const std::vector<RootVector>& positive_roots() const { return roots_; }
  bool is_root(const RootVector& v) const;

  /// Rebuild the diagram induced on a connected node subset; returned
  /// diagram keeps canonical 1..m labels, with the label maps alongside.
  struct Induced;
  Induced induced(NodeSet J) const;

private:
  void finish_construction();

  Kind kind_ = Kind::A;
  int n_ = 0;
  int trivalent_ = 0;  // 0 when type A
  std::vector<std::vector<int>> adj_;
  std::vector<RootVector> roots_;
};

struct Diagram::Induced {
  Diagram diagram;
  std::vector<int> to_parent;  // new label -> parent label (index 1..m)
  std::map<int, int> from_parent;
};

// Subdiagram calculus.  All of these treat a NodeSet as a subdiagram of d.
bool connected(const Diagram& d, NodeSet J);
NodeSet component_of(const Diagram& d, NodeSet J, int i);

/// Minimal connected superset of J (diagrams are trees, so this is the
/// union of the paths between members).
NodeSet closure(const Diagram& d, NodeSet J);

/// Nodes of J adjacent to at most one other node of J.
NodeSet boundary(const Diagram& d, NodeSet J);
NodeSet ring(const Diagram& d, NodeSet J);  // J minus its boundary

NodeSet interval(const Diagram& d, int i, int j);   // [i,j]
int distance(const Diagram& d, int i, int j);       // #[i,j)

/// Sum of the simple roots over J; a positive root iff J is connected and
/// nonempty.
RootVector theta(const Diagram& d, NodeSet J);

/// Outside neighbors of J.
NodeSet outside_neighbors(const Diagram& d, NodeSet J);

/// Boundary of J relative to a marked node l in J: {l} when J = {l},
/// otherwise boundary(J) minus {l}.
NodeSet boundary_except(const Diagram& d, NodeSet J, int l);

/// max { distance(l, j) : j in J }, zero for empty J.
int branch_reach(const Diagram& d, int l, NodeSet J);

/// Maximal type-A subdiagram avoiding the extremal node i, i.e. the closure
/// of the other extremal nodes ("wing" at i).
NodeSet wing(const Diagram& d, int i);

std::vector<NodeSet> connected_subdiagrams(const Diagram& d);
std::vector<NodeSet> connected_subdiagrams_containing(const Diagram& d, int i);

/// Branch anchors of a dominant weight (types D and E only).
Anchors anchor_data(const Diagram& d, const Weight& w);

std::string kind_name(Kind k);

}  // namespace qaffin

#endif
