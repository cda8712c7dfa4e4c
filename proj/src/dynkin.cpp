#include "qaffin/dynkin.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace qaffin {

Weight Weight::operator+(const Weight& o) const {
  Weight r(rank());
  for (int i = 1; i <= rank(); ++i) r[i] = c_[i] + o[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r(rank());
  for (int i = 1; i <= rank(); ++i) r[i] = c_[i] - o[i];
  return r;
}

RootVector RootVector::operator+(const RootVector& o) const {
  RootVector r(rank());
  for (int i = 1; i <= rank(); ++i) r[i] = c_[i] + o[i];
  return r;
}

RootVector RootVector::operator-(const RootVector& o) const {
  RootVector r(rank());
  for (int i = 1; i <= rank(); ++i) r[i] = c_[i] - o[i];
  return r;
}

Weight RootVector::to_weight(const Diagram& d) const {
  Weight w(rank());
  for (int i = 1; i <= rank(); ++i) {
    long long v = 2 * c_[i];
    for (int j : d.neighbors(i)) v -= c_[j];
    w[i] = v;
  }
  return w;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::A: return "A";
    case Kind::D: return "D";
    case Kind::E: return "E";
  }
  return "?";
}

Diagram Diagram::make(Kind k, int rank) {
  Diagram d;
  d.kind_ = k;
  d.n_ = rank;
  d.adj_.assign(rank + 1, {});
  auto link = [&d](int a, int b) {
    d.adj_[a].push_back(b);
    d.adj_[b].push_back(a);
  };
  switch (k) {
    case Kind::A:
      if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
      for (int i = 1; i < rank; ++i) link(i, i + 1);
      break;
    case Kind::D:
      if (rank < 4) throw std::invalid_argument("D_n needs n >= 4");
      for (int i = 1; i < rank - 2; ++i) link(i, i + 1);
      link(rank - 2, rank - 1);
      link(rank - 2, rank);
      d.trivalent_ = rank - 2;
      break;
    case Kind::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
      link(1, 3);
      for (int i = 3; i < rank; ++i) link(i, i + 1);
      link(2, 4);
      d.trivalent_ = 4;
      break;
  }
  d.finish_construction();
  return d;
}

std::optional<Diagram> Diagram::parse(std::string_view name) {
  if (name.size() < 2) return std::nullopt;
  Kind k;
  switch (name[0]) {
    case 'A': k = Kind::A; break;
    case 'D': k = Kind::D; break;
    case 'E': k = Kind::E; break;
    default: return std::nullopt;
  }
  int rank = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    rank = rank * 10 + (c - '0');
  }
  try {
    return make(k, rank);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Diagram Diagram::from_edges(int rank, const std::vector<std::pair<int, int>>& edges) {
  Diagram d;
  d.n_ = rank;
  d.adj_.assign(rank + 1, {});
  if (static_cast<int>(edges.size()) != rank - 1)
    throw std::invalid_argument("diagram must be a tree on its nodes");
  for (auto [a, b] : edges) {
    if (a < 1 || a > rank || b < 1 || b > rank || a == b)
      throw std::invalid_argument("edge endpoints out of range");
    d.adj_[a].push_back(b);
    d.adj_[b].push_back(a);
  }
  // classify: unique degree-3 node -> D or E by branch lengths, else A
  int tri = 0;
  for (int i = 1; i <= rank; ++i) {
    if (d.adj_[i].size() > 3) throw std::invalid_argument("node degree exceeds 3");
    if (d.adj_[i].size() == 3) {
      if (tri != 0) throw std::invalid_argument("more than one trivalent node");
      tri = i;
    }
  }
  if (!connected(d, d.all_nodes()))
    throw std::invalid_argument("diagram must be connected");
  if (tri == 0) {
    d.kind_ = Kind::A;
  } else {
    d.trivalent_ = tri;
    std::vector<int> lens;
    for (int b : d.adj_[tri]) {
      int len = 1, prev = tri, cur = b;
      while (d.adj_[cur].size() == 2) {
        int nxt = (d.adj_[cur][0] == prev) ? d.adj_[cur][1] : d.adj_[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      if (d.adj_[cur].size() == 3)
        throw std::invalid_argument("more than one trivalent node");
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    if (lens[0] == 1 && lens[1] == 1) {
      d.kind_ = Kind::D;
    } else if (lens[0] == 1 && lens[1] == 2 && lens[2] <= 4) {
      d.kind_ = Kind::E;
      if (rank < 6 || rank > 8) throw std::invalid_argument("invalid E-type tree");
    } else {
      throw std::invalid_argument("tree is not of type A, D or E");
    }
  }
  d.finish_construction();
  return d;
}

void Diagram::finish_construction() {
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  // Close the simple roots under root addition: beta + alpha_i is a root
  // iff p - <beta, alpha_i^vee> > 0 where p counts how far the alpha_i-string
  // extends below beta (at most 1 in the simply-laced case).
  std::set<RootVector> found;
  std::vector<RootVector> level;
  for (int i = 1; i <= n_; ++i) {
    RootVector a(n_);
    a[i] = 1;
    found.insert(a);
    level.push_back(a);
  }
  while (!level.empty()) {
    std::vector<RootVector> next;
    for (const auto& beta : level) {
      for (int i = 1; i <= n_; ++i) {
        long long c = 2 * beta[i];
        for (int j : adj_[i]) c -= beta[j];
        RootVector below = beta;
        below[i] -= 1;
        int p = (below.nonneg() && found.count(below)) ? 1 : 0;
        if (p - c > 0) {
          RootVector gamma = beta;
          gamma[i] += 1;
          if (found.insert(gamma).second) next.push_back(gamma);
        }
      }
    }
    level = std::move(next);
  }
  roots_.assign(found.begin(), found.end());
  std::sort(roots_.begin(), roots_.end(), [](const RootVector& a, const RootVector& b) {
    long long ha = a.ht(), hb = b.ht();
    if (ha != hb) return ha < hb;
    return a < b;
  });
}

std::string Diagram::name() const { return kind_name(kind_) + std::to_string(n_); }

bool Diagram::adjacent(int i, int j) const {
  return std::binary_search(adj_[i].begin(), adj_[i].end(), j);
}

int Diagram::trivalent() const {
  if (trivalent_ == 0)
    throw std::invalid_argument("type A diagram has no trivalent node");
  return trivalent_;
}

NodeSet Diagram::extremal() const {
  NodeSet s;
  for (int i = 1; i <= n_; ++i)
    if (degree(i) <= 1) s.insert(i);
  return s;
}

NodeSet Diagram::all_nodes() const {
  NodeSet s;
  for (int i = 1; i <= n_; ++i) s.insert(i);
  return s;
}

bool Diagram::is_root(const RootVector& v) const {
  return std::binary_search(roots_.begin(), roots_.end(), v,
                            [](const RootVector& a, const RootVector& b) {
                              long long ha = a.ht(), hb = b.ht();
                              if (ha != hb) return ha < hb;
                              return a < b;
                            });
}

Diagram::Induced Diagram::induced(NodeSet J) const {
  if (J.empty() || !connected(*this, J))
    throw std::invalid_argument("induced subdiagram must be nonempty and connected");
  Induced out;
  out.to_parent.assign(J.size() + 1, 0);
  int next = 1;
  for (int i : J.to_vector()) {
    out.to_parent[next] = i;
    out.from_parent[i] = next;
    ++next;
  }
  std::vector<std::pair<int, int>> edges;
  for (int i : J.to_vector())
    for (int j : adj_[i])
      if (j > i && J.contains(j))
        edges.emplace_back(out.from_parent[i], out.from_parent[j]);
  out.diagram = from_edges(J.size(), edges);
  return out;
}

bool connected(const Diagram& d, NodeSet J) {
  if (J.empty()) return true;
  return component_of(d, J, J.to_vector().front()) == J;
}

NodeSet component_of(const Diagram& d, NodeSet J, int i) {
  if (!J.contains(i)) return {};
  NodeSet seen = NodeSet::of({i});
  std::queue<int> q;
  q.push(i);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : d.neighbors(u))
      if (J.contains(v) && !seen.contains(v)) {
        seen.insert(v);
        q.push(v);
      }
  }
  return seen;
}

NodeSet closure(const Diagram& d, NodeSet J) {
  auto nodes = J.to_vector();
  if (nodes.empty()) return {};
  NodeSet out = J;
  for (size_t a = 0; a < nodes.size(); ++a)
    for (size_t b = a + 1; b < nodes.size(); ++b)
      out = out | interval(d, nodes[a], nodes[b]);
  return out;
}

NodeSet boundary(const Diagram& d, NodeSet J) {
  NodeSet out;
  for (int i : J.to_vector()) {
    int deg = 0;
    for (int j : d.neighbors(i))
      if (J.contains(j)) ++deg;
    if (deg <= 1) out.insert(i);
  }
  return out;
}

NodeSet ring(const Diagram& d, NodeSet J) { return J.minus(boundary(d, J)); }

NodeSet interval(const Diagram& d, int i, int j) {
  // BFS path in a tree
  std::vector<int> prev(d.rank() + 1, 0);
  std::queue<int> q;
  q.push(i);
  prev[i] = i;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == j) break;
    for (int v : d.neighbors(u))
      if (prev[v] == 0) {
        prev[v] = u;
        q.push(v);
      }
  }
  NodeSet out;
  for (int u = j; u != i; u = prev[u]) out.insert(u);
  out.insert(i);
  return out;
}

int distance(const Diagram& d, int i, int j) { return interval(d, i, j).size() - 1; }

RootVector theta(const Diagram& d, NodeSet J) {
  RootVector v(d.rank());
  for (int i : J.to_vector()) v[i] = 1;
  return v;
}

NodeSet outside_neighbors(const Diagram& d, NodeSet J) {
  NodeSet out;
  for (int i : J.to_vector())
    for (int j : d.neighbors(i))
      if (!J.contains(j)) out.insert(j);
  return out;
}

NodeSet boundary_except(const Diagram& d, NodeSet J, int l) {
  if (!J.contains(l)) throw std::invalid_argument("marked node must lie in J");
  if (J.size() == 1) return NodeSet::of({l});
  return boundary(d, J).minus(NodeSet::of({l}));
}

int branch_reach(const Diagram& d, int l, NodeSet J) {
  int best = 0;
  for (int j : J.to_vector()) best = std::max(best, distance(d, l, j));
  return best;
}

NodeSet wing(const Diagram& d, int i) {
  NodeSet ends = d.extremal();
  if (!ends.contains(i)) throw std::invalid_argument("wing is defined at extremal nodes");
  return closure(d, ends.minus(NodeSet::of({i})));
}

std::vector<NodeSet> connected_subdiagrams(const Diagram& d) {
  std::vector<NodeSet> out;
  const std::uint64_t full = d.all_nodes().raw();
  for (std::uint64_t m = full; m; m = (m - 1) & full) {
    NodeSet J = NodeSet::of({});
    for (int i = 1; i <= d.rank(); ++i)
      if ((m >> i) & 1) J.insert(i);
    if (!J.empty() && connected(d, J)) out.push_back(J);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeSet> connected_subdiagrams_containing(const Diagram& d, int i) {
  std::vector<NodeSet> out;
  for (const auto& J : connected_subdiagrams(d))
    if (J.contains(i)) out.push_back(J);
  return out;
}

Anchors anchor_data(const Diagram& d, const Weight& w) {
  int hub = d.trivalent();  // rejects type A
  Anchors out;
  NodeSet supp = w.support();
  NodeSet anchors;
  for (int i : d.extremal().to_vector()) {
    NodeSet branch = interval(d, hub, i).minus(NodeSet::of({hub}));
    int best = i, best_dist = distance(d, hub, i);
    for (int u : (branch & supp).to_vector()) {
      int du = distance(d, hub, u);
      if (du < best_dist) {
        best = u;
        best_dist = du;
      }
    }
    out.anchor[i] = best;
    anchors.insert(best);
  }
  out.span = closure(d, anchors);
  for (int i : d.extremal().to_vector())
    out.wing_span[i] = wing(d, i) & out.span;
  return out;
}

}  // namespace qaffin
