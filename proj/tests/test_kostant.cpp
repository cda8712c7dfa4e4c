#include <doctest.h>

#include <stdexcept>

#include <map>

#include "qaffin/kostant.hpp"

using namespace qaffin;

namespace {

// Generating-function oracle for the partition count: expand the product
// over positive roots of 1/(1 - x^alpha) as a truncated table.
std::map<RootVector, long long> partition_table(const Diagram& d, int max_ht) {
  std::map<RootVector, long long> table;
  table[RootVector(d.rank())] = 1;
  for (const RootVector& a : d.positive_roots()) {
    std::map<RootVector, long long> next;
    for (const auto& [eta, c] : table) {
      RootVector cur = eta;
      while (cur.ht() <= max_ht) {
        next[cur] += c;
        cur = cur + a;
      }
    }
    table = std::move(next);
  }
  return table;
}

RootVector rv(const Diagram& d, std::initializer_list<long long> coords) {
  RootVector v(d.rank());
  int i = 1;
  for (long long c : coords) v[i++] = c;
  return v;
}

Weight wt(const Diagram& d, std::initializer_list<long long> coords) {
  Weight w(d.rank());
  int i = 1;
  for (long long c : coords) w[i++] = c;
  return w;
}

}  // namespace

TEST_CASE("kostant count agrees with the generating-function oracle") {
  for (auto d : {Diagram::make(Kind::A, 2), Diagram::make(Kind::A, 3),
                 Diagram::make(Kind::A, 4), Diagram::make(Kind::D, 4),
                 Diagram::make(Kind::D, 5)}) {
    auto table = partition_table(d, 8);
    for (const auto& [eta, expected] : table)
      CHECK(kostant_p(d, eta) == expected);
  }
}

TEST_CASE("kostant count basics") {
  Diagram d = Diagram::make(Kind::D, 4);
  for (int i = 1; i <= 4; ++i) {
    RootVector a(4);
    a[i] = 1;
    CHECK(kostant_p(d, a) == 1);
  }
  RootVector neg(4);
  neg[1] = -1;
  neg[2] = 2;
  CHECK(kostant_p(d, neg) == 0);

  Diagram a2 = Diagram::make(Kind::A, 2);
  CHECK(kostant_p(a2, rv(a2, {1, 1})) == 2);  // {theta} and {a1, a2}
  CHECK(kostant_p(a2, rv(a2, {0, 0})) == 1);
}

TEST_CASE("restricted partitions") {
  Diagram d4 = Diagram::make(Kind::D, 4);
  RootVector th = theta(d4, d4.all_nodes());

  CHECK(restricted_partitions(d4, th, Weight(4)).empty());
  CHECK(restricted_partitions(d4, RootVector(4), Weight(4)).size() == 1);

  Weight boundary_supp = wt(d4, {1, 0, 1, 1});
  auto fams = restricted_partitions(d4, th, boundary_supp);
  CHECK(fams.size() == 7);  // 3(n-2)+1 at n=4
  for (const auto& f : fams) {
    CHECK(f.weight(d4) == th);
    for (auto [idx, mult] : f.parts) {
      CHECK(mult == 1);
      CHECK(d4.positive_roots()[idx].rupp().intersects(boundary_supp.support()));
    }
  }

  Diagram d5 = Diagram::make(Kind::D, 5);
  CHECK(restricted_partitions(d5, theta(d5, d5.all_nodes()), wt(d5, {1, 0, 0, 1, 1}))
            .size() == 10);
  Diagram d6 = Diagram::make(Kind::D, 6);
  CHECK(restricted_partitions(d6, theta(d6, d6.all_nodes()), wt(d6, {1, 0, 0, 0, 2, 1}))
            .size() == 13);
  Diagram e6 = Diagram::make(Kind::E, 6);
  CHECK(restricted_partitions(e6, theta(e6, e6.all_nodes()), wt(e6, {1, 1, 0, 0, 0, 1}))
            .size() == 14);  // 4(n-2)-2 at n=6
}

TEST_CASE("restricted partition count does not depend on the coefficient sizes") {
  Diagram d4 = Diagram::make(Kind::D, 4);
  RootVector th = theta(d4, d4.all_nodes());
  CHECK(restricted_partitions(d4, th, wt(d4, {3, 0, 1, 2})).size() == 7);
}

TEST_CASE("theta weight space dimension") {
  Diagram d5 = Diagram::make(Kind::D, 5);
  // single support node
  CHECK(theta_weight_space_dim(d5, wt(d5, {0, 0, 0, 2, 0}), NodeSet::of({3, 4, 5})) == 1);
  // two support nodes: number of nodes of the closure of the support
  Diagram a4 = Diagram::make(Kind::A, 4);
  CHECK(theta_weight_space_dim(a4, wt(a4, {1, 0, 0, 1}), a4.all_nodes()) == 4);
  CHECK(theta_weight_space_dim(d5, wt(d5, {0, 0, 0, 1, 1}), NodeSet::of({3, 4, 5})) == 3);
  // three support nodes on D_5
  CHECK(theta_weight_space_dim(d5, wt(d5, {2, 0, 0, 1, 1}), d5.all_nodes()) == 10);

  // support meeting the interior is rejected
  CHECK_THROWS_AS(theta_weight_space_dim(d5, wt(d5, {0, 1, 0, 1, 1}), d5.all_nodes()),
                  std::invalid_argument);
  CHECK_THROWS_AS(theta_weight_space_dim(d5, wt(d5, {1, 0, 0, 0, 0}),
                                         NodeSet::of({1, 2, 4})),
                  std::invalid_argument);
}

TEST_CASE("branch families") {
  Diagram d4 = Diagram::make(Kind::D, 4);
  Weight lam = wt(d4, {1, 0, 1, 1});

  CHECK(branch_families(d4, lam, RootVector(4)).size() == 1);
  CHECK(branch_families(d4, lam, RootVector(4)).front().support().empty());

  RootVector th = theta(d4, d4.all_nodes());
  auto fams = branch_families(d4, lam, th);
  CHECK(fams.size() == 12);  // partition count 7 plus n+1
  for (const auto& f : fams) CHECK(f.weight(d4) == th);

  // two support nodes: one more family than restricted partitions
  Weight two = wt(d4, {1, 0, 1, 0});
  RootVector th13 = theta(d4, interval(d4, 1, 3));
  CHECK(branch_families(d4, two, th13).size() ==
        restricted_partitions(d4, th13, two).size() + 1);

  RootVector bad(4);
  bad[1] = 2;
  CHECK_THROWS_AS(branch_families(d4, lam, bad), std::invalid_argument);
}

TEST_CASE("fiber sizes of the family collapse") {
  Diagram d4 = Diagram::make(Kind::D, 4);
  Weight lam = wt(d4, {1, 0, 1, 1});
  RootVector th = theta(d4, d4.all_nodes());
  auto fams = branch_families(d4, lam, th);
  auto fibers = family_to_partition_fibers(d4, fams);

  long long total = 0;
  int supp_count = lam.support().size();
  for (const auto& [xi, count] : fibers) {
    long long phi = supp_count - xi.support_size();
    CHECK(count == phi + 1);
    total += count;
  }
  CHECK(total == static_cast<long long>(fams.size()));
  CHECK(fibers.size() == restricted_partitions(d4, th, lam).size());

  // the all-theta partition has the largest fiber
  for (const auto& [xi, count] : fibers)
    if (xi.support_size() == 1) CHECK(count == 3);

  // two support nodes: the theta fiber has size 2
  Weight two = wt(d4, {1, 0, 0, 1});
  RootVector th14 = theta(d4, interval(d4, 1, 4));
  auto fibers2 =
      family_to_partition_fibers(d4, branch_families(d4, two, th14));
  for (const auto& [xi, count] : fibers2) {
    if (xi.support_size() == 1)
      CHECK(count == 2);
    else
      CHECK(count == 1);
  }
}

TEST_CASE("family count minus partition count is 0, 1 or n+1 by support size") {
  for (auto d : {Diagram::make(Kind::D, 4), Diagram::make(Kind::D, 5)}) {
    RootVector th = theta(d, d.all_nodes());
    auto ends = d.extremal().to_vector();
    for (int mask = 1; mask < 8; ++mask) {
      Weight lam(d.rank());
      for (int t = 0; t < 3; ++t)
        if ((mask >> t) & 1) lam[ends[t]] = 1 + t;
      int s = lam.support().size();
      long long fams = static_cast<long long>(branch_families(d, lam, th).size());
      long long parts =
          static_cast<long long>(restricted_partitions(d, th, lam).size());
      long long expected = (s == 1) ? 0 : (s == 2) ? 1 : d.rank() + 1;
      CHECK(fams - parts == expected);
    }
  }
}
