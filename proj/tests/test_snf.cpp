#include <catch_amalgamated.hpp>

#include "reesposet/simplicial.hpp"
#include "reesposet/zoo.hpp"

#include <random>

using namespace reesposet;

namespace {

SparseIntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  SparseIntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] != 0) m.add(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
  return m;
}

// Six-vertex real projective plane.
std::vector<Face> rp2_facets() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
          {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}};
}

// Seven-vertex torus.
std::vector<Face> torus_facets() {
  std::vector<Face> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return f;
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  auto d = smith_normal_form(to_dense(from_rows({{2, 0}, {0, 3}})));
  REQUIRE(d.rank == 2);
  CHECK(d.diagonal[0] == 1);
  CHECK(d.diagonal[1] == 6);

  auto z = smith_normal_form(to_dense(SparseIntMatrix(3, 4)));
  CHECK(z.rank == 0);

  auto t = smith_normal_form(to_dense(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})));
  REQUIRE(t.rank == 3);
  CHECK(t.diagonal[0] == 2);
  CHECK(t.diagonal[1] == 6);
  CHECK(t.diagonal[2] == 12);
  CHECK(smith_invariants(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) ==
        std::vector<Integer>{2, 6, 12});
}

TEST_CASE("smith transforms multiply back to the diagonal") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const int r = 3 + trial % 4, c = 2 + trial % 5;
    DenseMatrix a(r, std::vector<Integer>(c));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    auto s = smith_normal_form(a, true);
    REQUIRE(s.u);
    REQUIRE(s.v);
    auto d = multiply(multiply(*s.u, a), *s.v);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) CHECK(d[i][j] == (i == j && i < static_cast<int>(s.diagonal.size()) ? s.diagonal[i] : 0));
    for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
  }
}

TEST_CASE("sparse invariants agree with dense smith form") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, 5);
  for (int trial = 0; trial < 20; ++trial) {
    SparseIntMatrix m(20, 20);
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        const int p = pick(rng);
        if (p == 0) m.add(i, j, 1);
        if (p == 1) m.add(i, j, -1);
        if (p == 2 && trial % 2) m.add(i, j, 2);
      }
    auto dense = smith_normal_form(to_dense(m));
    std::vector<Integer> expected(dense.diagonal.begin(), dense.diagonal.begin() + dense.rank);
    CHECK(smith_invariants(m) == expected);
    CHECK(rational_rank(m) == dense.rank);
  }
}

TEST_CASE("sparse invariants of rank-deficient products") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const int inner = 3 + trial % 4;
    SparseIntMatrix b(15, inner), c(inner, 18);
    for (int i = 0; i < 15; ++i)
      for (int k = 0; k < inner; ++k) b.add(i, k, entry(rng));
    for (int k = 0; k < inner; ++k)
      for (int j = 0; j < 18; ++j) c.add(k, j, entry(rng));
    auto m = b.multiply(c);
    auto dense = smith_normal_form(to_dense(m));
    CHECK(dense.rank <= static_cast<std::size_t>(inner));
    std::vector<Integer> expected(dense.diagonal.begin(), dense.diagonal.begin() + dense.rank);
    CHECK(smith_invariants(m) == expected);
    CHECK(rational_rank(m) == dense.rank);
    CHECK(integer_kernel(m).size() == 18 - dense.rank);
  }
}

TEST_CASE("integer kernel") {
  auto m = from_rows({{1, 2, 3}, {2, 4, 6}});
  auto k = integer_kernel(m);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) {
    for (const auto& x : m.apply(v)) CHECK(x == 0);
  }
  auto single = integer_kernel(from_rows({{2, -3}}));
  REQUIRE(single.size() == 1);
  CHECK(abs(single[0][0]) == 3);
  CHECK(abs(single[0][1]) == 2);
}

TEST_CASE("homology of standard triangulations") {
  SECTION("boundary of the 3-simplex is a 2-sphere") {
    auto c = SimplicialComplex::from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    auto h = reduced_homology(c);
    REQUIRE(h.size() == 3);
    CHECK(h[0].betti == 0);
    CHECK(h[1].betti == 0);
    CHECK(h[2].betti == 1);
    CHECK(c.reduced_euler_characteristic() == 1);
  }
  SECTION("projective plane has Z/2 in degree one") {
    auto c = SimplicialComplex::from_facets(6, rp2_facets());
    auto h = reduced_homology(c);
    CHECK(h[1].betti == 0);
    CHECK(h[1].torsion == std::vector<Integer>{2});
    CHECK(h[2].betti == 0);
  }
  SECTION("torus") {
    auto c = SimplicialComplex::from_facets(7, torus_facets());
    CHECK(c.face_count(1) == 21);
    auto h = reduced_homology(c);
    CHECK(h[0].betti == 0);
    CHECK(h[1].betti == 2);
    CHECK(h[1].torsion.empty());
    CHECK(h[2].betti == 1);
  }
  SECTION("boundary squares to zero") {
    auto c = SimplicialComplex::from_facets(7, torus_facets());
    for (int d = 1; d <= c.dimension(); ++d) CHECK(c.boundary(d - 1).multiply(c.boundary(d)).is_zero());
  }
  SECTION("empty complex") {
    auto h = reduced_homology(SimplicialComplex{});
    REQUIRE(h.size() == 1);
    CHECK(h[0].dim == -1);
    CHECK(h[0].betti == 1);
  }
}

TEST_CASE("order complex Euler characteristic is the Mobius value") {
  for (int n = 1; n <= 4; ++n) {
    auto p = boolean_algebra(n);
    auto oc = order_complex(p);
    CHECK(oc.complex.reduced_euler_characteristic() == mobius(p, *p.bottom(), *p.top()));
    auto h = reduced_homology(oc.complex);
    for (const auto& g : h) CHECK(g.betti == (g.dim == n - 2 ? 1u : 0u));
  }
  auto facets = order_complex(boolean_algebra(3)).complex.facets();
  CHECK(facets.size() == 6);
}
