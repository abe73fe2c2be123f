#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "nmdec/complex.hpp"

using namespace nmdec;
using testing::fixture;
using testing::from_tops;
using testing::simplex;

namespace {

// Order straight from the definition: tops containing gamma.
std::size_t brute_order(const Complex& c, const Simplex& g) {
  std::size_t n = 0;
  c.for_each_top([&](TopId, const Simplex& s) { n += is_subset(g, s); });
  return n;
}

}  // namespace

TEST_CASE("add_simplex rejects duplicates and faces, retires dominated tops") {
  Complex c;
  c.add_simplex(1, {1, 2});
  CHECK_THROWS_WITH_AS(c.add_simplex(1, {3, 4}), doctest::Contains("DuplicateId"), Error);
  c.add_simplex(2, {1, 2, 3});
  CHECK_FALSE(c.has_top(1));
  CHECK_THROWS_AS(c.add_simplex(1, {5, 6}), Error);  // retired ids stay taken
  try {
    c.add_simplex(3, {2, 3});
    FAIL("expected NotTop");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotTop);
  }
  CHECK_THROWS_AS(c.add_simplex(4, {7, 7}), Error);
  CHECK(c.num_tops() == 1);
  CHECK(c.slots(2) == std::vector<VertexId>{1, 2, 3});
}

TEST_CASE("slot order is kept, sorted view is separate") {
  Complex c;
  c.add_simplex(5, {6, 5, 8});
  CHECK(c.slots(5) == std::vector<VertexId>{6, 5, 8});
  CHECK(c.simplex(5) == Simplex{5, 6, 8});
}

TEST_CASE("star, link and order agree with enumeration on FIX-A") {
  const auto lc = fixture("fix_a.tv");
  const Complex& c = lc.complex;
  for (int k = 0; k <= 2; ++k) {
    for (const auto& f : faces(c, k)) CHECK(order_of(c, f) == brute_order(c, f));
  }
  CHECK(star(c, {2, 4}) == std::vector<TopId>{1, 2, 3});
  CHECK(link(c, {2, 4, 5}) == std::vector<Simplex>{{3}, {6}});
  CHECK(order_of(c, {1, 6}) == 0);
  CHECK_THROWS_AS(link(c, {1, 6}), Error);
}

TEST_CASE("h-connected components") {
  const auto g = fixture("fix_g.tv");
  CHECK(h_connected_components(g.complex, 1) == Partition{{1, 2, 3, 4}});
  CHECK(h_connected_components(g.complex, 2).size() == 4);
  const auto b = fixture("fix_b.tv");
  CHECK(h_connected_components(b.complex, 0).size() == 3);  // {1}, {2}, the rest through 5, 6, 8
}

TEST_CASE("classification of the fixtures") {
  const auto f = fixture("fix_f.tv");
  const Classification cf = classify(f.complex);
  CHECK(cf.regular);
  CHECK(cf.pseudomanifold);
  CHECK(cf.iqm);
  REQUIRE(cf.manifold_le3.has_value());
  CHECK_FALSE(*cf.manifold_le3);  // the apex link is a Moebius strip

  const auto a = fixture("fix_a.tv");
  const Classification ca = classify(a.complex);
  CHECK(ca.pseudomanifold);
  CHECK(ca.quasi_manifold);
  CHECK(*ca.manifold_le3);

  const auto g = fixture("fix_g.tv");
  const Classification cg = classify(g.complex);
  CHECK(cg.regular);
  CHECK_FALSE(cg.pseudomanifold);
  CHECK_FALSE(cg.iqm);

  const auto b = fixture("fix_b.tv");
  CHECK_FALSE(classify(b.complex).regular);
}

TEST_CASE("boundary and Euler characteristic") {
  const Complex tet = from_tops({{1, 2, 3, 4}});
  const auto bnd = boundary(tet);
  CHECK(bnd.size() == 4);
  Complex sphere;
  TopId id = 1;
  for (const auto& f : bnd) sphere.add_simplex(id++, f);
  CHECK(euler_characteristic(sphere) == 2);
  CHECK(*classify(sphere).manifold_le3);
  CHECK_THROWS_AS(euler_characteristic(tet), Error);
  // FIX-A boundary: 12 triangles, the two interior ones removed twice.
  CHECK(boundary(fixture("fix_a.tv").complex).size() == 8);
  CHECK_THROWS_AS(boundary(fixture("fix_b.tv").complex), Error);
}

TEST_CASE("surface classification") {
  // Seven-vertex torus.
  std::vector<Simplex> torus;
  for (VertexId i = 0; i < 7; ++i) {
    torus.push_back(make_simplex({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1}));
    torus.push_back(make_simplex({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1}));
  }
  const SurfaceInfo t = classify_surface(torus);
  CHECK(t.pseudo_surface);
  CHECK(t.orientable);
  CHECK(t.euler == 0);
  CHECK_FALSE(t.is_sphere());

  const SurfaceInfo disk = classify_surface({{1, 2, 3}, {1, 3, 4}});
  CHECK(disk.is_disk());
}

TEST_CASE("manifold vertex test and its dimension limit") {
  const auto f = fixture("fix_f.tv");
  CHECK_FALSE(is_manifold_vertex(f.complex, f.id_of("w")));
  CHECK(is_manifold_vertex(f.complex, f.id_of("a")));
  Complex four;
  four.add_simplex(1, {1, 2, 3, 4, 5});
  CHECK_THROWS_AS(is_manifold_vertex(four, 1), Error);
  CHECK_FALSE(classify(four).manifold_le3.has_value());
}

TEST_CASE("manifold-connected components of a star") {
  const auto g = fixture("fix_g.tv");
  // Edge jk has order 3: its star splits into three manifold pieces.
  CHECK(manifold_connected_components_of_star(g.complex, simplex(g, {"j", "k"})).size() == 3);
  CHECK_THROWS_AS(manifold_connected_components_of_star(g.complex, simplex(g, {"q", "n"})), Error);
}
