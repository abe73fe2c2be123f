#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "nmdec/nmwds.hpp"
#include "nmdec/oracle.hpp"

using namespace nmdec;
using testing::fixture;
using testing::simplex;

namespace {

const char* const kFixtures[] = {"fix_a.tv", "fix_b.tv", "fix_c.tv", "fix_d.tv", "fix_e.tv", "fix_f.tv", "fix_g.tv", "fix_h.tv"};

// Compares every relation S_nm against enumeration on the source.
void check_all_queries(const Complex& c, const Nmwds& nm, const std::string& what) {
  Scratch sc;
  const int d = c.dim();
  for (int n = 0; n <= d; ++n) {
    for (const auto& g : faces(c, n)) {
      for (int m = n; m <= d; ++m) {
        CHECK_MESSAGE(nm.snm_global(g, m, sc) == oracle::snm(c, g, m), what << " " << to_string(g) << " m=" << m);
      }
    }
  }
}

// Pieces of the star of each copy simplex in the decomposition, glued across
// codimension-one faces that contain it. Independent of TT and the flags.
std::map<Simplex, std::map<Simplex, std::size_t>> star_pieces(const Nmwds& nm) {
  const Complex& dec = nm.decomposition().decomposed;
  std::set<VertexId> vnra(nm.vnra().begin(), nm.vnra().end());
  std::map<Simplex, std::vector<TopId>> stars;
  dec.for_each_top([&](TopId t, const Simplex& s) {
    for (int k = 1; k < dim_of(s); ++k) {
      for_each_face(s, k, [&](const Simplex& f) {
        for (VertexId v : f) {
          if (vnra.count(nm.sigma().sigma(v))) {
            stars[f].push_back(t);
            return;
          }
        }
      });
    }
  });
  std::map<Simplex, std::map<Simplex, std::size_t>> out;
  for (const auto& [f, tops] : stars) {
    UnionFind uf(tops.size());
    for (std::size_t i = 0; i < tops.size(); ++i) {
      for (std::size_t j = i + 1; j < tops.size(); ++j) {
        const Simplex& a = dec.simplex(tops[i]);
        const Simplex& b = dec.simplex(tops[j]);
        if (a.size() == b.size() && set_intersection(a, b).size() + 1 == a.size()) uf.unite(i, j);
      }
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < tops.size(); ++i) roots.insert(uf.find(i));
    out[nm.sigma().sigma(f)][f] = roots.size();
  }
  return out;
}

}  // namespace

TEST_CASE("FIX-B splitmap") {
  const auto b = fixture("fix_b.tv");
  const Nmwds nm = Nmwds::build(b.complex);
  CHECK(nm.vnra() == std::vector<VertexId>{5, 6, 8});
  REQUIRE(nm.splitmap().size() == 1);
  const auto& [key, copies] = *nm.splitmap().begin();
  CHECK(key == Simplex{6, 8});
  REQUIRE(copies.size() == 2);
  std::set<std::vector<TopId>> reps;
  for (const auto& [copy, r] : copies) {
    CHECK(nm.sigma().sigma(copy) == key);
    reps.insert(r);
  }
  CHECK(reps == std::set<std::vector<TopId>>{{5}, {9}});
  const NmwdsStats s = nm.stats();
  CHECK(s.ns == 3);
  CHECK(s.nc == 6);
  CHECK(s.nsp == 5);
  CHECK(s.phi == doctest::Approx(50));
}

TEST_CASE("splitmap agrees with star pieces") {
  auto check = [](const Complex& c, VnraMode mode, const std::string& what) {
    const Nmwds nm = Nmwds::build(c, mode, false);
    for (const auto& [gamma, copies] : star_pieces(nm)) {
      std::size_t total = 0;
      for (const auto& [copy, n] : copies) total += n;
      auto key = nm.splitmap().find(gamma);
      if (total < 2) {
        CHECK_MESSAGE(key == nm.splitmap().end(), what << " " << to_string(gamma));
        continue;
      }
      REQUIRE_MESSAGE(key != nm.splitmap().end(), what << " " << to_string(gamma));
      CHECK(key->second.size() == copies.size());
      for (const auto& [copy, n] : copies) {
        auto it = key->second.find(copy);
        REQUIRE(it != key->second.end());
        CHECK_MESSAGE(it->second.size() == n, what << " " << to_string(copy));
      }
    }
  };
  for (const char* name : kFixtures) {
    check(fixture(name).complex, VnraMode::Auto, name);
    check(fixture(name).complex, VnraMode::All, name);
  }
  for (std::uint64_t seed = 1; seed <= 40; ++seed) check(oracle::random_complex(seed, 20, 3), VnraMode::All, "seed " + std::to_string(seed));
}

TEST_CASE("FIX-H: one copy, two representatives") {
  const auto h = fixture("fix_h.tv");
  const Nmwds nm = Nmwds::build(h.complex);
  const Simplex ab = simplex(h, {"a", "b"});
  auto key = nm.splitmap().find(ab);
  REQUIRE(key != nm.splitmap().end());
  REQUIRE(key->second.size() == 1);
  CHECK(key->second.begin()->second == std::vector<TopId>{1, 2});
  CHECK(nm.travel_star(ab, 1) == std::vector<TopId>{1});
  CHECK(nm.travel_star(ab, 2) == std::vector<TopId>{2});
  Scratch sc;
  CHECK(nm.snm_given(ab, 1, 3, sc) == std::vector<Simplex>{h.complex.simplex(1), h.complex.simplex(2)});
  // A single copy is not splitting.
  CHECK(nm.sigma_n_inverse(ab, 1) == ab);
}

TEST_CASE("travel_star and incidence errors") {
  const auto a = fixture("fix_a.tv");
  const Nmwds nm = Nmwds::build(a.complex);
  CHECK(nm.travel_star({2, 4}, 1) == std::vector<TopId>{1, 2, 3});
  CHECK(nm.travel_star({2, 3, 4}, 2) == std::vector<TopId>{1, 2});
  CHECK_THROWS_AS(nm.travel_star({1, 5}, 1), Error);
  try {
    nm.sigma_n_inverse({1, 5}, 1);
    FAIL("expected NotIncident");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotIncident);
  }
}

TEST_CASE("sigma_n_inverse on FIX-B") {
  const auto b = fixture("fix_b.tv");
  const Nmwds nm = Nmwds::build(b.complex);
  try {
    nm.sigma_n_inverse({6, 8}, 5);
    FAIL("expected IsSplitting");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IsSplitting);
  }
  const Simplex c = nm.sigma_n_inverse({5, 6}, 5);
  CHECK(nm.sigma().sigma(c) == Simplex{5, 6});
  CHECK(is_subset(c, nm.decomposition().decomposed.simplex(5)));
  CHECK_THROWS_AS(nm.sigma_n_inverse({5, 6}, 42), Error);
}

TEST_CASE("vertex queries gather every copy") {
  const auto b = fixture("fix_b.tv");
  const Nmwds nm = Nmwds::build(b.complex);
  Scratch sc;
  CHECK(nm.s0m_global(6, 3, sc) == std::vector<Simplex>{{6, 8, 9, 11}, {6, 9, 11, 12}});
  CHECK(nm.s0m_global(6, 1, sc) == oracle::snm(b.complex, {6}, 1));
  CHECK(nm.s0m_global(5, 1, sc) == std::vector<Simplex>{{4, 5}, {5, 6}, {5, 7}, {5, 8}});
  CHECK(nm.s0m_global(1, 0, sc) == std::vector<Simplex>{{1}});
  CHECK(nm.s0m_global(1, 1, sc).empty());
  CHECK_THROWS_AS(nm.s0m_global(77, 1, sc), Error);
}

TEST_CASE("FIX-G: the edge jk and its three triangles") {
  const auto g = fixture("fix_g.tv");
  const Nmwds nm = Nmwds::build(g.complex);
  Scratch sc;
  const auto out = nm.snm_global(simplex(g, {"j", "k"}), 2, sc);
  CHECK(out == std::vector<Simplex>{simplex(g, {"j", "k", "l"}), simplex(g, {"j", "k", "m"}), simplex(g, {"j", "k", "q"})});
  CHECK(nm.snm_global(simplex(g, {"j"}), 2, sc).size() == 4);
  CHECK(nm.snm_global(simplex(g, {"q", "n"}), 2, sc).empty());
}

TEST_CASE("global queries match enumeration on the fixtures") {
  for (const char* name : kFixtures) {
    const auto lc = fixture(name);
    check_all_queries(lc.complex, Nmwds::build(lc.complex), std::string(name) + " trie");
    check_all_queries(lc.complex, Nmwds::build(lc.complex, VnraMode::Auto, false), std::string(name) + " stitch");
    check_all_queries(lc.complex, Nmwds::build(lc.complex, VnraMode::All), std::string(name) + " all");
  }
}

TEST_CASE("global queries match enumeration on random complexes") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Complex c = oracle::random_complex(seed, 20, 1 + static_cast<int>(seed % 3));
    check_all_queries(c, Nmwds::build(c), "seed " + std::to_string(seed));
  }
}

TEST_CASE("given-top queries agree with the global ones") {
  const auto b = fixture("fix_b.tv");
  const Nmwds nm = Nmwds::build(b.complex);
  Scratch sc;
  CHECK(nm.snm_given({6, 8}, 5, 2, sc) == oracle::snm(b.complex, {6, 8}, 2));
  CHECK(nm.snm_given({9, 11}, 8, 3, sc) == oracle::snm(b.complex, {9, 11}, 3));
  CHECK(nm.snm_given({9, 11}, 8, 1, sc) == std::vector<Simplex>{{9, 11}});
  CHECK(nm.snm_given({9, 11}, 8, 0, sc).empty());
  CHECK_THROWS_AS(nm.snm_given({1, 2}, 8, 3, sc), Error);
}
