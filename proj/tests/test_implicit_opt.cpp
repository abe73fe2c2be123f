#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "nmdec/implicit_opt.hpp"
#include "nmdec/oracle.hpp"

using namespace nmdec;
using testing::fixture;

namespace {

struct Built {
  DecompositionResult dec;
  Ewds e;
  Renumbering r;
  ImplicitEwds ie;
};

Built build(const Complex& c, TtMode mode) {
  Built b;
  b.dec = decompose(c);
  b.e = make_ewds(b.dec, mode);
  b.r = compute_renumbering(b.e, b.dec.cc);
  b.ie = apply_renumbering(b.e, b.r);
  return b;
}

// Implicit lookups must reproduce the renamed plain arrays slot by slot.
void check_round_trip(const Built& b, const std::string& what) {
  const RenamedEwds plain = renamed_plain(b.e, b.r);
  for (int h = 0; h <= b.ie.d; ++h) {
    for (TopRef t = static_cast<TopRef>(b.ie.tbase[h]); t < b.ie.tbase[h + 1]; ++t) {
      for (int k = 1; k <= h + 1; ++k) {
        REQUIRE_MESSAGE(implicit_tv_lookup(b.ie, h, t, k) == plain.tvp[b.ie.addr(h, t, k)], what << " h=" << h << " t=" << t << " k=" << k);
        CHECK(b.ie.ttpp[b.ie.addr(h, t, k)] == plain.ttp[b.ie.addr(h, t, k)]);
      }
    }
    for (VertexId v = static_cast<VertexId>(b.ie.vbase[h]); v < b.ie.vbase[h + 1]; ++v) {
      const TopRef t = implicit_vtstar_lookup(b.ie, h, v);
      bool found = false;
      for (int k = 1; k <= h + 1; ++k) found = found || plain.tvp[b.ie.addr(h, t, k)] == v;
      CHECK_MESSAGE(found, what << " vertex " << v);
    }
  }
  // Renaming is a bijection on vertices and tops.
  std::vector<VertexId> fvv(b.r.fvv.begin() + 1, b.r.fvv.end());
  std::sort(fvv.begin(), fvv.end());
  for (std::size_t i = 0; i < fvv.size(); ++i) CHECK(fvv[i] == i + 1);
  std::vector<TopRef> ftt(b.r.ftt.begin() + 1, b.r.ftt.end());
  std::sort(ftt.begin(), ftt.end());
  for (std::size_t i = 0; i < ftt.size(); ++i) CHECK(ftt[i] == i + 1);
  CHECK(b.ie.tvpp.size() - 1 == b.ie.size - b.ie.nv);
}

}  // namespace

TEST_CASE("FIX-B renumbering") {
  const Built b = build(fixture("fix_b.tv").complex, TtMode::Strict);
  CHECK(std::vector<VertexId>(b.r.fvv.begin() + 1, b.r.fvv.end()) ==
        std::vector<VertexId>{1, 2, 5, 3, 4, 8, 7, 6, 14, 13, 10, 15, 9, 11, 12});
  CHECK(std::vector<TopRef>(b.r.ftt.begin() + 1, b.r.ftt.end()) == std::vector<TopRef>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(b.ie.vbase == std::vector<std::size_t>{1, 3, 6, 10, 16});
  CHECK(b.ie.cc == std::vector<std::size_t>{2, 1, 1, 1});
  CHECK(b.ie.taddr == std::vector<std::size_t>{1, 1, 2, 4, 10});
  CHECK(b.ie.iibnd == std::vector<std::size_t>{3, 5, 7, 10});
  CHECK(b.ie.iitaddr == std::vector<std::size_t>{1, 2, 4, 10});
  // Derived from the swaps: top 3 keeps its third slot, vertex 9 renamed 7.
  CHECK(std::vector<VertexId>(b.ie.tvpp.begin() + 1, b.ie.tvpp.end()) == std::vector<VertexId>{3, 8, 9, 14, 15, 10, 14, 10, 11});
  check_round_trip(b, "FIX-B");
}

TEST_CASE("implicit VT* follows the two formulas") {
  const Built b = build(fixture("fix_b.tv").complex, TtMode::Strict);
  const std::vector<std::pair<VertexId, TopRef>> expected{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 3}, {6, 5}, {7, 6}, {8, 5},
                                                          {9, 5}, {10, 7}, {11, 8}, {12, 9}, {13, 7}, {14, 7}, {15, 7}};
  for (const auto& [v, t] : expected) {
    int h = 0;
    while (v >= b.ie.vbase[h + 1]) ++h;
    CHECK(implicit_vtstar_lookup(b.ie, h, v) == t);
  }
  CHECK_THROWS_AS(implicit_vtstar_lookup(b.ie, 1, 1), Error);
  CHECK_THROWS_AS(implicit_tv_lookup(b.ie, 2, 4, 1), Error);
  CHECK_THROWS_AS(implicit_tv_lookup(b.ie, 2, 5, 4), Error);
}

TEST_CASE("round trip on grid balls") {
  for (int n : {1, 2, 3}) {
    for (TtMode mode : {TtMode::Strict, TtMode::Circular}) check_round_trip(build(oracle::grid_ball(n, n, n), mode), "grid " + std::to_string(n));
  }
  check_round_trip(build(oracle::grid_ball(4, 2, 1), TtMode::Strict), "grid 4x2x1");
}

TEST_CASE("round trip on fixtures and random decompositions") {
  for (const char* name : {"fix_a.tv", "fix_c.tv", "fix_d.tv", "fix_e.tv", "fix_f.tv", "fix_g.tv", "fix_h.tv"}) {
    check_round_trip(build(fixture(name).complex, TtMode::Circular), name);
  }
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Complex c = oracle::random_complex(seed, 30, 1 + static_cast<int>(seed % 4));
    check_round_trip(build(c, TtMode::Circular), "seed " + std::to_string(seed));
  }
}

TEST_CASE("a dimension that cannot be paired is rejected") {
  const Built b = build(fixture("fix_b.tv").complex, TtMode::Strict);
  std::vector<std::size_t> wrong = b.dec.cc;
  wrong[3] = 2;
  try {
    compute_renumbering(b.e, wrong);
    FAIL("expected NotIqm");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotIqm);
  }
}
