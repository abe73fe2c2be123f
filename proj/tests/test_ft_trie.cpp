#include <doctest.h>

#include "helpers.hpp"
#include "nmdec/ft_trie.hpp"
#include "nmdec/nmwds.hpp"
#include "nmdec/oracle.hpp"

using namespace nmdec;
using testing::fixture;
using testing::from_tops;

TEST_CASE("two triangles sharing an edge") {
  const Complex c = from_tops({{1, 2, 3}, {2, 3, 4}});
  const FtTrie tr = FtTrie::build(c, {});
  const std::vector<Simplex> expected{{1}, {1, 2}, {1, 2, 3}, {1, 3}, {2}, {2, 3}, {2, 3, 4}, {2, 4}, {3}, {3, 4}, {4}};
  CHECK(tr.words() == expected);
  CHECK(tr.word_count() == 11);
  CHECK(tr.node_count() == 11);
  CHECK(tr.lookup({1, 2}) == 1);
  CHECK(tr.lookup({2, 3}) == 2);  // leftmost leaf below 2-3 is 2-3-4
  CHECK(tr.lookup({2, 4}) == 2);
  CHECK(tr.lookup({4}) == 2);
  CHECK_FALSE(tr.contains({1, 4}));
  CHECK_THROWS_AS(tr.lookup({1, 4}), Error);
  CHECK_THROWS_AS(tr.lookup({}), Error);
}

TEST_CASE("splitmap keys become interior non-words") {
  const auto b = fixture("fix_b.tv");
  const Nmwds nm = Nmwds::build(b.complex);
  const FtTrie* tr = nm.trie();
  REQUIRE(tr != nullptr);
  CHECK_FALSE(tr->contains({6, 8}));
  try {
    tr->lookup({6, 8});
    FAIL("expected NotInTrie");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInTrie);
  }
  // Longer words still pass through the node.
  CHECK(tr->contains({6, 8, 9}));
  CHECK(tr->lookup({6, 8, 9}) == 9);
  CHECK(tr->word_count() + 1 == oracle::face_numbers(b.complex)[0] + oracle::face_numbers(b.complex)[1] +
                                    oracle::face_numbers(b.complex)[2] + oracle::face_numbers(b.complex)[3]);
}

TEST_CASE("every stored word looks up to a top that contains it") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Complex c = oracle::random_complex(seed, 30, 3);
    const FtTrie tr = FtTrie::build(c, {});
    for (const auto& w : tr.words()) {
      std::uint64_t cmp = 0;
      const TopId t = tr.lookup(w, &cmp);
      CHECK(is_subset(w, c.simplex(t)));
      CHECK(cmp >= w.size());
    }
    std::size_t faces = 0;
    for (std::size_t f : oracle::face_numbers(c)) faces += f;
    CHECK(tr.word_count() == faces);
  }
}
