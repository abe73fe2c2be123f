#include <doctest.h>

#include <set>
#include <sstream>

#include "helpers.hpp"
#include "nmdec/gluing.hpp"

using namespace nmdec;
using testing::fixture;

namespace {

std::string run(const LabeledComplex& lc, const std::string& script_name, bool* ok = nullptr, GluingState* st = nullptr) {
  std::istringstream script(builtin_fixture(script_name));
  std::ostringstream out;
  const bool r = run_glue_script(lc, script, out, st);
  if (ok) *ok = r;
  return out.str();
}

}  // namespace

TEST_CASE("totally exploded complex has one copy per incidence") {
  const auto g = fixture("fix_g.tv");
  const GluingState s = GluingState::totally_exploded(g.complex);
  CHECK(s.copies().size() == 12);
  CHECK(s.copies_of(g.id_of("j")).size() == 4);
  CHECK(s.splitting_vertices().size() == 3);  // j, k, l
  CHECK_FALSE(s.is_isomorphic_to_source());
}

TEST_CASE("glue script on FIX-G reproduces the session dumps") {
  const auto g = fixture("fix_g.tv");
  bool ok = false;
  const std::string out = run(g, "fix_g.glue", &ok);
  CHECK(ok);
  const std::string expected =
      "simplex 1=[ q-[1] j-[1,2] k-[1,2] ]\n"
      "simplex 2=[ l-[2] j-[1,2] k-[1,2] ]\n"
      "simplex 3=[ j-[3] k-[3] m-[3] ]\n"
      "simplex 4=[ j-[4] l-[4] n-[4] ]\n"
      "\n"
      "simplex 1=[ q-[1] j-[1,2,4] k-[1,2,3] ]\n"
      "simplex 2=[ l-[2,4] j-[1,2,4] k-[1,2,3] ]\n"
      "simplex 3=[ j-[3] k-[1,2,3] m-[3] ]\n"
      "simplex 4=[ j-[1,2,4] l-[2,4] n-[4] ]\n"
      "\n"
      "splitted j\n";
  CHECK(out == expected);
}

TEST_CASE("instruction preconditions") {
  const auto g = fixture("fix_g.tv");
  GluingState s = GluingState::totally_exploded(g.complex);
  const auto code = [&](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Io;  // sentinel: nothing thrown
  };
  CHECK(code([&] { s.apply_pseudomanifold_gluing(1, 2); }) == Errc::NotPseudomanifoldPair);  // jk has order 3
  CHECK(code([&] { s.apply_gluing_instruction(1, 9); }) == Errc::UnknownTop);
  CHECK(code([&] { s.apply_vertex_equation(1, 3, g.id_of("q")); }) == Errc::NotSharedVertex);
  Complex two;
  two.add_simplex(1, {1, 2});
  two.add_simplex(2, {3, 4});
  GluingState d = GluingState::totally_exploded(two);
  CHECK(code([&] { d.apply_gluing_instruction(1, 2); }) == Errc::VoidInstruction);
  // A pseudomanifold pair glues.
  CHECK(code([&] { s.apply_pseudomanifold_gluing(2, 4); }) == Errc::Io);
  CHECK(s.copy_in(g.id_of("l"), 2).tops == std::vector<TopId>{2, 4});
}

TEST_CASE("FIX-C: thirty pseudomanifold instructions rebuild the complex") {
  const auto c = fixture("fix_c.tv");
  CHECK(c.complex.num_tops() == 27);
  bool ok = false;
  GluingState st = GluingState::totally_exploded(c.complex);
  const std::string out = run(c, "fix_c.glue", &ok, &st);
  CHECK(ok);
  CHECK(out == "isomorphic\n");
  CHECK(st.splitting_vertices().empty());
  // Oracle: the rebuilt complex relabels onto the source through sigma.
  const CopyComplex cc = st.current_decomposition();
  std::set<Simplex> a, b;
  cc.complex.for_each_top([&](TopId, const Simplex& s) {
    std::vector<VertexId> img;
    for (VertexId v : s) img.push_back(cc.sigma.at(v));
    a.insert(make_simplex(img));
  });
  c.complex.for_each_top([&](TopId, const Simplex& s) { b.insert(s); });
  CHECK(a == b);
}

TEST_CASE("FIX-C partial script leaves three cavity tetrahedra apart") {
  const auto c = fixture("fix_c.tv");
  bool ok = false;
  GluingState st = GluingState::totally_exploded(c.complex);
  run(c, "fix_c_partial.glue", &ok, &st);
  CHECK(ok);
  CHECK_FALSE(st.splitting_vertices().empty());
  const CopyComplex cc = st.current_decomposition();
  for (const auto& [f, n] : face_orders(cc.complex, 2)) CHECK(n <= 2);
  for (TopId t : {34u, 35u, 36u}) {
    for (VertexId v : cc.complex.simplex(t)) CHECK(cc.complex.incident_tops(v) == std::vector<TopId>{t});
  }
}

TEST_CASE("script diagnostics are line numbered") {
  const auto g = fixture("fix_g.tv");
  std::ostringstream out;
  std::istringstream bad("explode\nveq 1 2 zz\n");
  CHECK_FALSE(run_glue_script(g, bad, out));
  CHECK(out.str().rfind("line 2:", 0) == 0);
  std::istringstream early("glue 1 2\n");
  std::ostringstream out2;
  CHECK_FALSE(run_glue_script(g, early, out2));
  std::istringstream failing("explode\nassert-iso\n");
  std::ostringstream out3;
  CHECK_FALSE(run_glue_script(g, failing, out3));
  CHECK(out3.str().find("splitting vertices") != std::string::npos);
}
