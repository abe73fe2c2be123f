#include "nmdec/gluing.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace nmdec {

GluingState GluingState::totally_exploded(const Complex& c) {
  GluingState s;
  s.src_ = std::make_shared<const Complex>(c);
  c.for_each_top([&](TopId t, const Simplex& sx) {
    for (VertexId v : sx) s.pairs_.emplace_back(v, t);
  });
  std::sort(s.pairs_.begin(), s.pairs_.end());
  for (std::size_t i = 0; i < s.pairs_.size(); ++i) s.index_.emplace(s.pairs_[i], i);
  s.uf_ = UnionFind(s.pairs_.size());
  return s;
}

std::size_t GluingState::index(VertexId v, TopId t) const {
  auto it = index_.find({v, t});
  if (it == index_.end()) throw Error(Errc::NotSharedVertex, "vertex " + std::to_string(v) + " not in top " + std::to_string(t));
  return it->second;
}

void GluingState::apply_vertex_equation(TopId t1, TopId t2, VertexId v) {
  for (TopId t : {t1, t2}) {
    if (!src_->has_top(t)) throw Error(Errc::UnknownTop, std::to_string(t));
  }
  uf_.unite(index(v, t1), index(v, t2));
}

void GluingState::apply_gluing_instruction(TopId t1, TopId t2) {
  for (TopId t : {t1, t2}) {
    if (!src_->has_top(t)) throw Error(Errc::UnknownTop, std::to_string(t));
  }
  Simplex shared = set_intersection(src_->simplex(t1), src_->simplex(t2));
  if (shared.empty()) throw Error(Errc::VoidInstruction, std::to_string(t1) + " and " + std::to_string(t2) + " are disjoint");
  for (VertexId v : shared) apply_vertex_equation(t1, t2, v);
}

void GluingState::apply_pseudomanifold_gluing(TopId t1, TopId t2) {
  for (TopId t : {t1, t2}) {
    if (!src_->has_top(t)) throw Error(Errc::UnknownTop, std::to_string(t));
  }
  const Simplex& a = src_->simplex(t1);
  const Simplex& b = src_->simplex(t2);
  Simplex shared = set_intersection(a, b);
  const int h = dim_of(a);
  if (t1 == t2 || dim_of(b) != h || dim_of(shared) != h - 1 || order_of(*src_, shared) != 2)
    throw Error(Errc::NotPseudomanifoldPair, std::to_string(t1) + " and " + std::to_string(t2));
  apply_gluing_instruction(t1, t2);
}

std::vector<VertexCopy> GluingState::copies() const {
  std::map<std::size_t, VertexCopy> by_root;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    auto& c = by_root[uf_.find(i)];
    c.vertex = pairs_[i].first;
    c.tops.push_back(pairs_[i].second);
  }
  // Roots are the smallest index of each class, so this is (vertex, min top) order.
  std::vector<VertexCopy> out;
  out.reserve(by_root.size());
  for (auto& kv : by_root) out.push_back(std::move(kv.second));
  return out;
}

std::vector<VertexCopy> GluingState::copies_of(VertexId v) const {
  std::vector<VertexCopy> out;
  for (auto& c : copies()) {
    if (c.vertex == v) out.push_back(std::move(c));
  }
  return out;
}

VertexCopy GluingState::copy_in(VertexId v, TopId t) const {
  const std::size_t root = uf_.find(index(v, t));
  VertexCopy c{v, {}};
  auto lo = index_.lower_bound({v, 0});
  for (auto it = lo; it != index_.end() && it->first.first == v; ++it) {
    if (uf_.find(it->second) == root) c.tops.push_back(it->first.second);
  }
  return c;
}

std::vector<VertexId> GluingState::splitting_vertices() const {
  std::vector<VertexId> out;
  VertexId prev = 0;
  bool have_prev = false;
  for (const auto& c : copies()) {
    if (have_prev && c.vertex == prev && (out.empty() || out.back() != prev)) out.push_back(prev);
    prev = c.vertex;
    have_prev = true;
  }
  return out;
}

CopyComplex GluingState::current_decomposition() const {
  CopyComplex out;
  VertexId next = src_->max_vertex() + 1;
  std::map<std::size_t, VertexId> id_of_root;
  VertexId prev = 0;
  bool have_prev = false;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const std::size_t r = uf_.find(i);
    if (id_of_root.count(r)) continue;
    const VertexId v = pairs_[i].first;
    const VertexId id = (have_prev && prev == v) ? next++ : v;
    prev = v;
    have_prev = true;
    id_of_root[r] = id;
    out.sigma[id] = v;
  }
  for (TopId t : src_->top_ids()) {
    std::vector<VertexId> slots;
    for (VertexId v : src_->slots(t)) slots.push_back(id_of_root.at(uf_.find(index(v, t))));
    out.complex.add_top_unchecked(t, std::move(slots));
  }
  return out;
}

void dump_state(std::ostream& out, const GluingState& s, const LabeledComplex& lc) {
  for (TopId t : s.source().top_ids()) {
    out << "simplex " << t << "=[ ";
    for (VertexId v : s.source().slots(t)) {
      VertexCopy c = s.copy_in(v, t);
      out << lc.label(v) << "-[";
      for (std::size_t i = 0; i < c.tops.size(); ++i) out << (i ? "," : "") << c.tops[i];
      out << "] ";
    }
    out << "]\n";
  }
  out << '\n';
}

bool run_glue_script(const LabeledComplex& lc, std::istream& script, std::ostream& out, GluingState* final_state) {
  std::optional<GluingState> state;
  std::string text;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    out << "line " << lineno << ": " << msg << '\n';
    if (final_state && state) *final_state = *state;
    return false;
  };
  auto read_top = [](std::istringstream& ss) -> TopId {
    std::string tok;
    if (!(ss >> tok) || tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
      throw Error(Errc::ParseError, "expected a top id");
    return static_cast<TopId>(std::stoul(tok));
  };
  while (std::getline(script, text)) {
    ++lineno;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    std::string cmd;
    if (!(ss >> cmd)) continue;
    try {
      if (cmd == "explode") {
        state = GluingState::totally_exploded(lc.complex);
        continue;
      }
      if (!state) return fail("'" + cmd + "' before 'explode'");
      if (cmd == "veq") {
        TopId t1 = read_top(ss), t2 = read_top(ss);
        std::string tok;
        if (!(ss >> tok)) throw Error(Errc::ParseError, "veq needs a vertex token");
        state->apply_vertex_equation(t1, t2, lc.id_of(tok));
      } else if (cmd == "glue") {
        TopId t1 = read_top(ss), t2 = read_top(ss);
        state->apply_gluing_instruction(t1, t2);
      } else if (cmd == "pmglue") {
        TopId t1 = read_top(ss), t2 = read_top(ss);
        state->apply_pseudomanifold_gluing(t1, t2);
      } else if (cmd == "dump") {
        dump_state(out, *state, lc);
      } else if (cmd == "assert-iso") {
        auto split = state->splitting_vertices();
        if (!split.empty()) {
          std::string names;
          for (VertexId v : split) names += " " + lc.label(v);
          return fail("assert-iso failed, splitting vertices:" + names);
        }
        out << "isomorphic\n";
      } else if (cmd == "assert-split") {
        std::string tok;
        if (!(ss >> tok)) throw Error(Errc::ParseError, "assert-split needs a vertex token");
        if (state->copies_of(lc.id_of(tok)).size() < 2) return fail("assert-split failed: " + tok + " has one copy");
        out << "splitted " << tok << '\n';
      } else {
        throw Error(Errc::ParseError, "unknown command '" + cmd + "'");
      }
    } catch (const Error& e) {
      return fail(e.what());
    }
  }
  if (final_state && state) *final_state = *state;
  return true;
}

}  // namespace nmdec
