#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <utility>

#include "nmdec/complex.hpp"
#include "nmdec/io.hpp"

namespace nmdec {

// One copy of a source vertex and the tops it currently belongs to.
struct VertexCopy {
  VertexId vertex = 0;
  std::vector<TopId> tops;
  bool operator==(const VertexCopy&) const = default;
};

// A complex whose vertices are copies of source vertices.
struct CopyComplex {
  Complex complex;
  std::map<VertexId, VertexId> sigma;  // copy -> source vertex
};

// Vertex equations over the totally exploded complex. Every (vertex, top)
// incidence starts as its own copy; equations merge copies of one vertex.
class GluingState {
 public:
  static GluingState totally_exploded(const Complex& c);

  void apply_vertex_equation(TopId t1, TopId t2, VertexId v);
  void apply_gluing_instruction(TopId t1, TopId t2);
  // Requires the shared face to be a codimension-one face of both tops with
  // order 2 in the source.
  void apply_pseudomanifold_gluing(TopId t1, TopId t2);

  std::vector<VertexId> splitting_vertices() const;
  std::vector<VertexCopy> copies() const;
  std::vector<VertexCopy> copies_of(VertexId v) const;
  // Copy whose top set contains t.
  VertexCopy copy_in(VertexId v, TopId t) const;
  // First copy of each vertex keeps its id; further copies are numbered
  // above the source's maximum vertex, by vertex then by smallest top.
  CopyComplex current_decomposition() const;
  bool is_isomorphic_to_source() const { return splitting_vertices().empty(); }
  const Complex& source() const { return *src_; }

 private:
  std::size_t index(VertexId v, TopId t) const;

  std::shared_ptr<const Complex> src_;
  std::map<std::pair<VertexId, TopId>, std::size_t> index_;
  std::vector<std::pair<VertexId, TopId>> pairs_;
  mutable UnionFind uf_;
};

// Runs a glue script (explode, veq, glue, pmglue, assert-iso, assert-split,
// dump) against lc. Diagnostics and dumps go to out; returns false on the
// first failing line.
bool run_glue_script(const LabeledComplex& lc, std::istream& script, std::ostream& out,
                     GluingState* final_state = nullptr);

void dump_state(std::ostream& out, const GluingState& s, const LabeledComplex& lc);

}  // namespace nmdec
