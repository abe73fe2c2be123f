#pragma once

#include <map>
#include <set>

#include "nmdec/complex.hpp"
#include "nmdec/gluing.hpp"

namespace nmdec {

struct SigmaMap {
  std::map<VertexId, VertexId> to_original;             // every copy, identity included
  std::map<VertexId, std::vector<VertexId>> copies;     // original -> copies, ascending

  VertexId sigma(VertexId copy) const;
  Simplex sigma(const Simplex& s) const;  // image, sorted
  const std::vector<VertexId>& inverse(VertexId original) const;  // throws UnknownVertex
  bool is_splitting(VertexId original) const { return inverse(original).size() > 1; }
  std::size_t splitting_count() const;  // NS
  std::size_t copy_count() const;       // NC: copies of splitting vertices
};

struct DecompositionResult {
  // Components ordered by dimension, then by smallest top id. They keep the
  // source top ids; vertex ids are copies.
  std::vector<Complex> components;
  SigmaMap sigma;
  std::vector<std::size_t> cc;  // components per dimension, index 0..d
  Complex decomposed;           // union of the components
};

DecompositionResult decompose(const Complex& c);

// Pairs {t1,t2} of h-tops whose intersection is an (h-1)-face with star {t1,t2}.
std::set<std::pair<TopId, TopId>> canonical_pairs(const Complex& c);

// Explode, apply every canonical pair, read the components.
DecompositionResult decompose_via_oracle(const Complex& c);

// Builds the result bookkeeping from a complex on vertex copies.
DecompositionResult assemble_decomposition(const Complex& decomposed, const std::map<VertexId, VertexId>& copy_to_original);

}  // namespace nmdec
