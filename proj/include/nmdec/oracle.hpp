#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "nmdec/complex.hpp"

// Brute-force references. Nothing here touches the main data structures
// beyond Complex, so agreement between the two paths is meaningful.
namespace nmdec::oracle {

// All m-faces of the complex containing gamma.
std::vector<Simplex> snm(const Complex& source, const Simplex& gamma, int m);

struct Decomposition {
  Complex decomposed;                 // source top ids, copy vertex ids
  std::map<VertexId, VertexId> sigma;  // copy -> original, identity included
};

// Explode, glue every pair of h-tops across an (h-1)-face of order two, read
// the vertex classes.
Decomposition decompose(const Complex& source);

// One entry per vertex copy: (original, tops incident to the copy). Two
// decompositions of the same source agree iff their signatures agree.
using Signature = std::set<std::pair<VertexId, std::vector<TopId>>>;
Signature signature(const Complex& decomposed, const std::map<VertexId, VertexId>& sigma);

// Relabels a through the map and compares top vertex sets with b.
bool labeled_isomorphic(const Complex& a, const Complex& b, const std::map<VertexId, VertexId>& relabel);

// f-vector: number of k-simplices for k = 0..dim.
std::vector<std::size_t> face_numbers(const Complex& c);

// Deterministic random complex: up to max_tops tops of dimension <= d, built
// from disjoint tops by random vertex identifications that keep it simplicial.
Complex random_complex(std::uint64_t seed, std::size_t max_tops, int d);

// Solid box of nx*ny*nz cubes, six tetrahedra per cube (a 3-ball).
Complex grid_ball(int nx, int ny, int nz);

}  // namespace nmdec::oracle
