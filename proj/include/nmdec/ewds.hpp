#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>

#include "nmdec/decomposer.hpp"

namespace nmdec {

// Packed top index, or one of the two markers below.
using TopRef = std::uint32_t;
inline constexpr TopRef kBoundary = 0;             // no adjacency
inline constexpr TopRef kNonManifold = 0xFFFFFFFFu;  // strict mode, face of order >= 3

enum class TtMode { Strict, Circular };

// Global extended winged structure over all components of a decomposition.
// Tops are packed 1..NT' by component dimension, then source id; vertices are
// packed 1..NV' by ascending copy id. Arrays are 1-based: slot 0 is unused so
// the addressing formulas read as written.
struct Ewds {
  int d = -1;
  std::size_t nt = 0;
  std::size_t nv = 0;
  std::size_t size = 0;
  std::vector<std::size_t> tbase;       // [0..d+1]
  std::vector<std::size_t> tbase_addr;  // [0..d+1]
  std::vector<VertexId> tvp;            // [1..size]
  std::vector<TopRef> ttp;              // [1..size]
  std::vector<TopRef> vtstar;           // [1..nv]
  TtMode mode = TtMode::Circular;
  bool tt_filled = false;

  std::vector<TopId> top_label;        // packed -> source top id
  std::vector<VertexId> vertex_label;  // packed -> copy id
  std::unordered_map<TopId, TopRef> top_packed;
  std::unordered_map<VertexId, VertexId> vertex_packed;

  // k is 1-based.
  std::size_t addr(int h, TopRef t, int k) const { return tbase_addr[h] + (t - tbase[h]) * (h + 1) + k - 1; }
  int dim_of_top(TopRef t) const;
  std::span<const VertexId> row(TopRef t) const;
  std::span<const TopRef> tt_row(TopRef t) const;
  Simplex row_set(TopRef t) const;
  TopRef pack_top(TopId t) const;
  VertexId pack_vertex(VertexId v) const;
};

// Per-caller scratch: visit bits plus an operation counter.
struct Scratch {
  std::vector<std::uint8_t> mark;
  std::uint64_t ops = 0;
};

Ewds build_ewds(const DecompositionResult& dec);
void fill_tt(Ewds& e);
void fill_tt_circular(Ewds& e);
Ewds make_ewds(const DecompositionResult& dec, TtMode mode);

// Within-component queries on packed ids.
std::vector<TopRef> s0h(const Ewds& e, VertexId v, Scratch& sc);
std::vector<Simplex> snm_within(const Ewds& e, const Simplex& gamma, int m, Scratch& sc);
std::vector<Simplex> face_of(int m, const Simplex& beta, const std::vector<Simplex>& cotop, std::uint64_t* ops = nullptr);

// Slot of t opposite to face psi, 1-based; 0 when psi is not a facet of t.
int opposite(const Ewds& e, TopRef t, const Simplex& psi);

}  // namespace nmdec
