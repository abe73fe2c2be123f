#pragma once

#include <optional>

#include "nmdec/ewds.hpp"
#include "nmdec/ft_trie.hpp"

namespace nmdec {

enum class VnraMode { Auto, All };

struct NmwdsStats {
  std::size_t ns = 0;   // splitting vertices
  std::size_t nc = 0;   // copies of splitting vertices
  std::size_t nsp = 0;  // tops incident to a V_NRA vertex
  std::size_t nt = 0;   // tops of the decomposition
  int d = -1;
  double phi = 0;
  double info_bound = 0;
};

// Non-manifold layer over the decomposition: sigma maps, splitmap and an
// optional trie. Immutable after build; queries take caller-owned scratch.
// Public ids are source top ids and copy vertex ids; packing stays internal.
// The underlying EWDS always uses circular TT so that stars are complete
// around faces of any order.
class Nmwds {
 public:
  static Nmwds build(const Complex& source, VnraMode vnra = VnraMode::Auto, bool with_trie = true);

  const Complex& source() const { return source_; }
  const DecompositionResult& decomposition() const { return dec_; }
  const Ewds& ewds() const { return ewds_; }
  const SigmaMap& sigma() const { return dec_.sigma; }
  const SplitMap& splitmap() const { return splitmap_; }
  const FtTrie* trie() const { return trie_ ? &*trie_ : nullptr; }
  const std::vector<VertexId>& vnra() const { return vnra_; }

  // The (h-1)-connected piece of star(gamma_copy) containing t.
  std::vector<TopId> travel_star(const Simplex& gamma_copy, TopId t) const;
  std::vector<Simplex> s0m_global(VertexId v, int m, Scratch& sc) const;
  std::vector<TopId> snh_given(const Simplex& gamma_copy, TopId t, Scratch& sc) const;
  Simplex sigma_n_inverse(const Simplex& gamma, TopId t) const;
  std::vector<Simplex> snm_given(const Simplex& gamma, TopId t, int m, Scratch& sc) const;
  std::vector<Simplex> snm_global(const Simplex& gamma, int m, Scratch& sc) const;

  NmwdsStats stats() const;

 private:
  void build_splitmap(const std::vector<VertexId>& vnra);
  std::size_t index_of(TopRef t, const Simplex& gamma_copy) const;
  void check_incident(const Simplex& gamma_copy, TopRef t) const;
  std::vector<TopRef> flood(const Simplex& gamma_copy, std::vector<TopRef> seeds, Scratch& sc) const;
  std::vector<Simplex> finish(int m, const Simplex& gamma, const std::vector<TopRef>& tops, Scratch& sc) const;

  Complex source_;
  DecompositionResult dec_;
  Ewds ewds_;
  SplitMap splitmap_;
  std::optional<FtTrie> trie_;
  std::vector<VertexId> vnra_;
  std::unordered_map<VertexId, int> copy_dim_;  // copy -> dimension of its component
};

}  // namespace nmdec
