#pragma once

#include "nmdec/ewds.hpp"

namespace nmdec {

// Renaming of packed vertices and tops that pairs each non-seed vertex with a
// top, so neither VT* nor the paired TV entries need storage.
struct Renumbering {
  int d = -1;
  std::vector<VertexId> fvv;       // [1..nv] old -> new
  std::vector<TopRef> ftt;         // [1..nt] old -> new
  std::vector<std::size_t> vbase;  // [0..d+1]
  std::vector<std::size_t> cc;     // [0..d]
  // Slot order after the swaps: perm[t][k-1] is the original slot now at k.
  std::vector<std::vector<int>> perm;  // [1..nt], old ids
  std::vector<VertexId> tvp;           // swapped, old names
  std::vector<TopRef> ttp;             // swapped, old names
  std::vector<bool> dontcopy;          // per address
};

struct ImplicitEwds {
  int d = -1;
  std::size_t nt = 0;
  std::size_t nv = 0;
  std::size_t size = 0;
  std::vector<std::size_t> tbase;       // [0..d+1]
  std::vector<std::size_t> tbase_addr;  // [0..d+1]
  std::vector<std::size_t> vbase;       // [0..d+1], vbase[d+1] = nv+1
  std::vector<std::size_t> cc;          // [0..d]
  std::vector<std::size_t> taddr;       // [0..d+1]
  std::vector<std::size_t> iibnd;       // [0..d]
  std::vector<std::size_t> iitaddr;     // [0..d]
  std::vector<VertexId> tvpp;           // [1..size-nv]
  std::vector<TopRef> ttpp;             // [1..size]

  std::size_t addr(int h, TopRef t, int k) const { return tbase_addr[h] + (t - tbase[h]) * (h + 1) + k - 1; }
};

// Throws NotIqm when a dimension cannot be fully paired through TT adjacency.
Renumbering compute_renumbering(const Ewds& e, const std::vector<std::size_t>& cc);
ImplicitEwds apply_renumbering(const Ewds& e, const Renumbering& r);
ImplicitEwds optimize(const Ewds& e, const std::vector<std::size_t>& cc);

VertexId implicit_tv_lookup(const ImplicitEwds& ie, int h, TopRef t, int k);
TopRef implicit_vtstar_lookup(const ImplicitEwds& ie, int h, VertexId v);

// The renamed plain arrays, for comparison against the implicit lookups.
struct RenamedEwds {
  std::vector<VertexId> tvp;  // [1..size], new names and new top order
  std::vector<TopRef> ttp;    // [1..size]
};
RenamedEwds renamed_plain(const Ewds& e, const Renumbering& r);

}  // namespace nmdec
