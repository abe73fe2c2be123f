#pragma once

#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "nmdec/types.hpp"

namespace nmdec {

// An abstract simplicial complex stored through its top simplices (TV relation).
// Each top keeps the vertex order it was given in ("slots"); set operations use
// the sorted view.
class Complex {
 public:
  // Checked insertion: rejects duplicate ids and faces of existing tops, retires
  // existing tops that are faces of the new one.
  void add_simplex(TopId id, std::vector<VertexId> slots);
  // Trusted insertion for internally generated complexes; only the id and
  // duplicate-vertex checks are performed.
  void add_top_unchecked(TopId id, std::vector<VertexId> slots);

  bool has_top(TopId id) const { return tops_.count(id) != 0; }
  bool has_vertex(VertexId v) const { return vt_.count(v) != 0; }
  bool empty() const { return tops_.empty(); }
  std::size_t num_tops() const { return tops_.size(); }
  std::size_t num_vertices() const { return vt_.size(); }

  std::vector<TopId> top_ids() const;
  std::vector<VertexId> vertices() const;
  const std::vector<VertexId>& slots(TopId id) const;
  const Simplex& simplex(TopId id) const;
  int dim_of_top(TopId id) const { return dim_of(simplex(id)); }
  // Incident tops of v in ascending id order; empty for unknown vertices.
  const std::vector<TopId>& incident_tops(VertexId v) const;
  // Maximum top dimension, -1 when empty.
  int dim() const;
  VertexId max_vertex() const;
  TopId max_top() const;

  template <class F>
  void for_each_top(F&& f) const {
    for (const auto& [id, e] : tops_) f(id, e.sorted);
  }

 private:
  struct Entry {
    std::vector<VertexId> slots;
    Simplex sorted;
  };
  void insert(TopId id, std::vector<VertexId> slots, Simplex sorted);
  void erase(TopId id);

  std::map<TopId, Entry> tops_;
  std::unordered_map<VertexId, std::vector<TopId>> vt_;
  std::set<TopId> retired_;
  std::map<int, std::size_t> dim_count_;
};

using Partition = std::vector<std::vector<TopId>>;

std::vector<TopId> star(const Complex& c, const Simplex& gamma);
std::vector<Simplex> link(const Complex& c, const Simplex& gamma);
std::size_t order_of(const Complex& c, const Simplex& gamma);

// All distinct k-faces of the complex, sorted.
std::vector<Simplex> faces(const Complex& c, int k);
// Number of tops containing each k-face.
std::unordered_map<Simplex, std::size_t, SimplexHash> face_orders(const Complex& c, int k);

// Classes sorted by smallest member; members ascending.
Partition h_connected_components(const Complex& c, int h);
Partition manifold_connected_components_of_star(const Complex& c, const Simplex& gamma);

struct Classification {
  bool regular = false;
  bool pseudomanifold = false;
  bool quasi_manifold = false;
  bool iqm = false;
  std::optional<bool> manifold_le3;  // nullopt when d > 3
};

Classification classify(const Complex& c);

// True when the link of v is a sphere or a ball of dimension dim(c)-1; only
// decidable for dim(c) <= 3 (throws DimensionUnsupported otherwise).
bool is_manifold_vertex(const Complex& c, VertexId v);

// Link surface classification of a pure 2-complex given by its triangles.
struct SurfaceInfo {
  bool pure = true;
  bool connected = false;
  bool pseudo_surface = false;  // edges of order <= 2 and vertex links are paths or cycles
  bool orientable = false;
  long euler = 0;
  std::size_t boundary_cycles = 0;
  bool is_sphere() const { return pseudo_surface && connected && boundary_cycles == 0 && euler == 2; }
  bool is_disk() const { return pseudo_surface && connected && boundary_cycles == 1 && euler == 1 && orientable; }
};
SurfaceInfo classify_surface(const std::vector<Simplex>& triangles);

std::vector<Simplex> boundary(const Complex& c);
long euler_characteristic(const Complex& c);

// Small union-find used across modules.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller root survives, which keeps representatives deterministic.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace nmdec
