#include "nmdec/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace nmdec {

namespace {

const std::vector<TopId> kNoTops;

void sorted_insert(std::vector<TopId>& v, TopId t) {
  v.insert(std::lower_bound(v.begin(), v.end(), t), t);
}

}  // namespace

void Complex::add_simplex(TopId id, std::vector<VertexId> slots) {
  if (tops_.count(id) || retired_.count(id)) throw Error(Errc::DuplicateId, "top id " + std::to_string(id));
  if (slots.empty()) throw Error(Errc::NotTop, "empty simplex for top " + std::to_string(id));
  Simplex sorted = make_simplex(slots);
  if (sorted.size() != slots.size()) throw Error(Errc::NotTop, "repeated vertex in top " + std::to_string(id));
  for (TopId t : incident_tops(sorted.front())) {
    if (is_subset(sorted, tops_.at(t).sorted))
      throw Error(Errc::NotTop, to_string(sorted) + " is a face of top " + std::to_string(t));
  }
  std::vector<TopId> dominated;
  for (VertexId v : sorted) {
    for (TopId t : incident_tops(v)) {
      if (is_subset(tops_.at(t).sorted, sorted)) dominated.push_back(t);
    }
  }
  std::sort(dominated.begin(), dominated.end());
  dominated.erase(std::unique(dominated.begin(), dominated.end()), dominated.end());
  for (TopId t : dominated) {
    erase(t);
    retired_.insert(t);
  }
  insert(id, std::move(slots), std::move(sorted));
}

void Complex::add_top_unchecked(TopId id, std::vector<VertexId> slots) {
  if (tops_.count(id)) throw Error(Errc::DuplicateId, "top id " + std::to_string(id));
  Simplex sorted = make_simplex(slots);
  if (sorted.empty() || sorted.size() != slots.size())
    throw Error(Errc::NotTop, "malformed top " + std::to_string(id));
  insert(id, std::move(slots), std::move(sorted));
}

void Complex::insert(TopId id, std::vector<VertexId> slots, Simplex sorted) {
  for (VertexId v : sorted) sorted_insert(vt_[v], id);
  ++dim_count_[dim_of(sorted)];
  tops_.emplace(id, Entry{std::move(slots), std::move(sorted)});
}

void Complex::erase(TopId id) {
  auto it = tops_.find(id);
  for (VertexId v : it->second.sorted) {
    auto& list = vt_[v];
    list.erase(std::lower_bound(list.begin(), list.end(), id));
    if (list.empty()) vt_.erase(v);
  }
  auto dc = dim_count_.find(dim_of(it->second.sorted));
  if (--dc->second == 0) dim_count_.erase(dc);
  tops_.erase(it);
}

std::vector<TopId> Complex::top_ids() const {
  std::vector<TopId> out;
  out.reserve(tops_.size());
  for (const auto& kv : tops_) out.push_back(kv.first);
  return out;
}

std::vector<VertexId> Complex::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vt_.size());
  for (const auto& kv : vt_) out.push_back(kv.first);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<VertexId>& Complex::slots(TopId id) const {
  auto it = tops_.find(id);
  if (it == tops_.end()) throw Error(Errc::UnknownTop, std::to_string(id));
  return it->second.slots;
}

const Simplex& Complex::simplex(TopId id) const {
  auto it = tops_.find(id);
  if (it == tops_.end()) throw Error(Errc::UnknownTop, std::to_string(id));
  return it->second.sorted;
}

const std::vector<TopId>& Complex::incident_tops(VertexId v) const {
  auto it = vt_.find(v);
  return it == vt_.end() ? kNoTops : it->second;
}

int Complex::dim() const { return dim_count_.empty() ? -1 : dim_count_.rbegin()->first; }

VertexId Complex::max_vertex() const {
  VertexId m = 0;
  for (const auto& kv : vt_) m = std::max(m, kv.first);
  return m;
}

TopId Complex::max_top() const { return tops_.empty() ? 0 : tops_.rbegin()->first; }

std::vector<TopId> star(const Complex& c, const Simplex& gamma) {
  if (gamma.empty()) return c.top_ids();
  const std::vector<TopId>* best = nullptr;
  for (VertexId v : gamma) {
    const auto& l = c.incident_tops(v);
    if (!best || l.size() < best->size()) best = &l;
  }
  std::vector<TopId> out;
  for (TopId t : *best) {
    if (is_subset(gamma, c.simplex(t))) out.push_back(t);
  }
  return out;
}

std::vector<Simplex> link(const Complex& c, const Simplex& gamma) {
  auto st = star(c, gamma);
  if (st.empty()) throw Error(Errc::NotAFace, to_string(gamma));
  std::vector<Simplex> out;
  for (TopId t : st) {
    Simplex rest = set_difference(c.simplex(t), gamma);
    if (!rest.empty()) out.push_back(std::move(rest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t order_of(const Complex& c, const Simplex& gamma) { return star(c, gamma).size(); }

std::vector<Simplex> faces(const Complex& c, int k) {
  std::unordered_set<Simplex, SimplexHash> seen;
  c.for_each_top([&](TopId, const Simplex& s) { for_each_face(s, k, [&](const Simplex& f) { seen.insert(f); }); });
  std::vector<Simplex> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::unordered_map<Simplex, std::size_t, SimplexHash> face_orders(const Complex& c, int k) {
  std::unordered_map<Simplex, std::size_t, SimplexHash> out;
  c.for_each_top([&](TopId, const Simplex& s) { for_each_face(s, k, [&](const Simplex& f) { ++out[f]; }); });
  return out;
}

namespace {

Partition collect(const std::vector<TopId>& ids, UnionFind& uf) {
  std::map<std::size_t, std::vector<TopId>> classes;
  for (std::size_t i = 0; i < ids.size(); ++i) classes[uf.find(i)].push_back(ids[i]);
  Partition out;
  for (auto& kv : classes) {
    std::sort(kv.second.begin(), kv.second.end());
    out.push_back(std::move(kv.second));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Joins tops of the same dimension h sharing an (h-1)-face; when
// manifold_only is set the shared face must have order <= 2 in c.
Partition star_classes(const Complex& c, const std::vector<TopId>& ids, bool manifold_only) {
  UnionFind uf(ids.size());
  std::unordered_map<Simplex, std::size_t, SimplexHash> first;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Simplex& s = c.simplex(ids[i]);
    const int h = dim_of(s);
    if (h < 1) continue;
    for_each_face(s, h - 1, [&](const Simplex& f) {
      Simplex key = f;
      key.push_back(static_cast<VertexId>(h));  // keep dimensions apart
      auto [it, fresh] = first.emplace(std::move(key), i);
      if (fresh) return;
      if (manifold_only && order_of(c, f) > 2) return;
      uf.unite(it->second, i);
    });
  }
  return collect(ids, uf);
}

bool is_path_or_cycle(const std::vector<Simplex>& edges) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : edges) {
    if (e.size() != 2) return false;
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  if (adj.empty()) return false;
  for (const auto& kv : adj) {
    if (kv.second.size() > 2) return false;
  }
  std::set<VertexId> seen{adj.begin()->first};
  std::vector<VertexId> stack{adj.begin()->first};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v]) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == adj.size();
}

}  // namespace

Partition h_connected_components(const Complex& c, int h) {
  auto ids = c.top_ids();
  UnionFind uf(ids.size());
  std::unordered_map<Simplex, std::size_t, SimplexHash> first;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for_each_face(c.simplex(ids[i]), h, [&](const Simplex& f) {
      auto [it, fresh] = first.emplace(f, i);
      if (!fresh) uf.unite(it->second, i);
    });
  }
  return collect(ids, uf);
}

Partition manifold_connected_components_of_star(const Complex& c, const Simplex& gamma) {
  auto st = star(c, gamma);
  if (st.empty()) throw Error(Errc::NotAFace, to_string(gamma));
  return star_classes(c, st, true);
}

SurfaceInfo classify_surface(const std::vector<Simplex>& triangles) {
  SurfaceInfo info;
  std::map<Simplex, std::vector<std::size_t>> edge_tris;
  std::map<VertexId, std::vector<Simplex>> vertex_link;
  std::set<VertexId> verts;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const Simplex& t = triangles[i];
    if (t.size() != 3) {
      info.pure = false;
      return info;
    }
    for (VertexId v : t) verts.insert(v);
    for_each_face(t, 1, [&](const Simplex& e) { edge_tris[e].push_back(i); });
    vertex_link[t[0]].push_back({t[1], t[2]});
    vertex_link[t[1]].push_back({t[0], t[2]});
    vertex_link[t[2]].push_back({t[0], t[1]});
  }
  if (triangles.empty()) return info;
  info.euler = static_cast<long>(verts.size()) - static_cast<long>(edge_tris.size()) +
               static_cast<long>(triangles.size());

  info.pseudo_surface = true;
  for (const auto& kv : edge_tris) {
    if (kv.second.size() > 2) info.pseudo_surface = false;
  }
  for (const auto& kv : vertex_link) {
    if (!is_path_or_cycle(kv.second)) info.pseudo_surface = false;
  }

  UnionFind uf(triangles.size());
  for (const auto& kv : edge_tris) {
    for (std::size_t j = 1; j < kv.second.size(); ++j) uf.unite(kv.second[0], kv.second[j]);
  }
  std::map<VertexId, std::size_t> vroot;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    for (VertexId v : triangles[i]) {
      auto [it, fresh] = vroot.emplace(v, i);
      if (!fresh) uf.unite(it->second, i);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < triangles.size(); ++i) roots.insert(uf.find(i));
  info.connected = roots.size() == 1;

  // Boundary edges form disjoint cycles on a pseudo-surface; count them.
  std::vector<Simplex> bedges;
  for (const auto& kv : edge_tris) {
    if (kv.second.size() == 1) bedges.push_back(kv.first);
  }
  if (!bedges.empty()) {
    std::map<VertexId, std::size_t> idx;
    for (const auto& e : bedges) {
      for (VertexId v : e) idx.emplace(v, idx.size());
    }
    UnionFind buf(idx.size());
    for (const auto& e : bedges) buf.unite(idx[e[0]], idx[e[1]]);
    std::set<std::size_t> broots;
    for (const auto& kv : idx) broots.insert(buf.find(kv.second));
    info.boundary_cycles = broots.size();
  }

  // Orientation propagation: the edge (x<y) inherits direction +1 from the
  // sorted triangle (a,b,c) when it is ab or bc, -1 when it is ac.
  auto base = [](const Simplex& t, const Simplex& e) { return (e[0] == t[0] && e[1] == t[2]) ? -1 : 1; };
  std::vector<int> sign(triangles.size(), 0);
  info.orientable = info.pseudo_surface;
  for (std::size_t s = 0; s < triangles.size() && info.orientable; ++s) {
    if (sign[s]) continue;
    sign[s] = 1;
    std::vector<std::size_t> stack{s};
    while (!stack.empty() && info.orientable) {
      std::size_t i = stack.back();
      stack.pop_back();
      for_each_face(triangles[i], 1, [&](const Simplex& e) {
        const auto& adj = edge_tris[e];
        if (adj.size() != 2) return;
        std::size_t j = adj[0] == i ? adj[1] : adj[0];
        int want = -sign[i] * base(triangles[i], e) * base(triangles[j], e);
        if (!sign[j]) {
          sign[j] = want;
          stack.push_back(j);
        } else if (sign[j] != want) {
          info.orientable = false;
        }
      });
    }
  }
  return info;
}

bool is_manifold_vertex(const Complex& c, VertexId v) {
  const int d = c.dim();
  if (d > 3) throw Error(Errc::DimensionUnsupported, "manifold test for d > 3");
  const auto& st = c.incident_tops(v);
  if (st.empty()) throw Error(Errc::UnknownVertex, std::to_string(v));
  for (TopId t : st) {
    if (c.dim_of_top(t) != d) return false;
  }
  if (d == 0) return true;
  auto lk = link(c, {v});
  if (d == 1) return lk.size() == 1 || lk.size() == 2;
  if (d == 2) return is_path_or_cycle(lk);
  SurfaceInfo s = classify_surface(lk);
  return s.is_sphere() || s.is_disk();
}

Classification classify(const Complex& c) {
  Classification out;
  if (c.empty()) return out;
  const int d = c.dim();
  out.regular = true;
  c.for_each_top([&](TopId, const Simplex& s) {
    if (dim_of(s) != d) out.regular = false;
  });
  if (!out.regular) {
    if (d <= 3) out.manifold_le3 = false;
    return out;
  }
  const auto verts = c.vertices();

  bool orders_ok = true;
  if (d >= 1) {
    for (const auto& kv : face_orders(c, d - 1)) {
      if (kv.second > 2) orders_ok = false;
    }
  }
  const bool connected = d == 0 ? c.num_tops() == 1 : h_connected_components(c, d - 1).size() == 1;
  out.pseudomanifold = orders_ok && connected;

  bool stars_connected = true;
  bool stars_manifold = true;
  for (VertexId v : verts) {
    const auto& st = c.incident_tops(v);
    if (star_classes(c, st, false).size() > 1) stars_connected = false;
    if (star_classes(c, st, true).size() > 1) stars_manifold = false;
  }
  out.quasi_manifold = out.pseudomanifold && stars_connected;
  out.iqm = stars_manifold;

  if (d <= 3) {
    bool m = true;
    for (VertexId v : verts) {
      if (!is_manifold_vertex(c, v)) {
        m = false;
        break;
      }
    }
    out.manifold_le3 = m;
  }
  return out;
}

std::vector<Simplex> boundary(const Complex& c) {
  const int d = c.dim();
  bool regular = true;
  c.for_each_top([&](TopId, const Simplex& s) {
    if (dim_of(s) != d) regular = false;
  });
  if (!regular) throw Error(Errc::NotRegular, "boundary needs a regular complex");
  std::vector<Simplex> out;
  if (d < 1) return out;
  for (const auto& kv : face_orders(c, d - 1)) {
    if (kv.second == 1) out.push_back(kv.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long euler_characteristic(const Complex& c) {
  if (c.dim() != 2) throw Error(Errc::NotClosedSurface, "not a 2-complex");
  bool regular = true;
  c.for_each_top([&](TopId, const Simplex& s) {
    if (dim_of(s) != 2) regular = false;
  });
  if (!regular) throw Error(Errc::NotClosedSurface, "not regular");
  auto edges = face_orders(c, 1);
  for (const auto& kv : edges) {
    if (kv.second != 2) throw Error(Errc::NotClosedSurface, "edge " + to_string(kv.first) + " has order " + std::to_string(kv.second));
  }
  return static_cast<long>(c.num_vertices()) - static_cast<long>(edges.size()) + static_cast<long>(c.num_tops());
}

}  // namespace nmdec
