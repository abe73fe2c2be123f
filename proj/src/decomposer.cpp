#include "nmdec/decomposer.hpp"

#include <algorithm>
#include <unordered_map>

namespace nmdec {

namespace {

struct Top {
  TopId id;
  Simplex verts;  // sorted, as in the input complex
};

struct SplitResult {
  std::vector<std::vector<VertexId>> slots;  // per input top, with copies substituted
  std::map<VertexId, VertexId> sigma;        // new copy -> vertex
  Partition components;
};

Partition connected_components(const std::vector<Top>& tops, const std::vector<std::vector<VertexId>>& slots) {
  UnionFind uf(tops.size());
  std::unordered_map<VertexId, std::size_t> first;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (VertexId v : slots[i]) {
      auto [it, fresh] = first.emplace(v, i);
      if (!fresh) uf.unite(it->second, i);
    }
  }
  std::map<std::size_t, std::vector<TopId>> classes;
  for (std::size_t i = 0; i < tops.size(); ++i) classes[uf.find(i)].push_back(tops[i].id);
  Partition out;
  for (auto& kv : classes) {
    std::sort(kv.second.begin(), kv.second.end());
    out.push_back(std::move(kv.second));
  }
  return out;
}

// The recursive splitting step. Vertices are examined in ascending order; the
// link is always taken in the input complex, never in the partially split one.
SplitResult split(const std::vector<Top>& tops, std::vector<std::vector<VertexId>> slots, VertexId next_id) {
  SplitResult res;
  int d = -1;
  for (const auto& t : tops) d = std::max(d, dim_of(t.verts));
  if (d > 0) {
    std::map<VertexId, std::vector<std::size_t>> vt;
    for (std::size_t i = 0; i < tops.size(); ++i) {
      for (VertexId v : tops[i].verts) vt[v].push_back(i);
    }
    std::unordered_map<TopId, std::size_t> pos;
    for (std::size_t i = 0; i < tops.size(); ++i) pos.emplace(tops[i].id, i);

    for (const auto& [v, star] : vt) {
      std::vector<Top> lk;
      int h = -1;
      for (std::size_t i : star) {
        Simplex rest;
        rest.reserve(tops[i].verts.size());
        for (VertexId w : tops[i].verts) {
          if (w != v) rest.push_back(w);
        }
        if (rest.empty()) continue;
        h = std::max(h, dim_of(rest));
        lk.push_back({tops[i].id, std::move(rest)});
      }
      if (lk.empty()) continue;
      std::vector<std::vector<VertexId>> lk_slots;
      lk_slots.reserve(lk.size());
      VertexId lk_next = 0;
      for (const auto& t : lk) {
        lk_slots.push_back(t.verts);
        lk_next = std::max(lk_next, t.verts.back());
      }
      Partition parts = split(lk, std::move(lk_slots), lk_next + 1).components;
      const bool must_split = (h > 0 && parts.size() > 1) || (h == 0 && parts.size() > 2);
      if (!must_split) continue;

      // Lower-dimensional pieces first, then by discovery (smallest top).
      std::unordered_map<TopId, int> lk_dim;
      for (const auto& t : lk) lk_dim.emplace(t.id, dim_of(t.verts));
      std::vector<std::pair<int, std::size_t>> order;
      for (std::size_t p = 0; p < parts.size(); ++p) {
        int pd = -1;
        for (TopId t : parts[p]) pd = std::max(pd, lk_dim.at(t));
        order.emplace_back(pd, p);
      }
      std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : parts[a.second].front() < parts[b.second].front();
      });
      for (std::size_t k = 1; k < order.size(); ++k) {
        const VertexId copy = next_id++;
        res.sigma[copy] = v;
        for (TopId t : parts[order[k].second]) {
          auto& row = slots[pos.at(t)];
          std::replace(row.begin(), row.end(), v, copy);
        }
      }
    }
  }
  res.components = connected_components(tops, slots);
  res.slots = std::move(slots);
  return res;
}

}  // namespace

VertexId SigmaMap::sigma(VertexId copy) const {
  auto it = to_original.find(copy);
  if (it == to_original.end()) throw Error(Errc::UnknownVertex, std::to_string(copy));
  return it->second;
}

Simplex SigmaMap::sigma(const Simplex& s) const {
  std::vector<VertexId> out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(sigma(v));
  return make_simplex(std::move(out));
}

const std::vector<VertexId>& SigmaMap::inverse(VertexId original) const {
  auto it = copies.find(original);
  if (it == copies.end()) throw Error(Errc::UnknownVertex, std::to_string(original));
  return it->second;
}

std::size_t SigmaMap::splitting_count() const {
  std::size_t n = 0;
  for (const auto& kv : copies) n += kv.second.size() > 1;
  return n;
}

std::size_t SigmaMap::copy_count() const {
  std::size_t n = 0;
  for (const auto& kv : copies) {
    if (kv.second.size() > 1) n += kv.second.size();
  }
  return n;
}

DecompositionResult assemble_decomposition(const Complex& decomposed, const std::map<VertexId, VertexId>& copy_to_original) {
  DecompositionResult res;
  res.decomposed = decomposed;
  for (VertexId v : decomposed.vertices()) {
    auto it = copy_to_original.find(v);
    const VertexId orig = it == copy_to_original.end() ? v : it->second;
    res.sigma.to_original[v] = orig;
    res.sigma.copies[orig].push_back(v);
  }
  Partition parts = h_connected_components(decomposed, 0);
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t p = 0; p < parts.size(); ++p) order.emplace_back(decomposed.dim_of_top(parts[p].front()), p);
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : parts[a.second].front() < parts[b.second].front();
  });
  const int d = decomposed.dim();
  res.cc.assign(d < 0 ? 0 : d + 1, 0);
  for (const auto& [pd, p] : order) {
    Complex comp;
    for (TopId t : parts[p]) comp.add_top_unchecked(t, decomposed.slots(t));
    ++res.cc[comp.dim()];
    res.components.push_back(std::move(comp));
  }
  return res;
}

DecompositionResult decompose(const Complex& c) {
  std::vector<Top> tops;
  std::vector<std::vector<VertexId>> slots;
  tops.reserve(c.num_tops());
  for (TopId t : c.top_ids()) {
    tops.push_back({t, c.simplex(t)});
    slots.push_back(c.slots(t));
  }
  SplitResult sr = split(tops, std::move(slots), c.max_vertex() + 1);
  Complex decomposed;
  for (std::size_t i = 0; i < tops.size(); ++i) decomposed.add_top_unchecked(tops[i].id, std::move(sr.slots[i]));
  return assemble_decomposition(decomposed, sr.sigma);
}

std::set<std::pair<TopId, TopId>> canonical_pairs(const Complex& c) {
  std::unordered_map<Simplex, std::vector<TopId>, SimplexHash> by_face;
  c.for_each_top([&](TopId t, const Simplex& s) {
    const int h = dim_of(s);
    if (h < 1) return;
    for_each_face(s, h - 1, [&](const Simplex& f) {
      Simplex key = f;
      key.push_back(static_cast<VertexId>(h));
      by_face[key].push_back(t);
    });
  });
  std::set<std::pair<TopId, TopId>> out;
  for (auto& [key, ts] : by_face) {
    if (ts.size() != 2) continue;
    Simplex face(key.begin(), key.end() - 1);
    if (order_of(c, face) != 2) continue;
    out.emplace(std::min(ts[0], ts[1]), std::max(ts[0], ts[1]));
  }
  return out;
}

DecompositionResult decompose_via_oracle(const Complex& c) {
  GluingState s = GluingState::totally_exploded(c);
  for (const auto& [a, b] : canonical_pairs(c)) s.apply_gluing_instruction(a, b);
  CopyComplex cc = s.current_decomposition();
  return assemble_decomposition(cc.complex, cc.sigma);
}

}  // namespace nmdec
