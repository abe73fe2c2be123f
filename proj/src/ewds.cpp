#include "nmdec/ewds.hpp"

#include <algorithm>
#include <unordered_set>

namespace nmdec {

int Ewds::dim_of_top(TopRef t) const {
  if (t < 1 || t > nt) throw Error(Errc::UnknownTop, std::to_string(t));
  auto it = std::upper_bound(tbase.begin(), tbase.end(), static_cast<std::size_t>(t));
  return static_cast<int>(it - tbase.begin()) - 1;
}

std::span<const VertexId> Ewds::row(TopRef t) const {
  const int h = dim_of_top(t);
  return {tvp.data() + addr(h, t, 1), static_cast<std::size_t>(h + 1)};
}

std::span<const TopRef> Ewds::tt_row(TopRef t) const {
  const int h = dim_of_top(t);
  return {ttp.data() + addr(h, t, 1), static_cast<std::size_t>(h + 1)};
}

Simplex Ewds::row_set(TopRef t) const {
  auto r = row(t);
  return make_simplex({r.begin(), r.end()});
}

TopRef Ewds::pack_top(TopId t) const {
  auto it = top_packed.find(t);
  if (it == top_packed.end()) throw Error(Errc::UnknownTop, std::to_string(t));
  return it->second;
}

VertexId Ewds::pack_vertex(VertexId v) const {
  auto it = vertex_packed.find(v);
  if (it == vertex_packed.end()) throw Error(Errc::UnknownVertex, std::to_string(v));
  return it->second;
}

Ewds build_ewds(const DecompositionResult& dec) {
  Ewds e;
  const Complex& all = dec.decomposed;
  e.d = all.dim();
  if (e.d < 0) return e;

  std::vector<std::vector<TopId>> by_dim(e.d + 1);
  for (const auto& comp : dec.components) {
    for (TopId t : comp.top_ids()) by_dim[comp.dim()].push_back(t);
  }
  e.tbase.assign(e.d + 2, 1);
  e.tbase_addr.assign(e.d + 2, 1);
  e.top_label.assign(1, 0);
  for (int h = 0; h <= e.d; ++h) {
    std::sort(by_dim[h].begin(), by_dim[h].end());
    e.tbase[h] = e.top_label.size();
    for (TopId t : by_dim[h]) {
      e.top_packed[t] = static_cast<TopRef>(e.top_label.size());
      e.top_label.push_back(t);
    }
  }
  e.tbase[e.d + 1] = e.top_label.size();
  for (int h = 0; h <= e.d; ++h)
    e.tbase_addr[h + 1] = e.tbase_addr[h] + (h + 1) * (e.tbase[h + 1] - e.tbase[h]);
  e.nt = e.top_label.size() - 1;
  e.size = e.tbase_addr[e.d + 1] - 1;

  e.vertex_label.assign(1, 0);
  for (VertexId v : all.vertices()) {
    e.vertex_packed[v] = static_cast<VertexId>(e.vertex_label.size());
    e.vertex_label.push_back(v);
  }
  e.nv = e.vertex_label.size() - 1;

  e.tvp.assign(e.size + 1, 0);
  e.ttp.assign(e.size + 1, kBoundary);
  e.vtstar.assign(e.nv + 1, kBoundary);
  for (TopRef t = 1; t <= e.nt; ++t) {
    const int h = e.dim_of_top(t);
    const auto& slots = all.slots(e.top_label[t]);
    for (int k = 1; k <= h + 1; ++k) {
      const VertexId v = e.vertex_packed.at(slots[k - 1]);
      e.tvp[e.addr(h, t, k)] = v;
      // Tops are visited in ascending order, so the first hit is the smallest.
      if (e.vtstar[v] == kBoundary) e.vtstar[v] = t;
    }
  }
  return e;
}

int opposite(const Ewds& e, TopRef t, const Simplex& psi) {
  auto r = e.row(t);
  int found = 0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (!std::binary_search(psi.begin(), psi.end(), r[k])) {
      if (found) return 0;
      found = static_cast<int>(k) + 1;
    }
  }
  return found;
}

namespace {

// Facet -> (top, opposite slot) in ascending top order.
std::unordered_map<Simplex, std::vector<std::pair<TopRef, int>>, SimplexHash> facet_table(const Ewds& e) {
  std::unordered_map<Simplex, std::vector<std::pair<TopRef, int>>, SimplexHash> table;
  table.reserve(e.size);
  for (TopRef t = 1; t <= e.nt; ++t) {
    auto r = e.row(t);
    if (r.size() < 2) continue;
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::vector<VertexId> face;
      face.reserve(r.size() - 1);
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (j != k) face.push_back(r[j]);
      }
      table[make_simplex(std::move(face))].emplace_back(t, static_cast<int>(k) + 1);
    }
  }
  return table;
}

}  // namespace

void fill_tt(Ewds& e) {
  std::fill(e.ttp.begin(), e.ttp.end(), kBoundary);
  for (const auto& [psi, star] : facet_table(e)) {
    if (star.size() == 1) continue;
    for (std::size_t i = 0; i < star.size(); ++i) {
      const auto [t, k] = star[i];
      TopRef target = kNonManifold;
      if (star.size() == 2) target = star[1 - i].first;
      e.ttp[e.addr(e.dim_of_top(t), t, k)] = target;
    }
  }
  e.mode = TtMode::Strict;
  e.tt_filled = true;
}

void fill_tt_circular(Ewds& e) {
  std::fill(e.ttp.begin(), e.ttp.end(), kBoundary);
  for (const auto& [psi, star] : facet_table(e)) {
    const std::size_t n = star.size();
    if (n == 1) continue;
    // The coface list is built by prepending, so the circular successor of the
    // i-th inserted top is the one inserted just before it.
    for (std::size_t i = 0; i < n; ++i) {
      const auto [t, k] = star[i];
      e.ttp[e.addr(e.dim_of_top(t), t, k)] = star[(i + n - 1) % n].first;
    }
  }
  e.mode = TtMode::Circular;
  e.tt_filled = true;
}

Ewds make_ewds(const DecompositionResult& dec, TtMode mode) {
  Ewds e = build_ewds(dec);
  if (mode == TtMode::Strict) {
    fill_tt(e);
  } else {
    fill_tt_circular(e);
  }
  return e;
}

std::vector<TopRef> s0h(const Ewds& e, VertexId v, Scratch& sc) {
  if (v < 1 || v > e.nv) throw Error(Errc::UnknownVertex, std::to_string(v));
  if (sc.mark.size() < e.nt + 1) sc.mark.assign(e.nt + 1, 0);
  const TopRef seed = e.vtstar[v];
  std::vector<TopRef> out{seed};
  std::vector<TopRef> pending{seed};
  sc.mark[seed] = 1;
  while (!pending.empty()) {
    const TopRef t = pending.back();
    pending.pop_back();
    ++sc.ops;
    auto r = e.row(t);
    auto adj = e.tt_row(t);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] == v) continue;
      const TopRef n = adj[k];
      ++sc.ops;
      if (n == kBoundary || n == kNonManifold || sc.mark[n]) continue;
      sc.mark[n] = 1;
      pending.push_back(n);
      out.push_back(n);
    }
  }
  for (TopRef t : out) sc.mark[t] = 0;
  return out;
}

std::vector<Simplex> face_of(int m, const Simplex& beta, const std::vector<Simplex>& cotop, std::uint64_t* ops) {
  std::vector<Simplex> out;
  if (cotop.empty()) return out;
  const int n = dim_of(beta);
  if (m < n) return out;
  std::size_t h = 0;
  for (const auto& t : cotop) h = std::max(h, t.size());
  std::unordered_set<Simplex, SimplexHash> inserted;
  inserted.reserve(10 * binomial(h, m + 1) * cotop.size());
  for (const auto& tau : cotop) {
    Simplex psi = set_difference(tau, beta);
    if (m == n) {
      if (ops) ++*ops;
      if (inserted.insert(beta).second) out.push_back(beta);
      continue;
    }
    for_each_face(psi, m - n - 1, [&](const Simplex& extra) {
      if (ops) ++*ops;
      Simplex face;
      face.reserve(beta.size() + extra.size());
      std::merge(beta.begin(), beta.end(), extra.begin(), extra.end(), std::back_inserter(face));
      if (inserted.insert(face).second) out.push_back(std::move(face));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> snm_within(const Ewds& e, const Simplex& gamma, int m, Scratch& sc) {
  if (gamma.empty()) return {};
  std::vector<Simplex> top;
  for (TopRef t : s0h(e, gamma.front(), sc)) {
    Simplex theta = e.row_set(t);
    ++sc.ops;
    if (is_subset(gamma, theta)) top.push_back(std::move(theta));
  }
  return face_of(m, gamma, top, &sc.ops);
}

}  // namespace nmdec
