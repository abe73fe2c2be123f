#include "nmdec/oracle.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_map>

namespace nmdec::oracle {

std::vector<Simplex> snm(const Complex& source, const Simplex& gamma, int m) {
  std::set<Simplex> out;
  if (gamma.empty() || m < 0) return {};
  source.for_each_top([&](TopId, const Simplex& s) {
    if (dim_of(s) < m || !is_subset(gamma, s)) return;
    for_each_face(s, m, [&](const Simplex& f) {
      if (is_subset(gamma, f)) out.insert(f);
    });
  });
  return {out.begin(), out.end()};
}

Decomposition decompose(const Complex& source) {
  const std::vector<TopId> ids = source.top_ids();
  // One node per (top, slot).
  std::unordered_map<TopId, std::size_t> base;
  std::size_t nodes = 0;
  for (TopId t : ids) {
    base[t] = nodes;
    nodes += source.simplex(t).size();
  }
  UnionFind uf(nodes);
  auto node_of = [&](TopId t, VertexId v) {
    const Simplex& s = source.simplex(t);
    return base[t] + static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), v) - s.begin());
  };

  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Simplex& a = source.simplex(ids[i]);
    const int h = dim_of(a);
    if (h < 1) continue;
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const Simplex& b = source.simplex(ids[j]);
      if (dim_of(b) != h) continue;
      const Simplex shared = set_intersection(a, b);
      if (dim_of(shared) != h - 1) continue;
      std::size_t order = 0;
      source.for_each_top([&](TopId, const Simplex& s) { order += is_subset(shared, s); });
      if (order != 2) continue;
      for (VertexId v : shared) uf.unite(node_of(ids[i], v), node_of(ids[j], v));
    }
  }

  // Vertex classes: the class with the smallest top keeps the original id.
  std::map<VertexId, std::map<std::size_t, std::vector<TopId>>> classes;
  for (TopId t : ids) {
    for (VertexId v : source.simplex(t)) classes[v][uf.find(node_of(t, v))].push_back(t);
  }
  VertexId next = source.max_vertex() + 1;
  Decomposition out;
  std::map<std::size_t, VertexId> name;
  for (auto& [v, byroot] : classes) {
    std::vector<std::pair<TopId, std::size_t>> order;
    for (auto& [root, tops] : byroot) order.emplace_back(*std::min_element(tops.begin(), tops.end()), root);
    std::sort(order.begin(), order.end());
    for (std::size_t k = 0; k < order.size(); ++k) {
      const VertexId id = k == 0 ? v : next++;
      name[order[k].second] = id;
      out.sigma[id] = v;
    }
  }
  for (TopId t : ids) {
    std::vector<VertexId> slots;
    for (VertexId v : source.slots(t)) slots.push_back(name.at(uf.find(node_of(t, v))));
    out.decomposed.add_top_unchecked(t, std::move(slots));
  }
  return out;
}

Signature signature(const Complex& decomposed, const std::map<VertexId, VertexId>& sigma) {
  Signature out;
  for (VertexId c : decomposed.vertices()) {
    auto it = sigma.find(c);
    out.emplace(it == sigma.end() ? c : it->second, decomposed.incident_tops(c));
  }
  return out;
}

bool labeled_isomorphic(const Complex& a, const Complex& b, const std::map<VertexId, VertexId>& relabel) {
  if (a.num_tops() != b.num_tops()) return false;
  std::set<Simplex> sa, sb;
  bool total = true;
  a.for_each_top([&](TopId, const Simplex& s) {
    std::vector<VertexId> img;
    for (VertexId v : s) {
      auto it = relabel.find(v);
      if (it == relabel.end()) {
        total = false;
        return;
      }
      img.push_back(it->second);
    }
    sa.insert(make_simplex(std::move(img)));
  });
  if (!total) return false;
  b.for_each_top([&](TopId, const Simplex& s) { sb.insert(s); });
  return sa == sb;
}

std::vector<std::size_t> face_numbers(const Complex& c) {
  std::vector<std::size_t> f;
  for (int k = 0; k <= c.dim(); ++k) f.push_back(faces(c, k).size());
  return f;
}

namespace {

// The complex obtained by merging vertex classes is simplicial iff no top
// collapses and no top becomes equal to or contained in another.
bool simplicial(const std::vector<std::vector<std::size_t>>& tops, UnionFind& uf) {
  std::vector<Simplex> sets;
  for (const auto& t : tops) {
    std::vector<VertexId> img;
    for (std::size_t v : t) img.push_back(static_cast<VertexId>(uf.find(v)));
    Simplex s = make_simplex(std::move(img));
    if (s.size() != t.size()) return false;
    sets.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && sets[i].size() <= sets[j].size() && is_subset(sets[i], sets[j])) return false;
    }
  }
  return true;
}

}  // namespace

Complex random_complex(std::uint64_t seed, std::size_t max_tops, int d) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  auto chance = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
  d = std::max(d, 0);
  const std::size_t n = uniform(1, std::max<std::size_t>(max_tops, 1));

  std::vector<std::vector<std::size_t>> tops;
  std::size_t nodes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int h = chance(0.75) ? d : static_cast<int>(uniform(0, static_cast<std::size_t>(d)));
    std::vector<std::size_t> t;
    for (int k = 0; k <= h; ++k) t.push_back(nodes++);
    tops.push_back(std::move(t));
  }
  UnionFind uf(nodes);

  auto try_glue = [&](std::size_t i, std::size_t j, std::size_t shared) {
    std::vector<std::size_t> a = tops[i], b = tops[j];
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    UnionFind trial = uf;
    for (std::size_t k = 0; k < shared; ++k) trial.unite(a[k], b[k]);
    if (!simplicial(tops, trial)) return false;
    uf = std::move(trial);
    return true;
  };

  for (std::size_t i = 1; i < n; ++i) {
    if (!chance(0.9)) continue;
    for (int attempt = 0; attempt < 4; ++attempt) {
      const std::size_t j = uniform(0, i - 1);
      // Sharing every vertex of the smaller top would make it a face.
      const std::size_t most = std::min(tops[i].size(), tops[j].size());
      if (most < 2) continue;
      // Mostly codimension-one gluings, sometimes lower-dimensional pinches.
      const std::size_t shared = chance(0.65) ? most - 1 : uniform(1, most - 1);
      if (try_glue(i, j, shared)) break;
    }
  }
  for (std::size_t extra = uniform(0, n / 3); extra > 0 && n > 1; --extra) {
    const std::size_t i = uniform(0, n - 1), j = uniform(0, n - 1);
    if (i != j) try_glue(i, j, 1);
  }

  std::unordered_map<std::size_t, VertexId> label;
  Complex c;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<VertexId> slots;
    for (std::size_t v : tops[i]) {
      auto [it, fresh] = label.emplace(uf.find(v), static_cast<VertexId>(label.size() + 1));
      slots.push_back(it->second);
    }
    c.add_simplex(static_cast<TopId>(i + 1), std::move(slots));
  }
  return c;
}

Complex grid_ball(int nx, int ny, int nz) {
  auto id = [&](int i, int j, int k) { return static_cast<VertexId>(1 + i + (nx + 1) * (j + (ny + 1) * k)); };
  static const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  Complex c;
  TopId t = 1;
  for (int k = 0; k < nz; ++k) {
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        for (const auto& p : perms) {
          std::array<int, 3> at{i, j, k};
          std::vector<VertexId> tet{id(at[0], at[1], at[2])};
          for (int axis : p) {
            ++at[axis];
            tet.push_back(id(at[0], at[1], at[2]));
          }
          c.add_top_unchecked(t++, std::move(tet));
        }
      }
    }
  }
  return c;
}

}  // namespace nmdec::oracle
