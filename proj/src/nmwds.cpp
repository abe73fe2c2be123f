#include "nmdec/nmwds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace nmdec {

namespace {

double xlog(double x) { return x > 0 ? x * std::log2(x) : 0.0; }
double lg(double x) { return x > 0 ? std::log2(x) : 0.0; }

}  // namespace

Nmwds Nmwds::build(const Complex& source, VnraMode vnra, bool with_trie) {
  Nmwds n;
  n.source_ = source;
  n.dec_ = decompose(source);
  n.ewds_ = make_ewds(n.dec_, TtMode::Circular);
  for (const auto& comp : n.dec_.components) {
    for (VertexId v : comp.vertices()) n.copy_dim_[v] = comp.dim();
  }

  std::set<VertexId> chosen;
  if (vnra == VnraMode::All) {
    for (VertexId v : source.vertices()) chosen.insert(v);
  } else {
    for (const auto& [v, copies] : n.dec_.sigma.copies) {
      if (copies.size() > 1) chosen.insert(v);
    }
    // Decidable surrogate for non-manifold incidence: link classification up to
    // dimension 3, every vertex above.
    for (const auto& comp : n.dec_.components) {
      for (VertexId v : comp.vertices()) {
        if (comp.dim() > 3 || !is_manifold_vertex(comp, v)) chosen.insert(n.dec_.sigma.sigma(v));
      }
    }
  }
  n.vnra_.assign(chosen.begin(), chosen.end());
  n.build_splitmap(n.vnra_);
  if (with_trie) n.trie_ = FtTrie::build(source, n.splitmap_);
  return n;
}

std::size_t Nmwds::index_of(TopRef t, const Simplex& gamma_copy) const {
  auto r = ewds_.row(t);
  std::size_t idx = 0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (std::binary_search(gamma_copy.begin(), gamma_copy.end(), r[k])) idx |= std::size_t{1} << k;
  }
  return idx;
}

void Nmwds::build_splitmap(const std::vector<VertexId>& vnra) {
  splitmap_.clear();
  if (ewds_.d < 1) return;
  // FT_FLAGS: one bit per (packed top, face bitmask).
  const std::size_t width = std::size_t{1} << (ewds_.d + 1);
  std::vector<bool> flags((ewds_.nt + 1) * width, false);

  for (VertexId v : vnra) {
    for (VertexId copy : dec_.sigma.inverse(v)) {
      for (TopId src : dec_.decomposed.incident_tops(copy)) {
        const TopRef t = ewds_.pack_top(src);
        auto r = ewds_.row(t);
        const std::size_t full = (std::size_t{1} << r.size()) - 1;
        for (std::size_t idx = 1; idx < full; ++idx) {
          // Vertices are covered by sigma itself.
          if (std::popcount(idx) < 2 || flags[t * width + idx]) continue;
          Simplex packed;
          std::vector<VertexId> labels;
          for (std::size_t k = 0; k < r.size(); ++k) {
            if (idx >> k & 1) {
              packed.push_back(r[k]);
              labels.push_back(ewds_.vertex_label[r[k]]);
            }
          }
          std::sort(packed.begin(), packed.end());
          const Simplex gamma_copy = make_simplex(std::move(labels));
          splitmap_[dec_.sigma.sigma(gamma_copy)][gamma_copy].push_back(src);

          // Travel the star piece reachable from t and flag it.
          std::vector<TopRef> pending{t};
          while (!pending.empty()) {
            const TopRef cur = pending.back();
            pending.pop_back();
            const std::size_t ci = index_of(cur, packed);
            if (flags[cur * width + ci]) continue;
            flags[cur * width + ci] = true;
            auto cr = ewds_.row(cur);
            auto adj = ewds_.tt_row(cur);
            for (std::size_t k = 0; k < cr.size(); ++k) {
              if (ci >> k & 1) continue;
              if (adj[k] != kBoundary && adj[k] != kNonManifold) pending.push_back(adj[k]);
            }
          }
        }
      }
    }
  }
  for (auto it = splitmap_.begin(); it != splitmap_.end();) {
    for (auto& [copy, reps] : it->second) std::sort(reps.begin(), reps.end());
    if (it->second.size() < 2 && it->second.begin()->second.size() == 1) {
      it = splitmap_.erase(it);
    } else {
      ++it;
    }
  }
}

std::vector<TopId> Nmwds::travel_star(const Simplex& gamma_copy, TopId t) const {
  const TopRef pt = ewds_.pack_top(t);
  Simplex packed;
  for (VertexId v : gamma_copy) packed.push_back(ewds_.pack_vertex(v));
  std::sort(packed.begin(), packed.end());
  check_incident(packed, pt);
  Scratch sc;
  std::vector<TopId> out;
  for (TopRef r : flood(packed, {pt}, sc)) out.push_back(ewds_.top_label[r]);
  std::sort(out.begin(), out.end());
  return out;
}

void Nmwds::check_incident(const Simplex& packed, TopRef t) const {
  if (packed.empty() || !is_subset(packed, ewds_.row_set(t))) throw Error(Errc::NotIncident, std::to_string(ewds_.top_label[t]));
}

std::vector<TopRef> Nmwds::flood(const Simplex& packed, std::vector<TopRef> seeds, Scratch& sc) const {
  if (sc.mark.size() < ewds_.nt + 1) sc.mark.assign(ewds_.nt + 1, 0);
  std::vector<TopRef> out;
  for (TopRef s : seeds) {
    if (sc.mark[s]) continue;
    sc.mark[s] = 1;
    out.push_back(s);
  }
  std::vector<TopRef> pending = out;
  while (!pending.empty()) {
    const TopRef t = pending.back();
    pending.pop_back();
    ++sc.ops;
    auto r = ewds_.row(t);
    auto adj = ewds_.tt_row(t);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (std::binary_search(packed.begin(), packed.end(), r[k])) continue;
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

std::vector<TopId> Nmwds::snh_given(const Simplex& gamma_copy, TopId t, Scratch& sc) const {
  const TopRef pt = ewds_.pack_top(t);
  Simplex packed;
  for (VertexId v : gamma_copy) packed.push_back(ewds_.pack_vertex(v));
  std::sort(packed.begin(), packed.end());
  check_incident(packed, pt);
  std::vector<TopRef> seeds{pt};
  auto key = splitmap_.find(dec_.sigma.sigma(gamma_copy));
  if (key != splitmap_.end()) {
    auto copy = key->second.find(gamma_copy);
    if (copy != key->second.end()) {
      seeds.clear();
      for (TopId r : copy->second) seeds.push_back(ewds_.pack_top(r));
    }
  }
  std::vector<TopId> out;
  for (TopRef r : flood(packed, std::move(seeds), sc)) out.push_back(ewds_.top_label[r]);
  std::sort(out.begin(), out.end());
  return out;
}

Simplex Nmwds::sigma_n_inverse(const Simplex& gamma, TopId t) const {
  if (!source_.has_top(t)) throw Error(Errc::UnknownTop, std::to_string(t));
  if (gamma.empty() || !is_subset(gamma, source_.simplex(t))) throw Error(Errc::NotIncident, std::to_string(t));
  auto key = splitmap_.find(gamma);
  if (key != splitmap_.end() && key->second.size() > 1) throw Error(Errc::IsSplitting, to_string(gamma));
  std::vector<VertexId> out;
  for (VertexId v : dec_.decomposed.simplex(t)) {
    if (std::binary_search(gamma.begin(), gamma.end(), dec_.sigma.sigma(v))) out.push_back(v);
  }
  return make_simplex(std::move(out));
}

std::vector<Simplex> Nmwds::finish(int m, const Simplex& gamma, const std::vector<TopRef>& tops, Scratch& sc) const {
  std::vector<Simplex> cotop;
  cotop.reserve(tops.size());
  // The sigma image of a copy top is the source top itself.
  for (TopRef t : tops) cotop.push_back(source_.simplex(ewds_.top_label[t]));
  return face_of(m, gamma, cotop, &sc.ops);
}

std::vector<Simplex> Nmwds::snm_given(const Simplex& gamma, TopId t, int m, Scratch& sc) const {
  if (!source_.has_top(t)) throw Error(Errc::UnknownTop, std::to_string(t));
  if (gamma.empty() || !is_subset(gamma, source_.simplex(t))) throw Error(Errc::NotIncident, std::to_string(t));
  // Vertices go through sigma inverse directly.
  if (gamma.size() == 1) return s0m_global(gamma.front(), m, sc);
  if (m < dim_of(gamma)) return {};

  std::vector<TopRef> tops;
  auto key = splitmap_.find(gamma);
  if (key != splitmap_.end()) {
    for (const auto& [copy, reps] : key->second) {
      if (copy_dim_.at(copy.front()) < m) continue;
      Simplex packed;
      for (VertexId v : copy) packed.push_back(ewds_.pack_vertex(v));
      std::sort(packed.begin(), packed.end());
      std::vector<TopRef> seeds;
      for (TopId r : reps) seeds.push_back(ewds_.pack_top(r));
      auto found = flood(packed, std::move(seeds), sc);
      tops.insert(tops.end(), found.begin(), found.end());
    }
  } else {
    const Simplex copy = sigma_n_inverse(gamma, t);
    if (copy_dim_.at(copy.front()) >= m) {
      for (TopId r : snh_given(copy, t, sc)) tops.push_back(ewds_.pack_top(r));
    }
  }
  return finish(m, gamma, tops, sc);
}

std::vector<Simplex> Nmwds::s0m_global(VertexId v, int m, Scratch& sc) const {
  if (!source_.has_vertex(v)) throw Error(Errc::UnknownVertex, std::to_string(v));
  if (m < 0) return {};
  std::vector<TopRef> tops;
  for (VertexId copy : dec_.sigma.inverse(v)) {
    if (copy_dim_.at(copy) < m) continue;
    const VertexId pv = ewds_.pack_vertex(copy);
    auto found = flood({pv}, {ewds_.vtstar[pv]}, sc);
    tops.insert(tops.end(), found.begin(), found.end());
  }
  return finish(m, {v}, tops, sc);
}

std::vector<Simplex> Nmwds::snm_global(const Simplex& raw, int m, Scratch& sc) const {
  if (raw.empty()) return {};
  const Simplex gamma = make_simplex(raw);
  for (VertexId v : gamma) {
    if (!source_.has_vertex(v)) return {};
  }
  if (gamma.size() == 1) return s0m_global(gamma.front(), m, sc);

  if (trie_) {
    auto key = splitmap_.find(gamma);
    if (key != splitmap_.end()) return snm_given(gamma, key->second.begin()->second.front(), m, sc);
    if (!trie_->contains(gamma)) return {};
    return snm_given(gamma, trie_->lookup(gamma, &sc.ops), m, sc);
  }

  // Union over every tuple of copies; tuples that are not faces contribute nothing.
  std::set<Simplex> out;
  std::vector<const std::vector<VertexId>*> choices;
  for (VertexId v : gamma) choices.push_back(&dec_.sigma.inverse(v));
  std::vector<std::size_t> at(gamma.size(), 0);
  while (true) {
    Simplex packed;
    for (std::size_t i = 0; i < gamma.size(); ++i) packed.push_back(ewds_.pack_vertex((*choices[i])[at[i]]));
    std::sort(packed.begin(), packed.end());
    for (const Simplex& s : snm_within(ewds_, packed, m, sc)) {
      std::vector<VertexId> image;
      for (VertexId p : s) image.push_back(dec_.sigma.sigma(ewds_.vertex_label[p]));
      out.insert(make_simplex(std::move(image)));
    }
    std::size_t i = 0;
    while (i < at.size() && ++at[i] == choices[i]->size()) at[i++] = 0;
    if (i == at.size()) break;
  }
  return {out.begin(), out.end()};
}

NmwdsStats Nmwds::stats() const {
  NmwdsStats s;
  s.ns = dec_.sigma.splitting_count();
  s.nc = dec_.sigma.copy_count();
  s.nt = ewds_.nt;
  s.d = source_.dim();
  std::set<TopId> nsp;
  for (VertexId v : vnra_) {
    for (TopId t : source_.incident_tops(v)) nsp.insert(t);
  }
  s.nsp = nsp.size();
  if (s.d >= 0) s.phi = (std::pow(2.0, s.d + 1) - (s.d + 3)) * static_cast<double>(s.nsp);
  s.info_bound = xlog(static_cast<double>(s.ns)) + xlog(static_cast<double>(s.nc)) +
                 s.phi * (s.d * lg(s.d * s.phi) + lg(static_cast<double>(s.nt)));
  return s;
}

}  // namespace nmdec
