#include "nmdec/implicit_opt.hpp"

#include <algorithm>
#include <numeric>

namespace nmdec {

namespace {

constexpr VertexId kUnset = 0;
constexpr VertexId kReserved = 0xFFFFFFFFu;

bool is_link(TopRef t) { return t != kBoundary && t != kNonManifold; }

}  // namespace

Renumbering compute_renumbering(const Ewds& e, const std::vector<std::size_t>& cc_in) {
  Renumbering r;
  r.d = e.d;
  if (e.d < 0) return r;
  r.cc = cc_in;
  r.cc.resize(e.d + 1, 0);
  r.tvp = e.tvp;
  r.ttp = e.ttp;
  r.dontcopy.assign(e.size + 1, false);
  r.fvv.assign(e.nv + 1, kUnset);
  r.ftt.assign(e.nt + 1, kBoundary);
  r.perm.assign(e.nt + 1, {});
  for (TopRef t = 1; t <= e.nt; ++t) {
    r.perm[t].resize(e.dim_of_top(t) + 1);
    std::iota(r.perm[t].begin(), r.perm[t].end(), 1);
  }
  r.vbase.assign(e.d + 2, 1);
  std::vector<bool> visited(e.nt + 1, false);

  std::size_t next_vertex = 1;
  for (int h = 0; h <= e.d; ++h) {
    const std::size_t lo = e.tbase[h], hi = e.tbase[h + 1];
    r.vbase[h] = next_vertex;
    std::size_t tidx = lo;
    std::size_t next_top = lo + r.cc[h];
    std::size_t vidx = r.vbase[h];
    next_vertex = r.vbase[h] + r.cc[h];
    auto at = [&](TopRef t, int k) { return e.addr(h, t, k); };

    // Depth-first visit in the order of the recursive procedure: neighbours by
    // ascending slot, recursing as soon as one is reached.
    auto adjacent_renumber = [&](TopRef start) {
      std::vector<std::pair<TopRef, int>> stack{{start, 1}};
      while (!stack.empty()) {
        const TopRef t = stack.back().first;
        const int i = stack.back().second++;
        if (i > h + 1) {
          stack.pop_back();
          continue;
        }
        const TopRef n = r.ttp[at(t, i)];
        if (!is_link(n) || visited[n]) continue;
        visited[n] = true;
        int k = 0;
        for (int j = 1; j <= h + 1 && !k; ++j) {
          const VertexId w = r.tvp[at(n, j)];
          bool shared = false;
          for (int q = 1; q <= h + 1; ++q) shared = shared || r.tvp[at(t, q)] == w;
          if (!shared) k = j;
        }
        if (!k) throw Error(Errc::NotIqm, "adjacent tops share every vertex");
        const VertexId v = r.tvp[at(n, k)];
        if (r.fvv[v] == kUnset) {
          r.fvv[v] = static_cast<VertexId>(next_vertex++);
          r.ftt[n] = static_cast<TopRef>(next_top++);
          std::swap(r.tvp[at(n, k)], r.tvp[at(n, h + 1)]);
          std::swap(r.ttp[at(n, k)], r.ttp[at(n, h + 1)]);
          std::swap(r.perm[n][k - 1], r.perm[n][h]);
          r.dontcopy[at(n, h + 1)] = true;
        }
        stack.emplace_back(n, 1);
      }
    };

    for (TopRef t = lo; t < hi; ++t) {
      if (visited[t]) continue;
      if (tidx >= lo + r.cc[h]) throw Error(Errc::NotIqm, "more components than expected in dimension " + std::to_string(h));
      r.ftt[t] = static_cast<TopRef>(tidx++);
      r.fvv[r.tvp[at(t, h + 1)]] = static_cast<VertexId>(vidx++);
      r.dontcopy[at(t, h + 1)] = true;
      for (int j = 1; j <= h; ++j) r.fvv[r.tvp[at(t, j)]] = kReserved;
      adjacent_renumber(t);
    }
    if (tidx != lo + r.cc[h]) throw Error(Errc::NotIqm, "fewer components than expected in dimension " + std::to_string(h));
    for (TopRef t = lo; t < hi; ++t) {
      if (r.ftt[t] == kBoundary) r.ftt[t] = static_cast<TopRef>(next_top++);
    }
    for (TopRef t = lo; t < hi; ++t) {
      if (r.ftt[t] >= lo + r.cc[h]) continue;
      for (int j = 1; j <= h; ++j) {
        r.fvv[r.tvp[at(t, j)]] = static_cast<VertexId>(next_vertex++);
        r.dontcopy[at(t, j)] = true;
      }
    }
    for (TopRef t = lo; t < hi; ++t) {
      for (int k = 1; k <= h + 1; ++k) {
        const VertexId f = r.fvv[r.tvp[at(t, k)]];
        if (f == kUnset || f == kReserved) throw Error(Errc::NotIqm, "vertex left unpaired in dimension " + std::to_string(h));
      }
    }
  }
  r.vbase[e.d + 1] = next_vertex;
  return r;
}

ImplicitEwds apply_renumbering(const Ewds& e, const Renumbering& r) {
  ImplicitEwds ie;
  ie.d = e.d;
  ie.nt = e.nt;
  ie.nv = e.nv;
  ie.size = e.size;
  ie.tbase = e.tbase;
  ie.tbase_addr = e.tbase_addr;
  ie.vbase = r.vbase;
  ie.cc = r.cc;
  if (e.d < 0) return ie;

  std::vector<TopRef> inverse(e.nt + 1, 0);
  for (TopRef t = 1; t <= e.nt; ++t) inverse[r.ftt[t]] = t;
  ie.ttpp.assign(e.size + 1, kBoundary);
  ie.tvpp.assign(1, 0);
  for (int h = 0; h <= e.d; ++h) {
    for (TopRef u = e.tbase[h]; u < e.tbase[h + 1]; ++u) {
      const TopRef t = inverse[u];
      for (int k = 1; k <= h + 1; ++k) {
        const std::size_t a = e.addr(h, t, k);
        ie.ttpp[e.addr(h, u, k)] = is_link(r.ttp[a]) ? r.ftt[r.ttp[a]] : r.ttp[a];
        if (!r.dontcopy[a]) ie.tvpp.push_back(r.fvv[r.tvp[a]]);
      }
    }
  }

  ie.taddr.assign(e.d + 2, 1);
  ie.iibnd.assign(e.d + 1, 0);
  ie.iitaddr.assign(e.d + 1, 0);
  for (int h = 0; h <= e.d; ++h) {
    const std::size_t nvh = ie.vbase[h + 1] - ie.vbase[h];
    ie.taddr[h + 1] = ie.taddr[h] + (ie.tbase[h + 1] - ie.tbase[h]) * (h + 1) - nvh;
    ie.iibnd[h] = ie.tbase[h] + nvh - ie.cc[h] * h;
    ie.iitaddr[h] = ie.taddr[h] + (nvh - ie.cc[h] * (h + 1)) * h;
  }
  return ie;
}

ImplicitEwds optimize(const Ewds& e, const std::vector<std::size_t>& cc) { return apply_renumbering(e, compute_renumbering(e, cc)); }

VertexId implicit_tv_lookup(const ImplicitEwds& ie, int h, TopRef t, int k) {
  if (h < 0 || h > ie.d || t < ie.tbase[h] || t >= ie.tbase[h + 1] || k < 1 || k > h + 1)
    throw Error(Errc::OutOfRange, "(" + std::to_string(h) + "," + std::to_string(t) + "," + std::to_string(k) + ")");
  const std::size_t tb = ie.tbase[h];
  const std::size_t cc = ie.cc[h];
  const auto uh = static_cast<std::size_t>(h);
  const auto uk = static_cast<std::size_t>(k);
  if (t < tb + cc) {
    if (k == h + 1) return static_cast<VertexId>(ie.vbase[h] + (t - tb));
    return static_cast<VertexId>(ie.vbase[h + 1] - cc * uh + (t - tb) * uh + uk - 1);
  }
  if (t < ie.iibnd[h]) {
    if (k == h + 1) return static_cast<VertexId>(ie.vbase[h] + (t - tb));
    return ie.tvpp.at(ie.taddr[h] + (t - tb - cc) * uh + uk - 1);
  }
  return ie.tvpp.at(ie.iitaddr[h] + (t - ie.iibnd[h]) * (uh + 1) + uk - 1);
}

TopRef implicit_vtstar_lookup(const ImplicitEwds& ie, int h, VertexId v) {
  if (h < 0 || h > ie.d || v < ie.vbase[h] || v >= ie.vbase[h + 1])
    throw Error(Errc::OutOfRange, "(" + std::to_string(h) + "," + std::to_string(v) + ")");
  const std::size_t reserved = ie.cc[h] * static_cast<std::size_t>(h);
  if (v < ie.vbase[h + 1] - reserved) return static_cast<TopRef>(ie.tbase[h] + (v - ie.vbase[h]));
  return static_cast<TopRef>(ie.tbase[h] + (v + reserved - ie.vbase[h + 1]) / static_cast<std::size_t>(h));
}

RenamedEwds renamed_plain(const Ewds& e, const Renumbering& r) {
  RenamedEwds out;
  out.tvp.assign(e.size + 1, 0);
  out.ttp.assign(e.size + 1, kBoundary);
  for (TopRef t = 1; t <= e.nt; ++t) {
    const int h = e.dim_of_top(t);
    for (int k = 1; k <= h + 1; ++k) {
      const std::size_t a = e.addr(h, t, k);
      out.tvp[e.addr(h, r.ftt[t], k)] = r.fvv[r.tvp[a]];
      out.ttp[e.addr(h, r.ftt[t], k)] = is_link(r.ttp[a]) ? r.ftt[r.ttp[a]] : r.ttp[a];
    }
  }
  return out;
}

}  // namespace nmdec
