#include "tables.hpp"

#include <sstream>

#include "nmdec/implicit_opt.hpp"
#include "nmdec/io.hpp"

namespace nmdec::tables {

namespace {

std::string ref(TopRef t) {
  if (t == kBoundary) return "⊥";
  if (t == kNonManifold) return "◊";
  return std::to_string(t);
}

Ewds fixture_ewds(const std::string& file, TtMode mode) {
  const LabeledComplex lc = parse_tv_string(builtin_fixture(file));
  return make_ewds(decompose(lc.complex), mode);
}

template <class V>
void line(std::ostringstream& out, const std::string& name, const V& values, std::size_t from) {
  out << name << ":";
  for (std::size_t i = from; i < values.size(); ++i) out << " " << values[i];
  out << "\n";
}

}  // namespace

std::string fig_a(TtMode mode) {
  const Ewds e = fixture_ewds("fix_a.tv", mode);
  std::ostringstream out;
  out << "TV\n";
  for (TopRef t = 1; t <= e.nt; ++t) {
    out << e.top_label[t] << ":";
    for (VertexId v : e.row(t)) out << " " << e.vertex_label[v];
    out << "\n";
  }
  out << "VT*\n";
  for (VertexId v = 1; v <= e.nv; ++v) out << e.vertex_label[v] << ": " << e.top_label[e.vtstar[v]] << "\n";
  out << "TT\n";
  for (TopRef t = 1; t <= e.nt; ++t) {
    out << e.top_label[t] << ":";
    for (TopRef n : e.tt_row(t)) out << " " << (n == kBoundary || n == kNonManifold ? ref(n) : std::to_string(e.top_label[n]));
    out << "\n";
  }
  return out.str();
}

std::string fig_b(TtMode mode) {
  const Ewds e = fixture_ewds("fix_b.tv", mode);
  std::ostringstream out;
  line(out, "TBase", e.tbase, 0);
  line(out, "TBaseAddr", e.tbase_addr, 0);
  out << "SIZE: " << e.size << "\n";
  out << "TVP\n";
  for (TopRef t = 1; t <= e.nt; ++t) {
    const int h = e.dim_of_top(t);
    out << t << " @" << e.addr(h, t, 1) << ":" << e.addr(h, t, h + 1) << ":";
    for (VertexId v : e.row(t)) out << " " << v;
    out << "\n";
  }
  out << "VT*':";
  for (VertexId v = 1; v <= e.nv; ++v) out << " " << e.vtstar[v];
  out << "\nTTP\n";
  for (TopRef t = 1; t <= e.nt; ++t) {
    const int h = e.dim_of_top(t);
    out << t << " @" << e.addr(h, t, 1) << ":" << e.addr(h, t, h + 1) << ":";
    for (TopRef n : e.tt_row(t)) out << " " << ref(n);
    out << "\n";
  }
  return out.str();
}

std::string fig_b_opt(TtMode mode) {
  const LabeledComplex lc = parse_tv_string(builtin_fixture("fix_b.tv"));
  const DecompositionResult dec = decompose(lc.complex);
  const Ewds e = make_ewds(dec, mode);
  const Renumbering r = compute_renumbering(e, dec.cc);
  const ImplicitEwds ie = apply_renumbering(e, r);
  std::ostringstream out;
  line(out, "CC", ie.cc, 0);
  line(out, "VBase", ie.vbase, 0);
  line(out, "FVV", r.fvv, 1);
  line(out, "FTT", r.ftt, 1);
  line(out, "TAddr", ie.taddr, 0);
  line(out, "IIBND", ie.iibnd, 0);
  line(out, "IITAddr", ie.iitaddr, 0);
  out << "TVP\n";
  for (int h = 0; h <= ie.d; ++h) {
    for (TopRef t = static_cast<TopRef>(ie.tbase[h]); t < ie.tbase[h + 1]; ++t) {
      out << h << " " << t << ":";
      for (int k = 1; k <= h + 1; ++k) out << " " << implicit_tv_lookup(ie, h, t, k);
      out << "\n";
    }
  }
  line(out, "TVPP", ie.tvpp, 1);
  out << "VT*\n";
  for (int h = 0; h <= ie.d; ++h) {
    for (VertexId v = static_cast<VertexId>(ie.vbase[h]); v < ie.vbase[h + 1]; ++v) {
      const bool paired = v < ie.vbase[h + 1] - ie.cc[h] * static_cast<std::size_t>(h);
      out << h << " " << v << ": " << implicit_vtstar_lookup(ie, h, v) << (paired ? " (†2)" : " (†1)") << "\n";
    }
  }
  return out.str();
}

std::string render(const std::string& name, TtMode mode) {
  if (name == "fig-a") return fig_a(mode);
  if (name == "fig-b") return fig_b(mode);
  if (name == "fig-b-opt") return fig_b_opt(mode);
  throw Error(Errc::Io, "unknown table " + name);
}

}  // namespace nmdec::tables
