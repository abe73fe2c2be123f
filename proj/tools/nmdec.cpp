// nmdec: decomposition and query tool for non-manifold simplicial complexes.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "nmdec/gluing.hpp"
#include "nmdec/io.hpp"
#include "nmdec/nmwds.hpp"
#include "nmdec/oracle.hpp"
#include "tables.hpp"

using json = nlohmann::json;
using namespace nmdec;

namespace {

struct Options {
  bool json = false;
  std::string vnra = "auto";
  std::string tt_mode = "strict";
  std::uint64_t seed = 0;
};

VnraMode vnra_mode(const Options& o) { return o.vnra == "all" ? VnraMode::All : VnraMode::Auto; }
TtMode tt_mode(const Options& o) { return o.tt_mode == "circular" ? TtMode::Circular : TtMode::Strict; }

json labels_of(const LabeledComplex& lc, const Simplex& s) {
  json a = json::array();
  for (VertexId v : s) a.push_back(lc.label(v));
  return a;
}

int cmd_check(const Options& o, const std::string& file) {
  const LabeledComplex lc = load_tv(file);
  const Complex& c = lc.complex;
  const Classification cl = classify(c);
  const int d = c.dim();
  json j;
  j["dimension"] = d;
  j["tops"] = c.num_tops();
  j["vertices"] = c.num_vertices();
  j["f_vector"] = oracle::face_numbers(c);
  j["regular"] = cl.regular;
  j["pseudomanifold"] = cl.pseudomanifold;
  j["quasi_manifold"] = cl.quasi_manifold;
  j["iqm"] = cl.iqm;
  j["manifold"] = cl.manifold_le3 ? json(*cl.manifold_le3) : json(nullptr);

  json nonmanifold = json::array();
  if (d >= 1) {
    for (const auto& f : faces(c, d - 1)) {
      const std::vector<TopId> st = star(c, f);
      if (st.size() > 2) nonmanifold.push_back({{"face", labels_of(lc, f)}, {"order", st.size()}, {"tops", st}});
    }
  }
  j["non_manifold_faces"] = nonmanifold;
  if (cl.regular) {
    json bnd = json::array();
    for (const auto& f : boundary(c)) bnd.push_back(labels_of(lc, f));
    j["boundary"] = bnd;
    if (d == 2 && bnd.empty()) j["euler"] = euler_characteristic(c);
  }
  const DecompositionResult dec = decompose(c);
  json split = json::array();
  for (const auto& [v, copies] : dec.sigma.copies) {
    if (copies.size() > 1) split.push_back({{"vertex", lc.label(v)}, {"copies", copies.size()}});
  }
  j["splitting_vertices"] = split;

  if (o.json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "dimension        " << d << "\n"
            << "tops             " << c.num_tops() << "\n"
            << "vertices         " << c.num_vertices() << "\n"
            << "f-vector         " << j["f_vector"].dump() << "\n"
            << "regular          " << cl.regular << "\n"
            << "pseudomanifold   " << cl.pseudomanifold << "\n"
            << "quasi-manifold   " << cl.quasi_manifold << "\n"
            << "iqm              " << cl.iqm << "\n"
            << "manifold         " << (cl.manifold_le3 ? (*cl.manifold_le3 ? "1" : "0") : "undecided") << "\n";
  if (j.contains("boundary")) std::cout << "boundary faces   " << j["boundary"].size() << "\n";
  if (j.contains("euler")) std::cout << "euler            " << j["euler"].get<long>() << "\n";
  std::cout << "non-manifold faces " << nonmanifold.size() << "\n";
  for (const auto& f : nonmanifold) {
    Simplex s;
    for (const auto& t : f["face"]) s.push_back(lc.id_of(t.get<std::string>()));
    std::cout << "  " << lc.format(make_simplex(s)) << " order " << f["order"].get<std::size_t>() << " tops";
    for (const auto& t : f["tops"]) std::cout << " " << t.get<TopId>();
    std::cout << "\n";
  }
  std::cout << "splitting vertices " << split.size() << "\n";
  for (const auto& s : split) std::cout << "  " << s["vertex"].get<std::string>() << " x" << s["copies"].get<std::size_t>() << "\n";
  return 0;
}

int cmd_decompose(const Options& o, const std::string& file, const std::string& outdir) {
  const LabeledComplex lc = load_tv(file);
  const DecompositionResult dec = decompose(lc.complex);
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) throw Error(Errc::Io, outdir + ": " + ec.message());

  // Copies of a vertex are written as "<label>_<k>", k counting from 1.
  std::map<VertexId, std::string> names;
  for (const auto& [v, copies] : dec.sigma.copies) {
    for (std::size_t k = 0; k < copies.size(); ++k) names[copies[k]] = k == 0 ? lc.label(v) : lc.label(v) + "_" + std::to_string(k);
  }
  std::vector<std::string> written;
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const std::string path = (std::filesystem::path(outdir) / ("component_" + std::to_string(i + 1) + ".tv")).string();
    std::ofstream f(path);
    if (!f) throw Error(Errc::Io, path);
    write_tv(f, dec.components[i], names);
    written.push_back(path);
  }
  json sigma = json::object();
  for (const auto& [copy, orig] : dec.sigma.to_original) sigma[names[copy]] = lc.label(orig);
  json split = json::object();
  for (const auto& [v, copies] : dec.sigma.copies) {
    if (copies.size() < 2) continue;
    for (VertexId c : copies) split[lc.label(v)].push_back(names[c]);
  }
  const std::string sigma_path = (std::filesystem::path(outdir) / "sigma.json").string();
  const std::string cc_path = (std::filesystem::path(outdir) / "cc.json").string();
  std::ofstream(sigma_path) << json{{"sigma", sigma}, {"split", split}}.dump(2) << "\n";
  std::ofstream(cc_path) << json(dec.cc).dump() << "\n";
  written.push_back(sigma_path);
  written.push_back(cc_path);

  if (o.json) {
    std::cout << json{{"files", written}, {"cc", dec.cc}, {"split", split}}.dump(2) << "\n";
  } else {
    for (const auto& w : written) std::cout << w << "\n";
  }
  return 0;
}

int cmd_query(const Options& o, const std::string& file, const std::string& rel, const std::vector<std::string>& tokens) {
  static const std::regex pattern("S([0-9])([0-9])");
  std::smatch m;
  if (!std::regex_match(rel, m, pattern)) throw Error(Errc::BadRelation, rel + " does not match S<n><m>");
  const int n = std::stoi(m[1]), mm = std::stoi(m[2]);
  if (n >= mm) throw Error(Errc::BadRelation, rel + " needs n < m");
  if (tokens.size() != static_cast<std::size_t>(n) + 1)
    throw Error(Errc::BadRelation, rel + " takes " + std::to_string(n + 1) + " vertices, got " + std::to_string(tokens.size()));
  const LabeledComplex lc = load_tv(file);
  std::vector<VertexId> ids;
  for (const auto& t : tokens) ids.push_back(lc.id_of(t));
  const Simplex gamma = make_simplex(ids);
  if (gamma.size() != ids.size()) throw Error(Errc::BadRelation, "repeated vertex");
  const Nmwds nm = Nmwds::build(lc.complex, vnra_mode(o));
  Scratch sc;
  const std::vector<Simplex> out = nm.snm_global(gamma, mm, sc);
  if (o.json) {
    json res = json::array();
    for (const auto& s : out) res.push_back(labels_of(lc, s));
    std::cout << json{{"relation", rel}, {"simplex", labels_of(lc, gamma)}, {"result", res}}.dump(2) << "\n";
  } else {
    for (const auto& s : out) std::cout << lc.format(s) << "\n";
  }
  return 0;
}

int cmd_glue(const Options& o, const std::string& file, const std::string& script) {
  const LabeledComplex lc = load_tv(file);
  std::ifstream in(script);
  if (!in) throw Error(Errc::Io, script);
  std::ostringstream log;
  const bool ok = run_glue_script(lc, in, log, nullptr);
  if (o.json) {
    std::cout << json{{"ok", ok}, {"output", log.str()}}.dump(2) << "\n";
  } else {
    std::cout << log.str();
  }
  return ok ? 0 : 1;
}

int cmd_stats(const Options& o, const std::string& file) {
  const LabeledComplex lc = load_tv(file);
  const Nmwds nm = Nmwds::build(lc.complex, vnra_mode(o), false);
  const NmwdsStats s = nm.stats();
  json j{{"d", s.d}, {"NT", s.nt}, {"NS", s.ns}, {"NC", s.nc}, {"NSP", s.nsp}, {"phi", s.phi}, {"H", s.info_bound},
         {"splitmap_keys", nm.splitmap().size()}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_gen(const Options& o, std::size_t tops, int dim) {
  const Complex c = oracle::random_complex(o.seed, tops, dim);
  if (o.json) {
    json a = json::array();
    for (TopId t : c.top_ids()) a.push_back(c.slots(t));
    std::cout << json{{"seed", o.seed}, {"tops", a}}.dump() << "\n";
  } else {
    write_tv(std::cout, c);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition and topological queries for non-manifold simplicial complexes"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--vnra", o.vnra, "Vertices scanned for the splitmap")->check(CLI::IsMember({"auto", "all"}));
  app.add_option("--tt-mode", o.tt_mode, "TT fill for tables")->check(CLI::IsMember({"strict", "circular"}));
  app.add_option("--seed", o.seed, "Seed for gen");

  std::string file, outdir, script, rel, table;
  std::vector<std::string> simplex;
  std::size_t tops = 20;
  int dim = 2;

  auto* check = app.add_subcommand("check", "Classify a complex and list non-manifold faces");
  check->add_option("file", file)->required();
  auto* dec = app.add_subcommand("decompose", "Write the standard decomposition");
  dec->add_option("file", file)->required();
  dec->add_option("outdir", outdir)->required();
  auto* query = app.add_subcommand("query", "Answer an S_nm relation");
  query->add_option("file", file)->required();
  query->add_option("--rel", rel)->required();
  query->add_option("--simplex", simplex)->required();
  auto* glue = app.add_subcommand("glue", "Run a glue script");
  glue->add_option("file", file)->required();
  glue->add_option("script", script)->required();
  auto* tab = app.add_subcommand("tables", "Print the worked tables");
  tab->add_option("name", table)->required()->check(CLI::IsMember({"fig-a", "fig-b", "fig-b-opt"}));
  auto* stats = app.add_subcommand("stats", "Upper layer statistics as JSON");
  stats->add_option("file", file)->required();
  auto* gen = app.add_subcommand("gen", "Print a random complex");
  gen->add_option("--tops", tops, "Maximum number of tops");
  gen->add_option("--dim", dim, "Maximum dimension");
  for (auto* sub : {check, dec, query, glue, tab, stats, gen}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*check) return cmd_check(o, file);
    if (*dec) return cmd_decompose(o, file, outdir);
    if (*query) return cmd_query(o, file, rel, simplex);
    if (*glue) return cmd_glue(o, file, script);
    if (*tab) {
      std::cout << tables::render(table, tt_mode(o));
      return 0;
    }
    if (*stats) return cmd_stats(o, file);
    if (*gen) return cmd_gen(o, tops, dim);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
