#include "nmdec/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace nmdec {

std::string LabeledComplex::label(VertexId v) const {
  auto it = labels.find(v);
  return it == labels.end() ? std::to_string(v) : it->second;
}

VertexId LabeledComplex::id_of(const std::string& token) const {
  auto it = ids.find(token);
  if (it == ids.end()) throw Error(Errc::UnknownToken, token);
  return it->second;
}

std::string LabeledComplex::format(const Simplex& s) const {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += label(s[i]);
  }
  return out + "]";
}

namespace {

bool is_token(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isalnum(ch) || ch == '_'; });
}

bool is_decimal(const std::string& s) {
  return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

LabeledComplex parse_tv(std::istream& in) {
  struct Row {
    std::size_t line;
    TopId id;
    std::vector<std::string> toks;
  };
  std::vector<Row> rows;
  std::string text;
  std::size_t lineno = 0;
  while (std::getline(in, text)) {
    ++lineno;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    std::string kw;
    if (!(ss >> kw)) continue;
    if (kw != "simplex") parse_error(lineno, "expected 'simplex', got '" + kw + "'");
    std::string idtok;
    if (!(ss >> idtok)) parse_error(lineno, "missing top id");
    if (idtok.back() == ':') {
      idtok.pop_back();
    } else {
      std::string colon;
      if (!(ss >> colon) || colon != ":") parse_error(lineno, "expected ':' after top id");
    }
    if (!is_decimal(idtok)) parse_error(lineno, "bad top id '" + idtok + "'");
    Row row{lineno, static_cast<TopId>(std::stoul(idtok)), {}};
    std::string tok;
    while (ss >> tok) {
      if (!is_token(tok)) parse_error(lineno, "bad vertex token '" + tok + "'");
      row.toks.push_back(tok);
    }
    if (row.toks.empty()) parse_error(lineno, "simplex without vertices");
    rows.push_back(std::move(row));
  }

  LabeledComplex out;
  bool numeric = true;
  std::vector<std::string> all;
  for (const auto& r : rows) {
    for (const auto& t : r.toks) {
      all.push_back(t);
      if (!is_decimal(t)) numeric = false;
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  VertexId next = 1;
  for (const auto& t : all) {
    VertexId id = numeric ? static_cast<VertexId>(std::stoul(t)) : next++;
    out.ids[t] = id;
    out.labels.emplace(id, t);  // "07" and "7" share an id; the first spelling labels it
  }
  for (auto& r : rows) {
    std::vector<VertexId> slots;
    for (const auto& t : r.toks) slots.push_back(numeric ? static_cast<VertexId>(std::stoul(t)) : out.ids.at(t));
    try {
      out.complex.add_simplex(r.id, std::move(slots));
    } catch (const Error& e) {
      parse_error(r.line, e.what());
    }
  }
  return out;
}

LabeledComplex parse_tv_string(const std::string& text) {
  std::istringstream in(text);
  return parse_tv(in);
}

LabeledComplex load_tv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  return parse_tv(in);
}

void write_tv(std::ostream& out, const Complex& c, const std::map<VertexId, std::string>& labels) {
  for (TopId t : c.top_ids()) {
    out << "simplex " << t << ":";
    for (VertexId v : c.slots(t)) {
      auto it = labels.find(v);
      out << ' ' << (it == labels.end() ? std::to_string(v) : it->second);
    }
    out << '\n';
  }
}

const std::string& builtin_fixture(const std::string& name) {
  const auto& all = builtin_fixtures();
  auto it = all.find(name);
  if (it == all.end()) throw Error(Errc::Io, "no builtin fixture " + name);
  return it->second;
}

}  // namespace nmdec
