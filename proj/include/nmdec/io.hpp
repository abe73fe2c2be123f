#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "nmdec/complex.hpp"

namespace nmdec {

// A complex read from a .tv file together with its vertex token table.
struct LabeledComplex {
  Complex complex;
  std::map<VertexId, std::string> labels;
  std::map<std::string, VertexId> ids;

  // Token of v, or its decimal id when v has no token (e.g. a vertex copy).
  std::string label(VertexId v) const;
  VertexId id_of(const std::string& token) const;  // throws UnknownToken
  std::string format(const Simplex& s) const;      // "[a,b,c]"
};

// Token ids: when every token is a decimal integer the value is the id;
// otherwise tokens are numbered 1..n in lexicographic order.
LabeledComplex parse_tv(std::istream& in);
LabeledComplex parse_tv_string(const std::string& text);
LabeledComplex load_tv(const std::string& path);

void write_tv(std::ostream& out, const Complex& c, const std::map<VertexId, std::string>& labels = {});

// Shipped fixtures, keyed by file name (e.g. "fix_a.tv").
const std::map<std::string, std::string>& builtin_fixtures();
const std::string& builtin_fixture(const std::string& name);

}  // namespace nmdec
