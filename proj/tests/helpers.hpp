#pragma once

#include <initializer_list>
#include <string>

#include "nmdec/io.hpp"

namespace testing {

inline nmdec::LabeledComplex fixture(const std::string& name) { return nmdec::parse_tv_string(nmdec::builtin_fixture(name)); }

inline nmdec::Simplex simplex(const nmdec::LabeledComplex& lc, std::initializer_list<const char*> tokens) {
  std::vector<nmdec::VertexId> ids;
  for (const char* t : tokens) ids.push_back(lc.id_of(t));
  return nmdec::make_simplex(ids);
}

inline nmdec::Complex from_tops(std::initializer_list<std::initializer_list<nmdec::VertexId>> tops) {
  nmdec::Complex c;
  nmdec::TopId id = 1;
  for (auto t : tops) c.add_simplex(id++, std::vector<nmdec::VertexId>(t));
  return c;
}

}  // namespace testing
