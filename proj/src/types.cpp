#include "nmdec/types.hpp"

#include <algorithm>
#include <limits>

namespace nmdec {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::NotTop: return "NotTop";
    case Errc::NotAFace: return "NotAFace";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotClosedSurface: return "NotClosedSurface";
    case Errc::DimensionUnsupported: return "DimensionUnsupported";
    case Errc::NotSharedVertex: return "NotSharedVertex";
    case Errc::UnknownTop: return "UnknownTop";
    case Errc::VoidInstruction: return "VoidInstruction";
    case Errc::NotPseudomanifoldPair: return "NotPseudomanifoldPair";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::IsSplitting: return "IsSplitting";
    case Errc::NotIncident: return "NotIncident";
    case Errc::NotInTrie: return "NotInTrie";
    case Errc::NotIqm: return "NotIqm";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::BadRelation: return "BadRelation";
    case Errc::UnknownToken: return "UnknownToken";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

bool is_subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Simplex make_simplex(std::vector<VertexId> verts) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

Simplex set_difference(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex set_intersection(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void for_each_face(const Simplex& s, int k, const std::function<void(const Simplex&)>& f) {
  const int n = static_cast<int>(s.size());
  const int r = k + 1;
  if (r <= 0 || r > n) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  Simplex face(r);
  while (true) {
    for (int i = 0; i < r; ++i) face[i] = s[idx[i]];
    f(face);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    if (r > std::numeric_limits<std::size_t>::max() / (n - k + i)) return std::numeric_limits<std::size_t>::max();
    r = r * (n - k + i) / i;
  }
  return r;
}

std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace nmdec
