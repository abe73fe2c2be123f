#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmdec {

using VertexId = std::uint32_t;
using TopId = std::uint32_t;

// Sorted, duplicate-free vertex list.
using Simplex = std::vector<VertexId>;

enum class Errc {
  DuplicateId,
  NotTop,
  NotAFace,
  NotRegular,
  NotClosedSurface,
  DimensionUnsupported,
  NotSharedVertex,
  UnknownTop,
  VoidInstruction,
  NotPseudomanifoldPair,
  UnknownVertex,
  IsSplitting,
  NotIncident,
  NotInTrie,
  NotIqm,
  OutOfRange,
  ParseError,
  BadRelation,
  UnknownToken,
  Io,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (VertexId v : s) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline int dim_of(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

// True when a ⊆ b, both sorted.
bool is_subset(const Simplex& a, const Simplex& b);
Simplex make_simplex(std::vector<VertexId> verts);
Simplex set_difference(const Simplex& a, const Simplex& b);
Simplex set_intersection(const Simplex& a, const Simplex& b);

// Calls f(face) for every k-face (k+1 vertices) of s, in lexicographic order.
void for_each_face(const Simplex& s, int k, const std::function<void(const Simplex&)>& f);

// Binomial coefficient; saturates on overflow.
std::size_t binomial(std::size_t n, std::size_t k);

std::string to_string(const Simplex& s);

}  // namespace nmdec
