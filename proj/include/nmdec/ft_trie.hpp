#pragma once

#include <cstdint>
#include <map>

#include "nmdec/complex.hpp"

namespace nmdec {

// original simplex -> copy simplex -> representative tops (source ids).
using SplitMap = std::map<Simplex, std::map<Simplex, std::vector<TopId>>>;

// Prefix tree over the sorted vertex words of every simplex of the complex,
// minus the splitmap keys. Leaves carry one incident top; any node reaches a top coface through its leftmost leaf.
class FtTrie {
 public:
  static FtTrie build(const Complex& source, const SplitMap& excluded);

  // A top containing gamma; throws NotInTrie when gamma is not a stored word.
  TopId lookup(const Simplex& gamma, std::uint64_t* comparisons = nullptr) const;
  bool contains(const Simplex& gamma) const;
  std::size_t node_count() const { return nodes_.size() - 1; }  // root excluded
  std::size_t word_count() const;
  // All stored words in lexicographic order.
  std::vector<Simplex> words() const;

 private:
  struct Node {
    std::vector<std::pair<VertexId, std::uint32_t>> children;  // sorted by vertex
    bool word = false;
    TopId payload = 0;  // meaningful on leaves
  };
  std::int64_t find(const Simplex& gamma, std::uint64_t* comparisons) const;
  std::uint32_t child(std::uint32_t node, VertexId v, std::uint64_t* comparisons) const;

  std::vector<Node> nodes_{Node{}};
};

}  // namespace nmdec
