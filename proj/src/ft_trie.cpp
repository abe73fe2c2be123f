#include "nmdec/ft_trie.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace nmdec {

namespace {
constexpr std::uint32_t kNoChild = 0;  // the root is never a child
}

FtTrie FtTrie::build(const Complex& source, const SplitMap& excluded) {
  FtTrie tr;
  if (source.empty()) return tr;
  std::unordered_set<Simplex, SimplexHash> words;
  source.for_each_top([&](TopId, const Simplex& s) {
    for (int k = 0; k <= dim_of(s); ++k) for_each_face(s, k, [&](const Simplex& f) { words.insert(f); });
  });
  std::vector<Simplex> sorted(words.begin(), words.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& w : sorted) {
    if (excluded.count(w)) continue;
    std::uint32_t node = 0;
    for (VertexId v : w) {
      auto& ch = tr.nodes_[node].children;
      auto it = std::lower_bound(ch.begin(), ch.end(), v, [](const auto& p, VertexId x) { return p.first < x; });
      if (it == ch.end() || it->first != v) {
        const auto fresh = static_cast<std::uint32_t>(tr.nodes_.size());
        it = ch.insert(it, {v, fresh});
        tr.nodes_.emplace_back();
      }
      node = it->second;
    }
    tr.nodes_[node].word = true;
  }
  // Leaf payloads: the smallest top containing the leaf's word.
  std::vector<VertexId> path;
  std::function<void(std::uint32_t)> walk = [&](std::uint32_t n) {
    if (n != 0 && tr.nodes_[n].children.empty()) tr.nodes_[n].payload = star(source, path).front();
    for (const auto& [v, c] : tr.nodes_[n].children) {
      path.push_back(v);
      walk(c);
      path.pop_back();
    }
  };
  walk(0);
  return tr;
}

std::uint32_t FtTrie::child(std::uint32_t node, VertexId v, std::uint64_t* comparisons) const {
  const auto& ch = nodes_[node].children;
  std::size_t lo = 0, hi = ch.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (comparisons) ++*comparisons;
    if (ch[mid].first == v) return ch[mid].second;
    if (ch[mid].first < v) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return kNoChild;
}

std::int64_t FtTrie::find(const Simplex& gamma, std::uint64_t* comparisons) const {
  std::uint32_t node = 0;
  for (VertexId v : gamma) {
    node = child(node, v, comparisons);
    if (node == kNoChild) return -1;
  }
  return nodes_[node].word ? static_cast<std::int64_t>(node) : -1;
}

bool FtTrie::contains(const Simplex& gamma) const { return !gamma.empty() && find(gamma, nullptr) >= 0; }

TopId FtTrie::lookup(const Simplex& gamma, std::uint64_t* comparisons) const {
  std::int64_t n = gamma.empty() ? -1 : find(gamma, comparisons);
  if (n < 0) throw Error(Errc::NotInTrie, to_string(gamma));
  auto node = static_cast<std::uint32_t>(n);
  while (!nodes_[node].children.empty()) node = nodes_[node].children.front().second;
  return nodes_[node].payload;
}

std::size_t FtTrie::word_count() const {
  return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.word; }));
}

std::vector<Simplex> FtTrie::words() const {
  std::vector<Simplex> out;
  Simplex path;
  std::function<void(std::uint32_t)> walk = [&](std::uint32_t n) {
    if (nodes_[n].word) out.push_back(path);
    for (const auto& [v, c] : nodes_[n].children) {
      path.push_back(v);
      walk(c);
      path.pop_back();
    }
  };
  walk(0);
  return out;
}

}  // namespace nmdec
