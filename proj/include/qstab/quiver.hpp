#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qstab {

// A quiver of Dynkin type A_n: n vertices 1..n in a line, and for each
// position i in 1..n-1 one arrow between i and i+1.  The orientation is an
// (n-1)-letter word over {R, L}: 'R' at position i means the arrow i -> i+1,
// 'L' means i+1 -> i.  A_1 has the empty word.
struct type_a_quiver {
  int n = 1;
  std::string arrows;

  friend bool operator==(const type_a_quiver&, const type_a_quiver&) = default;
};

// True when the arrow at position i (1-based, i in 1..n-1) points i -> i+1.
inline bool points_right(const type_a_quiver& q, int i) {
  return q.arrows[static_cast<std::size_t>(i - 1)] == 'R';
}

// Accepts an orientation word, optionally prefixed by the vertex count as in
// "8:RRLRRLR".  The bare word has the count inferred as length + 1.
inline type_a_quiver parse_quiver(std::string_view text) {
  std::string_view word = text;
  long declared = -1;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    const std::string_view head = text.substr(0, colon);
    const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), declared);
    if (ec != std::errc() || ptr != head.data() + head.size())
      throw std::invalid_argument("quiver: malformed vertex-count prefix");
    word = text.substr(colon + 1);
  }
  for (const char c : word)
    if (c != 'R' && c != 'L')
      throw std::invalid_argument(std::string("quiver: invalid orientation letter '") + c + "'");
  const int n = static_cast<int>(word.size()) + 1;
  if (declared >= 0 && declared != n)
    throw std::invalid_argument("quiver: vertex-count prefix does not match word length");
  return type_a_quiver{n, std::string(word)};
}

// Same vertices, every arrow reversed: letterwise R <-> L swap.
inline type_a_quiver opposite(const type_a_quiver& q) {
  type_a_quiver op = q;
  for (char& c : op.arrows) c = (c == 'R') ? 'L' : 'R';
  return op;
}

// Planar staircase coordinates of the vertices: x(1) = y(1) = 0, and from z
// to z+1 exactly one coordinate grows by 1 (x for an R arrow, y for an L).
// Hence x(z) + y(z) = z - 1 for every vertex.
struct embedding_map {
  std::vector<int> x, y;  // indexed by vertex - 1

  int x_of(int v) const { return x[static_cast<std::size_t>(v - 1)]; }
  int y_of(int v) const { return y[static_cast<std::size_t>(v - 1)]; }
};

inline embedding_map staircase_embedding(const type_a_quiver& q) {
  embedding_map em;
  em.x.resize(static_cast<std::size_t>(q.n), 0);
  em.y.resize(static_cast<std::size_t>(q.n), 0);
  for (int v = 2; v <= q.n; ++v) {
    const std::size_t i = static_cast<std::size_t>(v - 1);
    em.x[i] = em.x[i - 1] + (points_right(q, v - 1) ? 1 : 0);
    em.y[i] = em.y[i - 1] + (points_right(q, v - 1) ? 0 : 1);
  }
  return em;
}

// Level sets X_k = {z : x(z) = k} and Y_k = {z : y(z) = k}, each a nonempty
// run of consecutive vertices, together with the nested chains
// Xtilde_i = X_i u X_{i+1} u ... and Ytilde_i likewise.  Chain index 0 is
// always the full vertex set.
struct level_decomposition {
  std::vector<std::vector<int>> x_levels, y_levels;
  std::vector<std::vector<int>> x_chains, y_chains;
};

inline level_decomposition level_sets(const type_a_quiver& q) {
  const embedding_map em = staircase_embedding(q);
  level_decomposition ld;
  ld.x_levels.resize(static_cast<std::size_t>(em.x.back()) + 1);
  ld.y_levels.resize(static_cast<std::size_t>(em.y.back()) + 1);
  for (int v = 1; v <= q.n; ++v) {
    ld.x_levels[static_cast<std::size_t>(em.x_of(v))].push_back(v);
    ld.y_levels[static_cast<std::size_t>(em.y_of(v))].push_back(v);
  }
  const auto chains_of = [](const std::vector<std::vector<int>>& levels) {
    std::vector<std::vector<int>> chains(levels.size());
    for (std::size_t i = levels.size(); i-- > 0;) {
      chains[i] = levels[i];
      if (i + 1 < levels.size())
        chains[i].insert(chains[i].end(), chains[i + 1].begin(), chains[i + 1].end());
    }
    for (auto& c : chains) std::sort(c.begin(), c.end());
    return chains;
  };
  ld.x_chains = chains_of(ld.x_levels);
  ld.y_chains = chains_of(ld.y_levels);
  return ld;
}

inline constexpr int max_orientation_vertices = 20;

// All 2^(n-1) orientation words of A_n in lexicographic order (L before R).
inline std::vector<type_a_quiver> all_orientations(int n) {
  if (n < 1 || n > max_orientation_vertices)
    throw std::invalid_argument("all_orientations: vertex count out of range");
  const int len = n - 1;
  std::vector<type_a_quiver> out;
  out.reserve(std::size_t{1} << len);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
    std::string word(static_cast<std::size_t>(len), 'L');
    for (int j = 0; j < len; ++j)
      if ((bits >> (len - 1 - j)) & 1) word[static_cast<std::size_t>(j)] = 'R';
    out.push_back(type_a_quiver{n, std::move(word)});
  }
  return out;
}

}  // namespace qstab
