#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qkneser/subspaces.hpp"

namespace qkneser {

inline constexpr std::uint64_t kDefaultMaxVertices = 1'000'000;

/// Simple undirected loop-free graph with a dense bit-matrix adjacency,
/// O(1) edge queries and word-level row access for the solvers.  Vertices
/// are labelled by their subspace rank (q-Kneser) or k-subset colex rank
/// (ordinary Kneser); construction orders make labels the identity.
class Graph {
 public:
  struct Origin {
    enum class Kind { Generic, QKneser, Kneser } kind = Kind::Generic;
    std::uint32_t v = 0, k = 0, q = 0;
    friend bool operator==(const Origin&, const Origin&) = default;
  };

  explicit Graph(std::size_t n) : Graph(n, Origin{}) {}
  Graph(std::size_t n, Origin origin);

  [[nodiscard]] std::size_t vertex_count() const { return n_; }
  [[nodiscard]] const Origin& origin() const { return origin_; }
  [[nodiscard]] const std::vector<std::uint64_t>& labels() const { return labels_; }

  void add_edge(std::size_t u, std::size_t v);
  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1;
  }
  [[nodiscard]] std::size_t degree(std::size_t u) const;
  [[nodiscard]] std::uint64_t edge_count() const;
  [[nodiscard]] std::vector<std::size_t> neighbours(std::size_t u) const;

  /// Word view of a vertex row, words_per_row() words long.
  [[nodiscard]] const std::uint64_t* row(std::size_t u) const { return &bits_[u * words_]; }
  [[nodiscard]] std::size_t words_per_row() const { return words_; }

 private:
  std::size_t n_, words_;
  std::vector<std::uint64_t> bits_;
  Origin origin_;
  std::vector<std::uint64_t> labels_;
};

/// Total assignment of colours (non-negative ids) to the vertices of a
/// graph; palette_size is the number of distinct colours used.
struct Colouring {
  std::vector<long long> colour;
  std::size_t palette_size = 0;
};

/// Builds a Colouring from raw ids, computing palette_size.
[[nodiscard]] Colouring make_colouring(std::vector<long long> ids);

struct ColouringVerdict {
  bool proper = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness_edge;  // endpoints share a colour
};

/// q-Kneser graph qK_{v:k}: vertices are the k-subspaces of F_q^v in
/// enumeration order, adjacent when they intersect trivially.
[[nodiscard]] Graph build_q_kneser(std::uint32_t v, std::uint32_t k, std::uint32_t q,
                                   std::uint64_t max_vertices = kDefaultMaxVertices);

/// Ordinary Kneser graph K_{v:k}: vertices are k-subsets of {0..v-1} in
/// colexicographic order, adjacent when disjoint.
[[nodiscard]] Graph build_kneser(std::uint32_t v, std::uint32_t k,
                                 std::uint64_t max_vertices = kDefaultMaxVertices);

/// The (v-2k+2)-colouring of K_{v:k}: a k-set whose largest element m is at
/// least 2k (0-based) is coloured by m; the K_{2k:k} of leftovers is a
/// perfect matching, 2-coloured by "contains element 0".
[[nodiscard]] Colouring largest_element_colouring(std::uint32_t v, std::uint32_t k);

/// PROPER, or IMPROPER with the first monochromatic edge in vertex order.
/// Throws std::invalid_argument on a partial colouring.
[[nodiscard]] ColouringVerdict verify_colouring(const Graph& g, const Colouring& c);

/// DIMACS edge format: "p edge n m" then one "e u v" line per edge with
/// 1-based endpoints, u < v, lexicographically sorted.  Byte-deterministic.
void export_dimacs(const Graph& g, std::ostream& out);
void export_dimacs(const Graph& g, const std::string& path);

}  // namespace qkneser
