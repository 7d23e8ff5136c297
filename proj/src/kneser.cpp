#include "qkneser/kneser.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "qkneser/errors.hpp"
#include "qkneser/points.hpp"
#include "qkneser/qcombin.hpp"

namespace qkneser {

Graph::Graph(std::size_t n, Origin origin)
    : n_(n), words_((n + 63) / 64), bits_(n * words_, 0), origin_(origin), labels_(n) {
  for (std::size_t i = 0; i < n; ++i) labels_[i] = i;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  bits_[u * words_ + (v >> 6)] |= 1ull << (v & 63);
  bits_[v * words_ + (u >> 6)] |= 1ull << (u & 63);
}

std::size_t Graph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w)
    d += static_cast<std::size_t>(std::popcount(bits_[u * words_ + w]));
  return d;
}

std::uint64_t Graph::edge_count() const {
  std::uint64_t total = 0;
  for (std::size_t u = 0; u < n_; ++u) total += degree(u);
  return total / 2;
}

std::vector<std::size_t> Graph::neighbours(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = bits_[u * words_ + w];
    while (word) {
      out.push_back((w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

Colouring make_colouring(std::vector<long long> ids) {
  Colouring c;
  c.colour = std::move(ids);
  std::set<long long> palette(c.colour.begin(), c.colour.end());
  c.palette_size = palette.size();
  return c;
}

Graph build_q_kneser(std::uint32_t v, std::uint32_t k, std::uint32_t q,
                     std::uint64_t max_vertices) {
  if (k == 0 || k > v) throw std::invalid_argument("need 1 <= k <= v");
  ExactInt count = gauss_binomial(v, k, q);
  if (count > ExactInt(max_vertices))
    throw ResourceLimitError("qK graph would have " + count.str() + " vertices (limit " +
                             std::to_string(max_vertices) + ")");
  std::size_t n = static_cast<std::size_t>(count.convert_to<std::uint64_t>());

  Graph g(n, {Graph::Origin::Kind::QKneser, v, k, q});
  PointSpace points(v, q);
  auto subs = enumerate_subspaces(v, k, q);
  std::vector<std::vector<std::uint64_t>> pbits(n);
  for (std::size_t i = 0; i < n; ++i) pbits[i] = points.point_bits(subs[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!bits::intersects(pbits[i], pbits[j])) g.add_edge(i, j);
  return g;
}

namespace {

std::uint64_t binomial_u64(std::uint32_t n, std::uint32_t k) {
  ExactInt r = gauss_binomial(n, k, 1);
  if (r > ExactInt(UINT64_MAX)) throw ResourceLimitError("binomial overflows 64 bits");
  return r.convert_to<std::uint64_t>();
}

// All k-subsets of {0..v-1} as bitmasks in increasing numeric order, which
// is exactly colexicographic order on the subsets.
std::vector<std::uint64_t> colex_masks(std::uint32_t v, std::uint32_t k) {
  std::vector<std::uint64_t> masks;
  if (k == 0) {
    masks.push_back(0);
    return masks;
  }
  std::uint64_t m = (1ull << k) - 1;
  std::uint64_t last = m << (v - k);
  while (true) {
    masks.push_back(m);
    if (m == last) break;
    std::uint64_t u = m & (~m + 1);
    std::uint64_t s = m + u;
    m = s | (((m ^ s) / u) >> 2);
  }
  return masks;
}

}  // namespace

Graph build_kneser(std::uint32_t v, std::uint32_t k, std::uint64_t max_vertices) {
  if (k == 0 || k > v) throw std::invalid_argument("need 1 <= k <= v");
  if (v > 63) throw ResourceLimitError("ordinary Kneser ground set limited to 63 elements");
  std::uint64_t count = binomial_u64(v, k);
  if (count > max_vertices)
    throw ResourceLimitError("Kneser graph would have " + std::to_string(count) +
                             " vertices (limit " + std::to_string(max_vertices) + ")");
  auto masks = colex_masks(v, k);
  Graph g(masks.size(), {Graph::Origin::Kind::Kneser, v, k, 0});
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if ((masks[i] & masks[j]) == 0) g.add_edge(i, j);
  return g;
}

Colouring largest_element_colouring(std::uint32_t v, std::uint32_t k) {
  if (v < 2 * k) throw std::invalid_argument("largest-element colouring needs v >= 2k");
  auto masks = colex_masks(v, k);
  std::vector<long long> ids(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    std::uint32_t max_elem = 63 - static_cast<std::uint32_t>(std::countl_zero(masks[i]));
    if (max_elem >= 2 * k)
      ids[i] = static_cast<long long>(max_elem) - 2 * k + 2;
    else
      ids[i] = (masks[i] & 1) ? 0 : 1;
  }
  return make_colouring(std::move(ids));
}

ColouringVerdict verify_colouring(const Graph& g, const Colouring& c) {
  if (c.colour.size() != g.vertex_count())
    throw std::invalid_argument("colouring does not cover every vertex");
  for (auto id : c.colour)
    if (id < 0) throw std::invalid_argument("colouring is partial (negative colour id)");
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t w : g.neighbours(u)) {
      if (w <= u) continue;
      if (c.colour[u] == c.colour[w]) return {false, std::make_pair(u, w)};
    }
  return {true, std::nullopt};
}

void export_dimacs(const Graph& g, std::ostream& out) {
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t w : g.neighbours(u)) {
      if (w <= u) continue;
      out << "e " << (u + 1) << " " << (w + 1) << "\n";
    }
}

void export_dimacs(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  export_dimacs(g, out);
  if (!out.good()) throw std::runtime_error("write failure on " + path);
}

}  // namespace qkneser
