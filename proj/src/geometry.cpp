#include "qkneser/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "qkneser/errors.hpp"
#include "qkneser/qcombin.hpp"

namespace qkneser {

Incidence::Incidence(std::uint32_t v, std::uint32_t q, std::uint64_t max_lines)
    : v_(v), q_(q), points_(v, q) {
  if (v < 3) throw std::invalid_argument("projective incidence needs v >= 3");
  ExactInt line_count = gauss_binomial(v, 2, q);
  if (line_count > ExactInt(max_lines))
    throw ResourceLimitError("PG(" + std::to_string(v - 1) + "," + std::to_string(q) +
                             ") has " + line_count.str() + " lines (limit " +
                             std::to_string(max_lines) + ")");

  lines_ = enumerate_subspaces(v, 2, q);
  planes_ = enumerate_subspaces(v, 3, q);
  line_words_ = (lines_.size() + 63) / 64;

  line_point_bits_.resize(lines_.size());
  points_on_line_.resize(lines_.size());
  for (std::uint64_t l = 0; l < lines_.size(); ++l) {
    line_point_bits_[l] = points_.point_bits(lines_[l]);
    points_on_line_[l] = points_.point_ranks(lines_[l]);
  }

  plane_point_bits_.resize(planes_.size());
  for (std::uint64_t pl = 0; pl < planes_.size(); ++pl)
    plane_point_bits_[pl] = points_.point_bits(planes_[pl]);

  lines_through_point_.resize(points_.num_points());
  point_line_bits_.assign(points_.num_points(), std::vector<std::uint64_t>(line_words_, 0));
  for (std::uint64_t l = 0; l < lines_.size(); ++l)
    for (std::uint64_t p : points_on_line_[l]) {
      lines_through_point_[p].push_back(l);
      bits::set(point_line_bits_[p], l);
    }

  lines_in_plane_.resize(planes_.size());
  planes_containing_line_.resize(lines_.size());
  plane_line_bits_.assign(planes_.size(), std::vector<std::uint64_t>(line_words_, 0));
  for (std::uint64_t pl = 0; pl < planes_.size(); ++pl)
    for (std::uint64_t l = 0; l < lines_.size(); ++l)
      if (bits::is_subset(line_point_bits_[l], plane_point_bits_[pl])) {
        lines_in_plane_[pl].push_back(l);
        bits::set(plane_line_bits_[pl], l);
        planes_containing_line_[l].push_back(pl);
      }
}

std::string cover_to_json(const Cover& c) {
  nlohmann::json j;
  j["v"] = c.v;
  j["q"] = c.q;
  j["points"] = c.points;
  j["planes"] = c.planes;
  return j.dump();
}

Cover cover_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Cover c;
  c.v = j.at("v").get<std::uint32_t>();
  c.q = j.at("q").get<std::uint32_t>();
  c.points = j.at("points").get<std::vector<std::uint64_t>>();
  c.planes = j.at("planes").get<std::vector<std::uint64_t>>();
  std::sort(c.points.begin(), c.points.end());
  std::sort(c.planes.begin(), c.planes.end());
  return c;
}

namespace {

void require_ambient(const Incidence& geo, const Cover& c) {
  if (c.v != geo.v() || c.q != geo.q())
    throw std::invalid_argument("cover ambient does not match incidence structure");
  for (auto p : c.points)
    if (p >= geo.num_points()) throw std::invalid_argument("cover point rank out of range");
  for (auto pl : c.planes)
    if (pl >= geo.num_planes()) throw std::invalid_argument("cover plane rank out of range");
}

}  // namespace

CoverVerdict is_cover(const Incidence& geo, const Cover& c) {
  require_ambient(geo, c);
  std::vector<std::uint64_t> covered(geo.line_words(), 0);
  for (auto p : c.points)
    for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= geo.point_line_bits(p)[w];
  for (auto pl : c.planes)
    for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= geo.plane_line_bits(pl)[w];
  for (std::uint64_t l = 0; l < geo.num_lines(); ++l)
    if (!bits::test(covered, l)) return {false, l};
  return {true, std::nullopt};
}

Cover standard_cover(const Incidence& geo, const StandardCoverParams& params) {
  if (geo.v() != 4) throw std::invalid_argument("standard covers live in PG(3,q)");
  std::uint32_t q = geo.q();
  if (params.plane >= geo.num_planes()) throw std::invalid_argument("plane rank out of range");
  if (params.apex >= geo.num_points()) throw std::invalid_argument("point rank out of range");
  std::set<std::uint64_t> lines(params.lines.begin(), params.lines.end());
  if (lines.size() != params.lines.size())
    throw std::invalid_argument("duplicate lines in standard cover parameters");
  std::uint64_t s = lines.size();
  if (s < 1 || s > q) throw std::invalid_argument("need between 1 and q lines");
  if (!bits::test(geo.plane_point_bits(params.plane), params.apex))
    throw std::invalid_argument("apex point does not lie on the chosen plane");
  for (auto l : lines) {
    if (l >= geo.num_lines()) throw std::invalid_argument("line rank out of range");
    if (!bits::test(geo.plane_line_bits(params.plane), l))
      throw std::invalid_argument("chosen line not contained in the plane");
    if (!bits::test(geo.line_point_bits(l), params.apex))
      throw std::invalid_argument("chosen line does not pass through the apex");
  }

  Cover cover;
  cover.v = geo.v();
  cover.q = q;

  // Points of H off the chosen lines.
  std::vector<std::uint64_t> off = geo.plane_point_bits(params.plane);
  for (auto l : lines)
    for (std::size_t w = 0; w < off.size(); ++w) off[w] &= ~geo.line_point_bits(l)[w];
  for (std::uint64_t p = 0; p < geo.num_points(); ++p)
    if (bits::test(off, p)) cover.points.push_back(p);

  // Planes other than H through one of the chosen lines.
  std::set<std::uint64_t> planes;
  for (auto l : lines)
    for (auto pl : geo.planes_containing_line(l))
      if (pl != params.plane) planes.insert(pl);
  cover.planes.assign(planes.begin(), planes.end());

  if (cover.points.size() != static_cast<std::uint64_t>(q) * (q + 1 - s) ||
      cover.planes.size() != s * q)
    throw std::logic_error("standard cover size formula violated");
  return cover;
}

namespace {

ClassifyVerdict not_standard(const std::string& step) { return {false, std::nullopt, step}; }

}  // namespace

namespace {

// Reconstruction attempt against one candidate plane H.
ClassifyVerdict classify_against_plane(const Incidence& geo, const Cover& c, std::uint64_t s,
                                       const Subspace& h, std::uint64_t h_rank) {
  std::uint32_t q = geo.q();
  if (std::binary_search(c.planes.begin(), c.planes.end(), h_rank))
    return not_standard("lines");

  auto meet_of_planes = [&]() {
    Subspace m = geo.plane(c.planes.front());
    for (std::size_t i = 1; i < c.planes.size(); ++i) m = meet(m, geo.plane(c.planes[i]));
    return m;
  };

  // Apex x: the common point of the cover planes when s >= 2; when s = 1
  // all cover planes share a line of H and any of its points works, so the
  // least is taken.
  std::uint64_t x_rank;
  if (s >= 2) {
    Subspace apex_sub = meet_of_planes();
    if (apex_sub.dim() != 1) return not_standard("apex");
    x_rank = rank_of(apex_sub);
  } else {
    Subspace common = meet_of_planes();
    if (common.dim() != 2) return not_standard("apex");
    std::uint64_t common_rank = rank_of(common);
    if (!bits::test(geo.plane_line_bits(h_rank), common_rank)) return not_standard("apex");
    x_rank = geo.points_on_line(common_rank).front();
  }
  if (!bits::test(geo.plane_point_bits(h_rank), x_rank)) return not_standard("apex");
  if (std::binary_search(c.points.begin(), c.points.end(), x_rank))
    return not_standard("apex");

  // Candidate lines: the traces of the cover planes on H.  There must be
  // exactly s of them, all through x, each carrying its q planes.
  std::map<std::uint64_t, std::uint64_t> trace_count;
  for (auto pl : c.planes) {
    Subspace trace = meet(geo.plane(pl), h);
    if (trace.dim() != 2) return not_standard("lines");
    ++trace_count[rank_of(trace)];
  }
  if (trace_count.size() != s) return not_standard("lines");
  std::vector<std::uint64_t> lines;
  for (const auto& [l, count] : trace_count) {
    if (count != q) return not_standard("lines");
    if (!bits::test(geo.line_point_bits(l), x_rank)) return not_standard("lines");
    if (!bits::test(geo.plane_line_bits(h_rank), l)) return not_standard("lines");
    lines.push_back(l);
  }

  // Points must be exactly H minus the chosen lines.
  std::vector<std::uint64_t> expected = geo.plane_point_bits(h_rank);
  for (auto l : lines)
    for (std::size_t w = 0; w < expected.size(); ++w) expected[w] &= ~geo.line_point_bits(l)[w];
  std::vector<std::uint64_t> expected_points;
  for (std::uint64_t p = 0; p < geo.num_points(); ++p)
    if (bits::test(expected, p)) expected_points.push_back(p);
  if (expected_points != c.points) return not_standard("points");

  StandardCoverParams params{h_rank, x_rank, lines};
  if (!(standard_cover(geo, params) == c)) return not_standard("roundtrip");
  return {true, params, ""};
}

}  // namespace

ClassifyVerdict classify_standard(const Incidence& geo, const Cover& input) {
  if (geo.v() != 4) throw std::invalid_argument("standard covers live in PG(3,q)");
  require_ambient(geo, input);
  Cover c = input;
  std::sort(c.points.begin(), c.points.end());
  std::sort(c.planes.begin(), c.planes.end());
  std::uint32_t q = geo.q();
  std::uint64_t r = c.points.size(), sq = c.planes.size();

  // Size shape: r + s*q = q^2 + q with r = q(q+1-s) for an integer
  // 1 <= s <= q.
  if (r + sq != static_cast<std::uint64_t>(q) * q + q) return not_standard("size");
  if (sq == 0 || sq % q != 0) return not_standard("size");
  std::uint64_t s = sq / q;
  if (s < 1 || s > q) return not_standard("size");
  if (r != static_cast<std::uint64_t>(q) * (q + 1 - s)) return not_standard("size");

  const PointSpace& pts = geo.point_space();

  // Candidate planes H.  The cover points span H except when s = q, where
  // they span only a line of H and each of its q+1 planes is a candidate.
  Subspace span_points = Subspace::zero(pts.field(), geo.v());
  for (auto p : c.points) span_points = join(span_points, pts.point(p));

  std::vector<std::uint64_t> candidates;
  if (span_points.dim() == 3) {
    candidates.push_back(rank_of(span_points));
  } else if (span_points.dim() == 2) {
    candidates = geo.planes_containing_line(rank_of(span_points));
  } else {
    return not_standard("plane-span");
  }

  ClassifyVerdict first_failure = not_standard("plane-span");
  bool have_failure = false;
  for (std::uint64_t h_rank : candidates) {
    ClassifyVerdict verdict = classify_against_plane(geo, c, s, geo.plane(h_rank), h_rank);
    if (verdict.standard) return verdict;
    if (!have_failure) {
      first_failure = verdict;
      have_failure = true;
    }
  }
  return first_failure;
}

Colouring cover_to_colouring(const Incidence& geo, const Cover& input, const Graph& g) {
  require_ambient(geo, input);
  Cover c = input;
  std::sort(c.points.begin(), c.points.end());
  std::sort(c.planes.begin(), c.planes.end());
  if (g.origin().kind != Graph::Origin::Kind::QKneser || g.origin().v != geo.v() ||
      g.origin().k != 2 || g.origin().q != geo.q())
    throw std::invalid_argument("graph is not the q-Kneser line graph of this geometry");
  auto verdict = is_cover(geo, c);
  if (!verdict.is_cover)
    throw std::domain_error("not a cover: line " + std::to_string(*verdict.witness_line) +
                            " is uncovered");

  std::vector<long long> ids(g.vertex_count(), -1);
  for (std::uint64_t l = 0; l < geo.num_lines(); ++l) {
    for (auto p : c.points)
      if (bits::test(geo.line_point_bits(l), p)) {
        ids[l] = static_cast<long long>(p);
        break;
      }
    if (ids[l] >= 0) continue;
    for (auto pl : c.planes)
      if (bits::test(geo.plane_line_bits(pl), l)) {
        ids[l] = static_cast<long long>(geo.num_points() + pl);
        break;
      }
  }
  return make_colouring(std::move(ids));
}

Colouring hyperplane_colouring(std::uint32_t v, std::uint32_t k, std::uint32_t q,
                               std::uint64_t max_vertices) {
  if (v < 2 * k) throw std::invalid_argument("hyperplane colouring needs v >= 2k");
  ExactInt count = gauss_binomial(v, k, q);
  if (count > ExactInt(max_vertices))
    throw ResourceLimitError("qK graph exceeds vertex limit");

  PointSpace pts(v, q);
  auto subs = enumerate_subspaces(v, k, q);

  // U = span of the last v-k+1 standard basis vectors; every k-space meets
  // it non-trivially since dim S + dim U > v.
  std::vector<std::vector<std::uint32_t>> gens;
  for (std::uint32_t c = k - 1; c < v; ++c) {
    std::vector<std::uint32_t> row(v, 0);
    row[c] = 1;
    gens.push_back(row);
  }
  Subspace u = canonicalize(pts.field(), v, gens);
  auto u_bits = pts.point_bits(u);

  std::vector<long long> ids(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto s_bits = pts.point_bits(subs[i]);
    for (std::size_t w = 0; w < s_bits.size(); ++w) s_bits[w] &= u_bits[w];
    std::uint64_t least = bits::first(s_bits);
    if (least == UINT64_MAX) throw std::logic_error("k-space misses U");
    ids[i] = static_cast<long long>(least);
  }
  return make_colouring(std::move(ids));
}

Colouring middle_colouring(std::uint32_t k, std::uint32_t q, std::uint64_t max_vertices) {
  if (k < 2) throw std::invalid_argument("middle colouring needs v = 2k >= 4");
  std::uint32_t v = 2 * k;
  ExactInt count = gauss_binomial(v, k, q);
  if (count > ExactInt(max_vertices))
    throw ResourceLimitError("qK graph exceeds vertex limit");

  PointSpace pts(v, q);
  auto subs = enumerate_subspaces(v, k, q);

  auto prefix_span = [&](std::uint32_t dim) {
    std::vector<std::vector<std::uint32_t>> gens;
    for (std::uint32_t c = 0; c < dim; ++c) {
      std::vector<std::uint32_t> row(v, 0);
      row[c] = 1;
      gens.push_back(row);
    }
    return canonicalize(pts.field(), v, gens);
  };
  Subspace t = prefix_span(k), u = prefix_span(k + 1);
  auto t_bits = pts.point_bits(t);
  auto u_bits = pts.point_bits(u);
  std::vector<std::uint64_t> u_minus_t(u_bits.size());
  for (std::size_t w = 0; w < u_bits.size(); ++w) u_minus_t[w] = u_bits[w] & ~t_bits[w];

  // Candidate colours of the second kind: (2k-1)-spaces containing T but
  // not U, in rank order.
  auto hyps = enumerate_subspaces(v, v - 1, q);
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> candidates;
  for (std::uint64_t w = 0; w < hyps.size(); ++w) {
    auto w_bits = pts.point_bits(hyps[w]);
    if (bits::is_subset(t_bits, w_bits) && !bits::is_subset(u_bits, w_bits))
      candidates.emplace_back(w, std::move(w_bits));
  }

  std::vector<long long> ids(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto s_bits = pts.point_bits(subs[i]);
    std::vector<std::uint64_t> outside(s_bits.size());
    for (std::size_t w = 0; w < s_bits.size(); ++w) outside[w] = s_bits[w] & u_minus_t[w];
    std::uint64_t least = bits::first(outside);
    if (least != UINT64_MAX) {
      ids[i] = static_cast<long long>(least);
      continue;
    }
    // S meets U inside T; it lies in a (2k-1)-space on T avoiding U.
    bool placed = false;
    for (const auto& [w_rank, w_bits] : candidates)
      if (bits::is_subset(s_bits, w_bits)) {
        ids[i] = static_cast<long long>(pts.num_points() + w_rank);
        placed = true;
        break;
      }
    if (!placed) throw std::logic_error("no (2k-1)-space colour available");
  }
  return make_colouring(std::move(ids));
}

}  // namespace qkneser
