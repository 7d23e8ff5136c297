#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qkneser/kneser.hpp"
#include "qkneser/points.hpp"
#include "qkneser/subspaces.hpp"

namespace qkneser {

/// Precomputed incidence structure of PG(v-1,q): points, lines and planes
/// are the 1-, 2- and 3-dimensional subspaces of F_q^v in canonical
/// enumeration order, with membership maps in both directions.  Immutable
/// after construction.
class Incidence {
 public:
  Incidence(std::uint32_t v, std::uint32_t q,
            std::uint64_t max_lines = kDefaultMaxVertices);

  [[nodiscard]] std::uint32_t v() const { return v_; }
  [[nodiscard]] std::uint32_t q() const { return q_; }
  [[nodiscard]] std::uint64_t num_points() const { return points_.num_points(); }
  [[nodiscard]] std::uint64_t num_lines() const { return lines_.size(); }
  [[nodiscard]] std::uint64_t num_planes() const { return planes_.size(); }

  [[nodiscard]] const PointSpace& point_space() const { return points_; }
  [[nodiscard]] const Subspace& line(std::uint64_t rank) const { return lines_[rank]; }
  [[nodiscard]] const Subspace& plane(std::uint64_t rank) const { return planes_[rank]; }

  [[nodiscard]] const std::vector<std::uint64_t>& lines_through_point(std::uint64_t p) const {
    return lines_through_point_[p];
  }
  [[nodiscard]] const std::vector<std::uint64_t>& points_on_line(std::uint64_t l) const {
    return points_on_line_[l];
  }
  [[nodiscard]] const std::vector<std::uint64_t>& lines_in_plane(std::uint64_t pl) const {
    return lines_in_plane_[pl];
  }
  [[nodiscard]] const std::vector<std::uint64_t>& planes_containing_line(std::uint64_t l) const {
    return planes_containing_line_[l];
  }

  /// Bitsets over line ranks (for cover computations).
  [[nodiscard]] std::size_t line_words() const { return line_words_; }
  [[nodiscard]] const std::vector<std::uint64_t>& point_line_bits(std::uint64_t p) const {
    return point_line_bits_[p];
  }
  [[nodiscard]] const std::vector<std::uint64_t>& plane_line_bits(std::uint64_t pl) const {
    return plane_line_bits_[pl];
  }

  /// Bitsets over point ranks.
  [[nodiscard]] const std::vector<std::uint64_t>& line_point_bits(std::uint64_t l) const {
    return line_point_bits_[l];
  }
  [[nodiscard]] const std::vector<std::uint64_t>& plane_point_bits(std::uint64_t pl) const {
    return plane_point_bits_[pl];
  }

 private:
  std::uint32_t v_, q_;
  PointSpace points_;
  std::vector<Subspace> lines_, planes_;
  std::size_t line_words_;
  std::vector<std::vector<std::uint64_t>> line_point_bits_, plane_point_bits_;
  std::vector<std::vector<std::uint64_t>> point_line_bits_, plane_line_bits_;
  std::vector<std::vector<std::uint64_t>> lines_through_point_, points_on_line_;
  std::vector<std::vector<std::uint64_t>> lines_in_plane_, planes_containing_line_;
};

/// A set of points and planes of PG(v-1,q) intended to meet every line.
/// Ranks refer to the canonical enumeration order; kept sorted.
struct Cover {
  std::uint32_t v = 0, q = 0;
  std::vector<std::uint64_t> points;
  std::vector<std::uint64_t> planes;
  friend bool operator==(const Cover&, const Cover&) = default;
};

[[nodiscard]] std::string cover_to_json(const Cover& c);
[[nodiscard]] Cover cover_from_json(const std::string& text);

struct CoverVerdict {
  bool is_cover = false;
  std::optional<std::uint64_t> witness_line;  // a line incident with no element
};

[[nodiscard]] CoverVerdict is_cover(const Incidence& geo, const Cover& c);

/// Parameters of a standard cover of PG(3,q): a plane H, a point x on H and
/// s lines of H through x with 1 <= s <= q.
struct StandardCoverParams {
  std::uint64_t plane = 0;            // H
  std::uint64_t apex = 0;             // x
  std::vector<std::uint64_t> lines;   // sorted, distinct
  friend bool operator==(const StandardCoverParams&, const StandardCoverParams&) = default;
};

/// The cover made of the q(q+1-s) points of H off the chosen lines and the
/// s*q planes other than H through one of them.
[[nodiscard]] Cover standard_cover(const Incidence& geo, const StandardCoverParams& params);

struct ClassifyVerdict {
  bool standard = false;
  std::optional<StandardCoverParams> params;  // reconstructed when standard
  std::string reason;                         // failing step when not
};

/// Decides constructively whether c equals standard_cover(p) for some p,
/// reconstructing p when it does.  Ambient must be PG(3,q).
[[nodiscard]] ClassifyVerdict classify_standard(const Incidence& geo, const Cover& c);

/// Colours each line vertex of g = qK_{v:2} by the least-rank cover point
/// incident with it, else the least-rank cover plane containing it.  Point
/// colours are point ranks; plane colours are offset by num_points.
[[nodiscard]] Colouring cover_to_colouring(const Incidence& geo, const Cover& c, const Graph& g);

/// Colours each k-space by the least-rank point of its intersection with a
/// fixed (v-k+1)-dimensional subspace U (the span of the last v-k+1
/// standard basis vectors).  Exactly [v-k+1] colours; proper.
[[nodiscard]] Colouring hyperplane_colouring(std::uint32_t v, std::uint32_t k, std::uint32_t q,
                                             std::uint64_t max_vertices = kDefaultMaxVertices);

/// The q^k + q^{k-1} colouring of qK_{2k:k}: fix T < U spanned by the first
/// k and k+1 standard basis vectors; a k-space S meeting U outside T is
/// coloured by the least-rank point of (S cap U) \ T, otherwise by the
/// least-rank (2k-1)-space containing T and S but not U (offset by the
/// point count).
[[nodiscard]] Colouring middle_colouring(std::uint32_t k, std::uint32_t q,
                                         std::uint64_t max_vertices = kDefaultMaxVertices);

}  // namespace qkneser
