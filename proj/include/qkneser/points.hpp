#pragma once

#include <cstdint>
#include <vector>

#include "qkneser/subspaces.hpp"

namespace qkneser {

/// The projective points of F_q^v (1-dimensional subspaces in canonical
/// enumeration order) with fast vector -> point-rank lookup, plus bitsets
/// over points.  Two subspaces intersect non-trivially exactly when they
/// share a point, which makes point bitsets the workhorse for adjacency
/// and incidence computations.
class PointSpace {
 public:
  PointSpace(std::uint32_t v, std::uint32_t q);

  [[nodiscard]] std::uint32_t v() const { return v_; }
  [[nodiscard]] std::uint32_t q() const { return q_; }
  [[nodiscard]] const FieldPtr& field() const { return field_; }
  [[nodiscard]] std::uint64_t num_points() const { return points_.size(); }
  [[nodiscard]] std::size_t words() const { return words_; }
  [[nodiscard]] const Subspace& point(std::uint64_t rank) const { return points_[rank]; }

  /// Rank of the point spanned by a nonzero vector.
  [[nodiscard]] std::uint64_t point_rank(const std::vector<FieldElement>& vec) const;

  /// Bitset (words() 64-bit words) of the points contained in s.
  [[nodiscard]] std::vector<std::uint64_t> point_bits(const Subspace& s) const;

  /// Sorted ranks of the points contained in s.
  [[nodiscard]] std::vector<std::uint64_t> point_ranks(const Subspace& s) const;

 private:
  std::uint32_t v_, q_;
  FieldPtr field_;
  std::size_t words_;
  std::vector<Subspace> points_;
  std::vector<std::uint64_t> rank_by_code_;  // base-q encoding -> rank
};

/// Shared helpers for flat 64-bit-word bitsets.
namespace bits {

inline void set(std::vector<std::uint64_t>& w, std::uint64_t i) { w[i >> 6] |= 1ull << (i & 63); }
inline bool test(const std::vector<std::uint64_t>& w, std::uint64_t i) {
  return (w[i >> 6] >> (i & 63)) & 1;
}
[[nodiscard]] bool intersects(const std::vector<std::uint64_t>& a,
                              const std::vector<std::uint64_t>& b);
[[nodiscard]] bool is_subset(const std::vector<std::uint64_t>& sub,
                             const std::vector<std::uint64_t>& super);
[[nodiscard]] std::size_t count(const std::vector<std::uint64_t>& w);
/// Lowest set bit index, or UINT64_MAX if empty.
[[nodiscard]] std::uint64_t first(const std::vector<std::uint64_t>& w);

}  // namespace bits

}  // namespace qkneser
