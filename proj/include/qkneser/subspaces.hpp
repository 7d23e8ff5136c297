#pragma once

#include <cstdint>
#include <vector>

#include "qkneser/gf.hpp"

namespace qkneser {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  [[nodiscard]] const FieldPtr& field() const { return field_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  [[nodiscard]] FieldElement at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, FieldElement x) { entries_[r * cols_ + c] = x; }

  /// Builds a matrix from element indices, validating them for the field.
  static Matrix from_indices(const FieldPtr& field,
                             const std::vector<std::vector<std::uint32_t>>& rows);

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> entries_;
};

/// Unique reduced row echelon form of m with zero rows removed.  Idempotent;
/// invariant under invertible row operations.
[[nodiscard]] Matrix rref(const Matrix& m);

/// RREF together with the pivot column of each surviving row.
[[nodiscard]] std::pair<Matrix, std::vector<std::uint32_t>> rref_with_pivots(const Matrix& m);

[[nodiscard]] std::size_t matrix_rank(const Matrix& m);

/// Basis of {w : m w = 0}, one vector per free column, in free-column order.
[[nodiscard]] std::vector<std::vector<FieldElement>> nullspace(const Matrix& m);

/// A k-dimensional subspace of F_q^v, canonically represented by the unique
/// RREF basis matrix with no zero rows.  Equality of subspaces is equality
/// of representations.
class Subspace {
 public:
  /// Wraps a matrix that is already in canonical form (checked).
  Subspace(Matrix basis, std::uint32_t ambient_dim);

  static Subspace zero(const FieldPtr& field, std::uint32_t ambient_dim);

  [[nodiscard]] std::uint32_t ambient_dim() const { return v_; }
  [[nodiscard]] std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_.rows()); }
  [[nodiscard]] std::uint32_t q() const { return basis_.field()->q(); }
  [[nodiscard]] const FieldPtr& field() const { return basis_.field(); }
  [[nodiscard]] const Matrix& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::uint32_t>& pivots() const { return pivots_; }

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Matrix basis_;
  std::vector<std::uint32_t> pivots_;
  std::uint32_t v_;
};

/// The subspace spanned by the given vectors (lists of element indices of
/// length v); dim = rank of the stack.
[[nodiscard]] Subspace canonicalize(const FieldPtr& field, std::uint32_t v,
                                    const std::vector<std::vector<std::uint32_t>>& vectors);
[[nodiscard]] Subspace canonicalize(const Matrix& stacked);

/// Number of k-dimensional subspaces of F_q^v as a guarded 64-bit count;
/// throws ResourceLimitError on overflow.
[[nodiscard]] std::uint64_t subspace_count(std::uint32_t v, std::uint32_t k, std::uint32_t q);

/// All k-dimensional subspaces of F_q^v, each exactly once, in the canonical
/// order: pivot-column k-subsets lexicographically, then free entries as a
/// base-q counter with the last free cell (row-major) least significant.
[[nodiscard]] std::vector<Subspace> enumerate_subspaces(std::uint32_t v, std::uint32_t k,
                                                        std::uint32_t q);

/// Position of s in the enumerate_subspaces order.
[[nodiscard]] std::uint64_t rank_of(const Subspace& s);

/// Inverse of rank_of; throws std::out_of_range for i >= subspace_count.
[[nodiscard]] Subspace unrank(std::uint32_t v, std::uint32_t k, std::uint32_t q, std::uint64_t i);

/// Intersection and sum of subspaces of the same ambient space.
[[nodiscard]] Subspace meet(const Subspace& a, const Subspace& b);
[[nodiscard]] Subspace join(const Subspace& a, const Subspace& b);

/// True iff a and b meet only in the zero vector, i.e. the stacked bases
/// have full rank dim(a) + dim(b).
[[nodiscard]] bool trivial_intersection(const Subspace& a, const Subspace& b);

/// True iff inner is contained in outer.
[[nodiscard]] bool contains(const Subspace& outer, const Subspace& inner);

}  // namespace qkneser
