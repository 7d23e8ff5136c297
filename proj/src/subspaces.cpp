#include "qkneser/subspaces.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qkneser/errors.hpp"

namespace qkneser {
namespace {

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base)
      throw ResourceLimitError("subspace cell count overflows 64 bits");
    r *= base;
  }
  return r;
}

std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  if (a > UINT64_MAX - b) throw ResourceLimitError("subspace count overflows 64 bits");
  return a + b;
}

// Free cells of the RREF cell with pivot columns P: positions (row i, col c)
// with c > P[i] and c not a pivot column, in row-major order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> free_cells(
    const std::vector<std::uint32_t>& pivots, std::uint32_t v) {
  std::vector<bool> is_pivot(v, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
  for (std::uint32_t i = 0; i < pivots.size(); ++i)
    for (std::uint32_t c = pivots[i] + 1; c < v; ++c)
      if (!is_pivot[c]) cells.emplace_back(i, c);
  return cells;
}

// Lexicographically next k-subset of {0..v-1}; false when exhausted.
bool next_combination(std::vector<std::uint32_t>& comb, std::uint32_t v) {
  std::uint32_t k = static_cast<std::uint32_t>(comb.size());
  if (k == 0) return false;
  std::uint32_t i = k;
  while (i-- > 0) {
    if (comb[i] != v - k + i) {
      ++comb[i];
      for (std::uint32_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.q() != b.q() ||
      a.field()->p() != b.field()->p())
    throw std::invalid_argument("subspaces live in different ambient spaces");
}

// Factors a prime power q and returns GF(q); throws for other q.
FieldPtr field_for_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t e = 0, t = q;
    while (t % p == 0) {
      t /= p;
      ++e;
    }
    if (t == 1) return FieldSpec::make(p, e);
    break;
  }
  throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
}

// Bit-packed rank over GF(2); rows fit in one word for v <= 64.
std::size_t rank_gf2(std::vector<std::uint64_t> rows) {
  std::size_t rank = 0;
  for (int bit = 63; bit >= 0 && rank < rows.size(); --bit) {
    std::uint64_t mask = 1ull << bit;
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::from_indices(const FieldPtr& field,
                            const std::vector<std::vector<std::uint32_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("inconsistent vector lengths");
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, field->element(rows[i][j]));
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_->q() == b.field_->q() &&
         a.entries_ == b.entries_;
}

std::pair<Matrix, std::vector<std::uint32_t>> rref_with_pivots(const Matrix& m) {
  const FieldPtr& F = m.field();
  Matrix work = m;
  std::vector<std::uint32_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < work.cols() && row < work.rows(); ++col) {
    std::size_t pr = row;
    while (pr < work.rows() && work.at(pr, col) == F->zero()) ++pr;
    if (pr == work.rows()) continue;
    if (pr != row)
      for (std::size_t c = 0; c < work.cols(); ++c) {
        FieldElement t = work.at(row, c);
        work.set(row, c, work.at(pr, c));
        work.set(pr, c, t);
      }
    FieldElement scale = F->inv(work.at(row, col));
    for (std::size_t c = col; c < work.cols(); ++c)
      work.set(row, c, F->mul(scale, work.at(row, c)));
    for (std::size_t r = 0; r < work.rows(); ++r) {
      if (r == row) continue;
      FieldElement factor = work.at(r, col);
      if (factor == F->zero()) continue;
      for (std::size_t c = col; c < work.cols(); ++c)
        work.set(r, c, F->sub(work.at(r, c), F->mul(factor, work.at(row, c))));
    }
    pivots.push_back(static_cast<std::uint32_t>(col));
    ++row;
  }
  Matrix out(F, row, work.cols());
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < work.cols(); ++c) out.set(r, c, work.at(r, c));
  return {out, pivots};
}

Matrix rref(const Matrix& m) { return rref_with_pivots(m).first; }

std::size_t matrix_rank(const Matrix& m) { return rref_with_pivots(m).second.size(); }

std::vector<std::vector<FieldElement>> nullspace(const Matrix& m) {
  const FieldPtr& F = m.field();
  auto [r, pivots] = rref_with_pivots(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElement> w(m.cols(), F->zero());
    w[f] = F->one();
    for (std::size_t i = 0; i < pivots.size(); ++i) w[pivots[i]] = F->neg(r.at(i, f));
    basis.push_back(std::move(w));
  }
  return basis;
}

Subspace::Subspace(Matrix basis, std::uint32_t ambient_dim)
    : basis_(std::move(basis)), v_(ambient_dim) {
  if (basis_.cols() != v_) throw std::invalid_argument("basis width != ambient dimension");
  auto [canon, piv] = rref_with_pivots(basis_);
  if (!(canon == basis_)) throw std::invalid_argument("basis is not in canonical RREF form");
  pivots_ = piv;
}

Subspace Subspace::zero(const FieldPtr& field, std::uint32_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), ambient_dim);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.v_ == b.v_ && a.basis_ == b.basis_;
}

Subspace canonicalize(const Matrix& stacked) {
  return Subspace(rref(stacked), static_cast<std::uint32_t>(stacked.cols()));
}

Subspace canonicalize(const FieldPtr& field, std::uint32_t v,
                      const std::vector<std::vector<std::uint32_t>>& vectors) {
  for (const auto& vec : vectors)
    if (vec.size() != v) throw std::invalid_argument("inconsistent vector lengths");
  if (vectors.empty()) return Subspace::zero(field, v);
  return canonicalize(Matrix::from_indices(field, vectors));
}

std::uint64_t subspace_count(std::uint32_t v, std::uint32_t k, std::uint32_t q) {
  if (k > v) return 0;
  if (k == 0) return 1;
  std::vector<std::uint32_t> pivots(k);
  for (std::uint32_t i = 0; i < k; ++i) pivots[i] = i;
  std::uint64_t total = 0;
  do {
    auto cells = free_cells(pivots, v);
    total = checked_add_u64(total, checked_pow_u64(q, static_cast<std::uint32_t>(cells.size())));
  } while (next_combination(pivots, v));
  return total;
}

namespace {

Matrix build_from_cell(const FieldPtr& F, std::uint32_t v,
                       const std::vector<std::uint32_t>& pivots,
                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& cells,
                       std::uint64_t counter) {
  std::uint32_t k = static_cast<std::uint32_t>(pivots.size());
  std::uint32_t q = F->q();
  Matrix m(F, k, v);
  for (std::uint32_t i = 0; i < k; ++i) m.set(i, pivots[i], F->one());
  // Last cell least significant.
  for (std::size_t j = cells.size(); j-- > 0;) {
    m.set(cells[j].first, cells[j].second, FieldElement(static_cast<std::uint32_t>(counter % q)));
    counter /= q;
  }
  return m;
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(std::uint32_t v, std::uint32_t k, std::uint32_t q) {
  if (k > v) throw std::invalid_argument("k > v");
  FieldPtr F = field_for_order(q);
  std::vector<Subspace> out;
  out.reserve(subspace_count(v, k, q));
  if (k == 0) {
    out.push_back(Subspace::zero(F, v));
    return out;
  }
  std::vector<std::uint32_t> pivots(k);
  for (std::uint32_t i = 0; i < k; ++i) pivots[i] = i;
  do {
    auto cells = free_cells(pivots, v);
    std::uint64_t count = checked_pow_u64(q, static_cast<std::uint32_t>(cells.size()));
    for (std::uint64_t c = 0; c < count; ++c)
      out.emplace_back(build_from_cell(F, v, pivots, cells, c), v);
  } while (next_combination(pivots, v));
  return out;
}

std::uint64_t rank_of(const Subspace& s) {
  std::uint32_t v = s.ambient_dim(), k = s.dim(), q = s.q();
  if (k == 0) return 0;
  std::vector<std::uint32_t> pivots(k);
  for (std::uint32_t i = 0; i < k; ++i) pivots[i] = i;
  std::uint64_t rank = 0;
  do {
    auto cells = free_cells(pivots, v);
    if (pivots == s.pivots()) {
      std::uint64_t idx = 0;
      for (const auto& [r, c] : cells) idx = idx * q + s.basis().at(r, c).index();
      return rank + idx;
    }
    rank = checked_add_u64(rank, checked_pow_u64(q, static_cast<std::uint32_t>(cells.size())));
  } while (next_combination(pivots, v));
  throw std::logic_error("pivot set not found in enumeration order");
}

Subspace unrank(std::uint32_t v, std::uint32_t k, std::uint32_t q, std::uint64_t i) {
  if (k > v) throw std::invalid_argument("k > v");
  FieldPtr F = field_for_order(q);
  if (k == 0) {
    if (i != 0) throw std::out_of_range("subspace rank out of range");
    return Subspace::zero(F, v);
  }
  std::vector<std::uint32_t> pivots(k);
  for (std::uint32_t j = 0; j < k; ++j) pivots[j] = j;
  do {
    auto cells = free_cells(pivots, v);
    std::uint64_t count = checked_pow_u64(q, static_cast<std::uint32_t>(cells.size()));
    if (i < count) return Subspace(build_from_cell(F, v, pivots, cells, i), v);
    i -= count;
  } while (next_combination(pivots, v));
  throw std::out_of_range("subspace rank out of range");
}

namespace {

Matrix stack(const Subspace& a, const Subspace& b) {
  Matrix m(a.field(), a.dim() + b.dim(), a.ambient_dim());
  for (std::uint32_t r = 0; r < a.dim(); ++r)
    for (std::uint32_t c = 0; c < a.ambient_dim(); ++c) m.set(r, c, a.basis().at(r, c));
  for (std::uint32_t r = 0; r < b.dim(); ++r)
    for (std::uint32_t c = 0; c < a.ambient_dim(); ++c)
      m.set(a.dim() + r, c, b.basis().at(r, c));
  return m;
}

}  // namespace

Subspace join(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return canonicalize(stack(a, b));
}

Subspace meet(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const FieldPtr& F = a.field();
  std::uint32_t v = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(F, v);

  // Left null space of the stacked basis: z = (x, y) with xA + yB = 0, so
  // xA ranges over the intersection of the row spaces.
  Matrix stacked = stack(a, b);
  Matrix transposed(F, v, stacked.rows());
  for (std::size_t r = 0; r < stacked.rows(); ++r)
    for (std::uint32_t c = 0; c < v; ++c) transposed.set(c, r, stacked.at(r, c));
  auto zs = nullspace(transposed);

  Matrix vecs(F, zs.size(), v);
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::uint32_t c = 0; c < v; ++c) {
      FieldElement acc = F->zero();
      for (std::uint32_t r = 0; r < a.dim(); ++r)
        acc = F->add(acc, F->mul(zs[i][r], a.basis().at(r, c)));
      vecs.set(i, c, acc);
    }
  Subspace result = canonicalize(vecs);

  // Modular law: dim meet + dim join = dim a + dim b.
  std::size_t join_dim = matrix_rank(stacked);
  if (result.dim() + join_dim != a.dim() + b.dim())
    throw std::logic_error("meet/join dimension identity violated");
  return result;
}

bool trivial_intersection(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.q() == 2 && a.ambient_dim() <= 64) {
    std::vector<std::uint64_t> rows;
    rows.reserve(a.dim() + b.dim());
    for (std::uint32_t r = 0; r < a.dim(); ++r) {
      std::uint64_t w = 0;
      for (std::uint32_t c = 0; c < a.ambient_dim(); ++c)
        if (a.basis().at(r, c) == a.field()->one()) w |= 1ull << c;
      rows.push_back(w);
    }
    for (std::uint32_t r = 0; r < b.dim(); ++r) {
      std::uint64_t w = 0;
      for (std::uint32_t c = 0; c < b.ambient_dim(); ++c)
        if (b.basis().at(r, c) == b.field()->one()) w |= 1ull << c;
      rows.push_back(w);
    }
    return rank_gf2(std::move(rows)) == a.dim() + b.dim();
  }
  return matrix_rank(stack(a, b)) == a.dim() + b.dim();
}

bool contains(const Subspace& outer, const Subspace& inner) {
  require_same_ambient(outer, inner);
  if (inner.dim() > outer.dim()) return false;
  return matrix_rank(stack(outer, inner)) == outer.dim();
}

}  // namespace qkneser
