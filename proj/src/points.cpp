#include "qkneser/points.hpp"

#include <bit>
#include <stdexcept>

#include "qkneser/errors.hpp"

namespace qkneser {

namespace bits {

bool intersects(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool is_subset(const std::vector<std::uint64_t>& sub, const std::vector<std::uint64_t>& super) {
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (sub[i] & ~super[i]) return false;
  return true;
}

std::size_t count(const std::vector<std::uint64_t>& w) {
  std::size_t n = 0;
  for (auto word : w) n += static_cast<std::size_t>(std::popcount(word));
  return n;
}

std::uint64_t first(const std::vector<std::uint64_t>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) return (i << 6) + static_cast<std::uint64_t>(std::countr_zero(w[i]));
  return UINT64_MAX;
}

}  // namespace bits

namespace {

std::uint64_t encode(const std::vector<FieldElement>& vec, std::uint32_t q) {
  std::uint64_t code = 0;
  for (std::size_t i = vec.size(); i-- > 0;) code = code * q + vec[i].index();
  return code;
}

}  // namespace

PointSpace::PointSpace(std::uint32_t v, std::uint32_t q) : v_(v), q_(q) {
  points_ = enumerate_subspaces(v, 1, q);
  field_ = points_.empty() ? nullptr : points_[0].field();
  if (!field_) throw std::invalid_argument("ambient dimension must be positive");
  words_ = (points_.size() + 63) / 64;

  std::uint64_t codes = 1;
  for (std::uint32_t i = 0; i < v; ++i) {
    codes *= q;
    if (codes > (1ull << 26))
      throw ResourceLimitError("point lookup table too large for v=" + std::to_string(v) +
                               ", q=" + std::to_string(q));
  }
  rank_by_code_.assign(codes, UINT64_MAX);
  for (std::uint64_t r = 0; r < points_.size(); ++r) {
    std::vector<FieldElement> vec(v);
    for (std::uint32_t c = 0; c < v; ++c) vec[c] = points_[r].basis().at(0, c);
    rank_by_code_[encode(vec, q)] = r;
  }
}

std::uint64_t PointSpace::point_rank(const std::vector<FieldElement>& vec) const {
  if (vec.size() != v_) throw std::invalid_argument("vector length mismatch");
  // Normalise so the leading nonzero coordinate is 1.
  std::size_t lead = 0;
  while (lead < vec.size() && vec[lead] == field_->zero()) ++lead;
  if (lead == vec.size()) throw std::invalid_argument("zero vector spans no point");
  std::vector<FieldElement> canon(vec);
  if (!(vec[lead] == field_->one())) {
    FieldElement scale = field_->inv(vec[lead]);
    for (auto& x : canon) x = field_->mul(scale, x);
  }
  std::uint64_t r = rank_by_code_[encode(canon, q_)];
  if (r == UINT64_MAX) throw std::logic_error("canonical point missing from table");
  return r;
}

std::vector<std::uint64_t> PointSpace::point_bits(const Subspace& s) const {
  if (s.ambient_dim() != v_ || s.q() != q_)
    throw std::invalid_argument("subspace ambient mismatch");
  std::vector<std::uint64_t> out(words_, 0);
  std::uint32_t k = s.dim();
  if (k == 0) return out;

  // Walk all nonzero coefficient combinations of the basis rows.
  std::uint64_t combos = 1;
  for (std::uint32_t i = 0; i < k; ++i) combos *= q_;
  std::vector<FieldElement> vec(v_);
  for (std::uint64_t c = 1; c < combos; ++c) {
    std::uint64_t t = c;
    for (auto& x : vec) x = field_->zero();
    for (std::uint32_t r = 0; r < k; ++r) {
      FieldElement coeff(static_cast<std::uint32_t>(t % q_));
      t /= q_;
      if (coeff == field_->zero()) continue;
      for (std::uint32_t col = 0; col < v_; ++col)
        vec[col] = field_->add(vec[col], field_->mul(coeff, s.basis().at(r, col)));
    }
    bits::set(out, point_rank(vec));
  }
  return out;
}

std::vector<std::uint64_t> PointSpace::point_ranks(const Subspace& s) const {
  auto bitset = point_bits(s);
  std::vector<std::uint64_t> ranks;
  for (std::uint64_t r = 0; r < points_.size(); ++r)
    if (bits::test(bitset, r)) ranks.push_back(r);
  return ranks;
}

}  // namespace qkneser
