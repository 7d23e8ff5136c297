#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace qkneser {

/// Element of GF(p^e), encoded as an index in [0, q).  The base-p digits of
/// the index are the coefficients of the representative polynomial, constant
/// term first.  Index 0 is the additive identity, index 1 the multiplicative
/// identity.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t index) : index_(index) {}
  [[nodiscard]] constexpr std::uint32_t index() const { return index_; }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;

 private:
  std::uint32_t index_ = 0;
};

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Arithmetic in GF(p^e) behind lookup tables.  Immutable after
/// construction; all operations are pure, so a FieldSpec can be shared
/// freely across threads.
///
/// The extension is defined by a fixed monic irreducible polynomial per
/// (p, e), so element indices are stable across runs and platforms.
class FieldSpec {
 public:
  static constexpr std::uint32_t kDefaultTableLimit = 1u << 16;

  /// Builds GF(p^e).  The field axioms are checked on construction:
  /// exhaustively for q <= 64, on a deterministic sample above that.
  /// Throws std::invalid_argument for non-prime p or e == 0 and
  /// ResourceLimitError when p^e exceeds the table limit.
  static FieldPtr make(std::uint32_t p, std::uint32_t e,
                       std::uint32_t table_limit = kDefaultTableLimit);

  [[nodiscard]] std::uint32_t p() const { return p_; }
  [[nodiscard]] std::uint32_t e() const { return e_; }
  [[nodiscard]] std::uint32_t q() const { return q_; }

  /// Coefficients of the defining irreducible polynomial, constant term
  /// first; monic of degree e.  For e == 1 this is the polynomial x.
  [[nodiscard]] const std::vector<std::uint32_t>& irreducible() const { return irreducible_; }

  [[nodiscard]] FieldElement zero() const { return FieldElement(0); }
  [[nodiscard]] FieldElement one() const { return FieldElement(1); }
  [[nodiscard]] bool valid(FieldElement a) const { return a.index() < q_; }

  /// Validated element construction; throws std::invalid_argument if the
  /// index is out of range.
  [[nodiscard]] FieldElement element(std::uint32_t index) const;

  /// The canonical image of an ordinary integer (n mod p copies of 1).
  [[nodiscard]] FieldElement from_int(std::uint64_t n) const;

  [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const {
    check(a); check(b);
    if (p_ == 2) return FieldElement(a.index() ^ b.index());
    if (!add_table_.empty()) return FieldElement(add_table_[a.index() * q_ + b.index()]);
    return add_slow(a, b);
  }

  [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const {
    check(a); check(b);
    if (q_ == 2) return FieldElement(a.index() & b.index());
    if (!mul_table_.empty()) return FieldElement(mul_table_[a.index() * q_ + b.index()]);
    return mul_slow(a, b);
  }

  [[nodiscard]] FieldElement neg(FieldElement a) const {
    check(a);
    return FieldElement(neg_table_[a.index()]);
  }

  [[nodiscard]] FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  /// Multiplicative inverse; throws std::domain_error on the zero element
  /// (distinct from the std::invalid_argument raised for bad indices).
  [[nodiscard]] FieldElement inv(FieldElement a) const;

  /// Square-and-multiply power; pow(a, 0) == 1 for every a.
  [[nodiscard]] FieldElement pow(FieldElement a, std::uint64_t n) const;

  /// Base-p digits of an element, constant term first, length e.
  [[nodiscard]] std::vector<std::uint32_t> digits(FieldElement a) const;
  [[nodiscard]] FieldElement from_digits(const std::vector<std::uint32_t>& d) const;

  /// Smallest-index generator of the cyclic group of nonzero elements.
  [[nodiscard]] FieldElement generator() const { return FieldElement(generator_); }

  /// Discrete log base generator(); defined for nonzero elements only.
  [[nodiscard]] std::uint32_t log(FieldElement a) const;

 private:
  FieldSpec() = default;
  void check(FieldElement a) const;
  FieldElement add_slow(FieldElement a, FieldElement b) const;
  FieldElement mul_slow(FieldElement a, FieldElement b) const;
  std::uint32_t polymul_mod(std::uint32_t a, std::uint32_t b) const;
  void build_tables();
  void verify_axioms() const;

  std::uint32_t p_ = 0, e_ = 0, q_ = 0;
  std::vector<std::uint32_t> irreducible_;
  std::uint32_t generator_ = 1;
  std::vector<std::uint32_t> antilog_;  // antilog_[i] = generator^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;      // log_[a] for a != 0
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> inv_table_;
  // Full add/mul tables kept only for small q; larger fields fall back to
  // digit arithmetic and log/antilog.
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
};

/// Ring homomorphism GF(q) -> GF(q^r) along the fixed tower: the source
/// generator polynomial's smallest-index root in the target is used, making
/// the embedding deterministic.
class FieldEmbedding {
 public:
  /// Throws std::invalid_argument if no embedding exists (different
  /// characteristic, or source degree does not divide target degree).
  FieldEmbedding(FieldPtr from, FieldPtr to);

  [[nodiscard]] FieldElement operator()(FieldElement a) const;
  [[nodiscard]] const FieldPtr& from() const { return from_; }
  [[nodiscard]] const FieldPtr& to() const { return to_; }

 private:
  FieldPtr from_, to_;
  std::vector<std::uint32_t> image_;  // image_[a] in the target field
};

}  // namespace qkneser
