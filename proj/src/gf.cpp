#include "qkneser/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "qkneser/errors.hpp"

namespace qkneser {
namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Checked p^e against the table limit.
std::uint32_t checked_pow(std::uint32_t p, std::uint32_t e, std::uint32_t limit) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > limit)
      throw ResourceLimitError("field order " + std::to_string(p) + "^" + std::to_string(e) +
                               " exceeds table limit " + std::to_string(limit));
  }
  return static_cast<std::uint32_t>(q);
}

// Fixed irreducible polynomials for the common extensions (constant term
// first, monic).  Everything else falls back to a deterministic search.
const std::vector<std::uint32_t>* builtin_irreducible(std::uint32_t p, std::uint32_t e) {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
      {{2, 2}, {1, 1, 1}},              // x^2+x+1
      {{2, 3}, {1, 1, 0, 1}},           // x^3+x+1
      {{2, 4}, {1, 1, 0, 0, 1}},        // x^4+x+1
      {{2, 5}, {1, 0, 1, 0, 0, 1}},     // x^5+x^2+1
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},  // x^6+x+1
      {{2, 8}, {1, 1, 0, 1, 1, 0, 0, 0, 1}},  // x^8+x^4+x^3+x+1
      {{3, 2}, {1, 0, 1}},              // x^2+1
      {{3, 3}, {1, 2, 0, 1}},           // x^3+2x+1
      {{5, 2}, {2, 0, 1}},              // x^2+2
      {{7, 2}, {1, 0, 1}},              // x^2+1
  };
  auto it = table.find({p, e});
  return it == table.end() ? nullptr : &it->second;
}

// Plain polynomial arithmetic over GF(p), coefficients constant-first.
using Poly = std::vector<std::uint32_t>;

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  while (a.size() >= m.size()) {
    std::uint32_t lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint32_t t = (lead * m[i]) % p;
        a[shift + i] = (a[shift + i] + p - t) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), m, p);
}

bool poly_divides(const Poly& d, const Poly& f, std::uint32_t p) {
  Poly r = poly_mod(f, d, p);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; });
}

bool poly_irreducible(const Poly& f, std::uint32_t p) {
  std::uint32_t deg = static_cast<std::uint32_t>(f.size()) - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1 .. deg/2.
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly cand(d + 1, 0);
      std::uint64_t t = c;
      for (std::uint32_t i = 0; i < d; ++i) {
        cand[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      cand[d] = 1;
      if (poly_divides(cand, f, p)) return false;
    }
  }
  return true;
}

Poly find_irreducible(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly cand(e + 1, 0);
    std::uint64_t t = c;
    for (std::uint32_t i = 0; i < e; ++i) {
      cand[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    cand[e] = 1;
    if (poly_irreducible(cand, p)) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

void FieldSpec::check(FieldElement a) const {
  if (a.index() >= q_)
    throw std::invalid_argument("element index " + std::to_string(a.index()) +
                                " invalid for GF(" + std::to_string(q_) + ")");
}

FieldElement FieldSpec::element(std::uint32_t index) const {
  FieldElement a(index);
  check(a);
  return a;
}

FieldElement FieldSpec::from_int(std::uint64_t n) const {
  return FieldElement(static_cast<std::uint32_t>(n % p_));
}

std::vector<std::uint32_t> FieldSpec::digits(FieldElement a) const {
  check(a);
  std::vector<std::uint32_t> d(e_);
  std::uint32_t t = a.index();
  for (std::uint32_t i = 0; i < e_; ++i) {
    d[i] = t % p_;
    t /= p_;
  }
  return d;
}

FieldElement FieldSpec::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() != e_) throw std::invalid_argument("digit vector length mismatch");
  std::uint32_t idx = 0;
  for (std::uint32_t i = e_; i-- > 0;) {
    if (d[i] >= p_) throw std::invalid_argument("digit out of range");
    idx = idx * p_ + d[i];
  }
  return FieldElement(idx);
}

FieldElement FieldSpec::add_slow(FieldElement a, FieldElement b) const {
  std::uint32_t x = a.index(), y = b.index(), result = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    result += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return FieldElement(result);
}

std::uint32_t FieldSpec::polymul_mod(std::uint32_t a, std::uint32_t b) const {
  Poly pa(e_), pb(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    pa[i] = a % p_;
    a /= p_;
    pb[i] = b % p_;
    b /= p_;
  }
  Poly r = poly_mulmod(pa, pb, irreducible_, p_);
  std::uint32_t idx = 0;
  for (std::uint32_t i = static_cast<std::uint32_t>(r.size()); i-- > 0;) idx = idx * p_ + r[i];
  return idx;
}

FieldElement FieldSpec::mul_slow(FieldElement a, FieldElement b) const {
  if (a.index() == 0 || b.index() == 0) return FieldElement(0);
  std::uint64_t s = static_cast<std::uint64_t>(log_[a.index()]) + log_[b.index()];
  return FieldElement(antilog_[s % (q_ - 1)]);
}

FieldElement FieldSpec::inv(FieldElement a) const {
  check(a);
  if (a.index() == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
  return FieldElement(inv_table_[a.index()]);
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t n) const {
  check(a);
  FieldElement result = one(), base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::uint32_t FieldSpec::log(FieldElement a) const {
  check(a);
  if (a.index() == 0) throw std::domain_error("log of zero");
  return log_[a.index()];
}

void FieldSpec::build_tables() {
  // Negation: digit-wise additive inverse.
  neg_table_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t x = a, result = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      result += ((p_ - x % p_) % p_) * scale;
      x /= p_;
      scale *= p_;
    }
    neg_table_[a] = result;
  }

  // Find the smallest multiplicative generator and fill log/antilog.
  antilog_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    generator_ = 1;
    antilog_[0] = 1;
    log_[1] = 0;
  } else {
    bool found = false;
    for (std::uint32_t g = 2; g < q_ && !found; ++g) {
      std::vector<bool> seen(q_, false);
      std::uint32_t x = 1;
      std::uint32_t i = 0;
      for (; i < q_ - 1; ++i) {
        if (seen[x]) break;
        seen[x] = true;
        antilog_[i] = x;
        x = polymul_mod(x, g);
      }
      if (i == q_ - 1 && x == 1) {
        generator_ = g;
        found = true;
      }
    }
    if (!found)
      throw std::logic_error("multiplicative group not cyclic; modulus not irreducible?");
    for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[antilog_[i]] = i;
  }

  inv_table_.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a)
    inv_table_[a] = antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];

  // Dense operation tables pay off only for small fields.
  if (q_ <= 1024) {
    add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_slow(FieldElement(a), FieldElement(b)).index());
        mul_table_[a * q_ + b] = static_cast<std::uint16_t>(
            (a == 0 || b == 0) ? 0 : antilog_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)]);
      }
  }
}

void FieldSpec::verify_axioms() const {
  auto fail = [this](const char* what) {
    throw std::logic_error(std::string("field axiom violated in GF(") + std::to_string(q_) + "): " + what);
  };

  // a^q == a for every element.
  for (std::uint32_t a = 0; a < q_; ++a)
    if (pow(FieldElement(a), q_) != FieldElement(a)) fail("Frobenius a^q = a");

  // Every nonzero element has a working inverse.
  for (std::uint32_t a = 1; a < q_; ++a)
    if (mul(FieldElement(a), inv(FieldElement(a))) != one()) fail("a * inv(a) = 1");

  auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    FieldElement x(a), y(b), z(c);
    if (add(add(x, y), z) != add(x, add(y, z))) fail("additive associativity");
    if (mul(mul(x, y), z) != mul(x, mul(y, z))) fail("multiplicative associativity");
    if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) fail("distributivity");
  };
  auto check_pair = [&](std::uint32_t a, std::uint32_t b) {
    FieldElement x(a), y(b);
    if (add(x, y) != add(y, x)) fail("additive commutativity");
    if (mul(x, y) != mul(y, x)) fail("multiplicative commutativity");
  };

  if (q_ <= 64) {
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        check_pair(a, b);
        for (std::uint32_t c = 0; c < q_; ++c) check_triple(a, b, c);
      }
  } else {
    // Deterministic LCG sample.
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&state, this]() {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return static_cast<std::uint32_t>((state >> 33) % q_);
    };
    for (int i = 0; i < 4096; ++i) {
      std::uint32_t a = next(), b = next(), c = next();
      check_pair(a, b);
      check_triple(a, b, c);
    }
  }
}

FieldPtr FieldSpec::make(std::uint32_t p, std::uint32_t e, std::uint32_t table_limit) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (e == 0) throw std::invalid_argument("extension degree must be >= 1");
  std::uint32_t q = checked_pow(p, e, table_limit);

  // Cache by (p, e); FieldSpec is immutable so sharing is safe.
  static std::mutex cache_mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({p, e});
    if (it != cache.end()) return it->second;
  }

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->e_ = e;
  spec->q_ = q;
  if (e == 1) {
    spec->irreducible_ = {0, 1};  // x; arithmetic is plain mod p
  } else if (const auto* poly = builtin_irreducible(p, e)) {
    spec->irreducible_ = *poly;
  } else {
    spec->irreducible_ = find_irreducible(p, e);
  }
  if (e >= 2 && !poly_irreducible(spec->irreducible_, p))
    throw std::logic_error("modulus polynomial is reducible");
  spec->build_tables();
  spec->verify_axioms();

  FieldPtr result = spec;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(p, e), result);
  }
  return result;
}

FieldEmbedding::FieldEmbedding(FieldPtr from, FieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->p() != to_->p())
    throw std::invalid_argument("incompatible field tower: different characteristic");
  if (to_->e() % from_->e() != 0)
    throw std::invalid_argument("incompatible field tower: " + std::to_string(from_->q()) +
                                " does not embed in " + std::to_string(to_->q()));

  image_.assign(from_->q(), 0);
  if (from_->e() == 1) {
    // Prime subfield: n maps to n copies of 1, which is index n.
    for (std::uint32_t a = 0; a < from_->q(); ++a) image_[a] = a;
  } else {
    // Send the class of x to the smallest root of the source modulus in the
    // target field, then extend to polynomial expressions in x.
    const auto& f = from_->irreducible();
    FieldElement root = to_->zero();
    bool found = false;
    for (std::uint32_t z = 0; z < to_->q() && !found; ++z) {
      FieldElement zz(z);
      FieldElement acc = to_->zero();
      for (std::uint32_t i = static_cast<std::uint32_t>(f.size()); i-- > 0;)
        acc = to_->add(to_->mul(acc, zz), to_->from_int(f[i]));
      if (acc == to_->zero()) {
        root = zz;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("incompatible field tower: modulus has no root in target");
    for (std::uint32_t a = 0; a < from_->q(); ++a) {
      auto d = from_->digits(FieldElement(a));
      FieldElement acc = to_->zero();
      for (std::uint32_t i = static_cast<std::uint32_t>(d.size()); i-- > 0;)
        acc = to_->add(to_->mul(acc, root), to_->from_int(d[i]));
      image_[a] = acc.index();
    }
  }

  // The map must be a field homomorphism; verify exhaustively (source
  // fields here are small).
  for (std::uint32_t a = 0; a < from_->q(); ++a)
    for (std::uint32_t b = 0; b < from_->q(); ++b) {
      FieldElement fa(image_[a]), fb(image_[b]);
      if (image_[from_->add(FieldElement(a), FieldElement(b)).index()] != to_->add(fa, fb).index() ||
          image_[from_->mul(FieldElement(a), FieldElement(b)).index()] != to_->mul(fa, fb).index())
        throw std::logic_error("field embedding is not a homomorphism");
    }
}

FieldElement FieldEmbedding::operator()(FieldElement a) const {
  if (a.index() >= image_.size()) throw std::invalid_argument("element not in source field");
  return FieldElement(image_[a.index()]);
}

}  // namespace qkneser
