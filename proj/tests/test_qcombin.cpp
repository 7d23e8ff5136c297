#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qkneser/qcombin.hpp"
#include "qkneser/subspaces.hpp"

using namespace qkneser;

TEST_CASE("bracket values") {
  CHECK(bracket(4, 2) == 15);
  CHECK(bracket(0, 2) == 0);
  CHECK(bracket(0, 7) == 0);
  // Geometric series oracle: 1 + 3 + 9 + 27 + 81.
  ExactInt series = 0, term = 1;
  for (int i = 0; i < 5; ++i) {
    series += term;
    term *= 3;
  }
  CHECK(series == 121);
  CHECK(bracket(5, 3) == series);
  CHECK(bracket(3, 1) == 3);  // q = 1 convention
}

TEST_CASE("gauss_binomial values and conventions") {
  CHECK(gauss_binomial(4, 2, 2) == 35);
  CHECK(gauss_binomial(5, 2, 2) == 155);
  CHECK(gauss_binomial(5, 2, 1) == 10);
  CHECK(gauss_binomial(2, 5, 3) == 0);  // k > v convention, not an error
}

TEST_CASE("gauss_binomial cross-checked against subspace enumeration") {
  CHECK(ExactInt(enumerate_subspaces(4, 2, 2).size()) == gauss_binomial(4, 2, 2));
  CHECK(ExactInt(enumerate_subspaces(5, 2, 2).size()) == gauss_binomial(5, 2, 2));
}

TEST_CASE("gauss_binomial symmetry") {
  for (std::uint32_t q : {1u, 2u, 3u, 4u})
    for (std::uint32_t v = 0; v <= 8; ++v)
      for (std::uint32_t k = 0; k <= v; ++k)
        CHECK(gauss_binomial(v, k, q) == gauss_binomial(v, v - k, q));
}

TEST_CASE("q = 1 reduces to ordinary binomials") {
  for (std::uint32_t v = 0; v <= 10; ++v) {
    ExactInt row = 1;  // C(v, 0)
    for (std::uint32_t k = 0; k <= v; ++k) {
      CHECK(gauss_binomial(v, k, 1) == row);
      row = row * (v - k) / (k + 1);
    }
  }
}

TEST_CASE("count_meeting values") {
  CHECK(count_meeting(4, 2, 2, 0, 2) == 16);  // valency of qK_{4:2}, q=2
  CHECK(count_meeting(5, 2, 2, 2, 2) == 1);   // only the subspace itself
  CHECK(count_meeting(6, 3, 3, 3, 3) == 1);
  CHECK(count_meeting(5, 2, 2, 1, 2) == 14);
  CHECK_THROWS_AS((void)count_meeting(4, 2, 2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)count_meeting(4, 3, 3, 1, 2), std::invalid_argument);  // l-j > v-k
}

TEST_CASE("count_meeting(5,2,2,1,2) verified by exhaustive enumeration") {
  auto subs = enumerate_subspaces(5, 2, 2);
  auto F = subs[0].field();
  Subspace K = canonicalize(F, 5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}});
  Subspace J = canonicalize(F, 5, {{1, 0, 0, 0, 0}});
  int exact = 0;
  for (const auto& s : subs)
    if (meet(s, K) == J) ++exact;
  CHECK(ExactInt(exact) == count_meeting(5, 2, 2, 1, 2));
}

TEST_CASE("aggregate intersection identity, validated by enumeration first") {
  // For a fixed k-space K, summing over all j-subspaces J of K the number
  // of l-spaces meeting K exactly in J partitions all l-spaces.  Validate
  // the aggregate form by enumeration before trusting the formula.
  struct Params {
    std::uint32_t v, k, l, q;
  };
  for (auto [v, k, l, q] : std::vector<Params>{{4, 2, 2, 2}, {5, 2, 2, 2}, {4, 2, 1, 3}}) {
    CAPTURE(v);
    CAPTURE(k);
    CAPTURE(l);
    CAPTURE(q);
    auto all_l = enumerate_subspaces(v, l, q);
    auto K = unrank(v, k, q, 0);

    // Enumeration route: classify every l-space by dim of its meet with K.
    std::vector<std::uint64_t> by_dim(std::min(k, l) + 1, 0);
    for (const auto& s : all_l) ++by_dim[meet(s, K).dim()];

    ExactInt formula_total = 0;
    for (std::uint32_t j = 0; j <= std::min(k, l); ++j) {
      if (l - j > v - k) {
        CHECK(by_dim[j] == 0);
        continue;
      }
      ExactInt per_dim = gauss_binomial(k, j, q) * count_meeting(v, k, l, j, q);
      CHECK(ExactInt(by_dim[j]) == per_dim);
      formula_total += per_dim;
    }
    CHECK(formula_total == gauss_binomial(v, l, q));
    CHECK(ExactInt(all_l.size()) == gauss_binomial(v, l, q));
  }
}

TEST_CASE("independence, EKR and Frankl-Wilson bounds") {
  CHECK(independence_bound(4, 2, 2) == 7);
  CHECK(independence_bound(5, 2, 2) == 15);
  CHECK(independence_bound(4, 2, 3) == 13);

  CHECK(ekr_bound(5, 2, 1) == 4);  // C(4,1)
  CHECK_THROWS_AS((void)ekr_bound(3, 2, 1), std::invalid_argument);  // v < (k-t+1)(t+1)

  CHECK(frankl_wilson_bound(5, 2, 1, 2) == 15);  // max{gbin(4,1), gbin(3,2)} = max{15, 7}
  CHECK(gauss_binomial(4, 1, 2) == 15);
  CHECK(gauss_binomial(3, 2, 2) == 7);
}

TEST_CASE("fractional chromatic number [v]/[k]") {
  ExactRational f522 = fractional_chromatic(5, 2, 2);
  CHECK(boost::multiprecision::numerator(f522) == 31);
  CHECK(boost::multiprecision::denominator(f522) == 3);

  ExactRational ordinary = fractional_chromatic(5, 2, 1);
  CHECK(ordinary == ExactRational(5, 2));

  ExactRational f422 = fractional_chromatic(4, 2, 2);
  CHECK(boost::multiprecision::numerator(f422) == 5);
  CHECK(boost::multiprecision::denominator(f422) == 1);
}
