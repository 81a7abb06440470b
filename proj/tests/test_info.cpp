#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "orcd/errors.hpp"
#include "orcd/info.hpp"
#include "orcd/pmf.hpp"

using namespace orcd;

namespace {

JointPmf random_joint(std::mt19937_64& rng, std::vector<std::size_t> dims) {
  const std::size_t n = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  return JointPmf(std::move(dims), oracle::random_simplex(rng, n));
}

// Joint table over (X, Y) for a BSC with uniform input.
JointPmf bsc_joint(double delta) {
  return JointPmf({2, 2}, {0.5 * (1 - delta), 0.5 * delta, 0.5 * delta, 0.5 * (1 - delta)}, {"X", "Y"});
}

}  // namespace

TEST(BinaryEntropy, Examples) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.11), static_cast<double>(oracle::h2(0.11L)), 1e-14);
  EXPECT_NEAR(binary_entropy(0.11), 0.49992, 1e-5);
}

TEST(BinaryEntropy, RejectsOutOfRange) {
  EXPECT_THROW(binary_entropy(-0.01), DomainError);
  EXPECT_THROW(binary_entropy(1.01), DomainError);
  EXPECT_THROW(binary_entropy(std::nan("")), DomainError);
}

TEST(InverseBinaryEntropy, Examples) {
  EXPECT_NEAR(inv_binary_entropy(1.0), 0.5, 1e-12);
  EXPECT_EQ(inv_binary_entropy(-0.3), 0.0);
  EXPECT_EQ(inv_binary_entropy(0.0), 0.0);
  EXPECT_NEAR(inv_binary_entropy(0.8), static_cast<double>(oracle::h2_inv(0.8L)), 1e-11);
  EXPECT_NEAR(inv_binary_entropy(0.8), 0.2430, 5e-5);
  EXPECT_THROW(inv_binary_entropy(1.0 + 1e-9), DomainError);
}

TEST(InverseBinaryEntropy, RoundTripOnGrid) {
  for (int i = 0; i < 100; ++i) {
    const double p = 0.5 * i / 99.0;
    EXPECT_NEAR(inv_binary_entropy(binary_entropy(p)), p, 1e-10) << "p=" << p;
  }
}

TEST(Star, Examples) {
  EXPECT_DOUBLE_EQ(star(0.3, 0.0), 0.3);
  EXPECT_DOUBLE_EQ(star(0.5, 0.37), 0.5);
  EXPECT_NEAR(star(0.1, 0.2), 0.26, 1e-15);
  EXPECT_THROW(star(-0.1, 0.2), DomainError);
  EXPECT_THROW(star(0.1, 1.2), DomainError);
}

TEST(Star, CommutativeAndAssociative) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    EXPECT_NEAR(star(a, b), star(b, a), 1e-15);
    EXPECT_NEAR(star(star(a, b), c), star(a, star(b, c)), 1e-15);
  }
}

TEST(Entropy, Examples) {
  EXPECT_EQ(entropy(Pmf({1.0, 0.0})), 0.0);
  EXPECT_NEAR(entropy(Pmf::uniform(4)), 2.0, 1e-15);
  EXPECT_NEAR(entropy(Pmf({0.11, 0.89})), binary_entropy(0.11), 1e-15);
}

TEST(Pmf, Validation) {
  EXPECT_THROW(Pmf({0.5, 0.6}), ValidationError);
  EXPECT_THROW(Pmf({-0.1, 1.1}), ValidationError);
  EXPECT_THROW(Pmf(std::vector<double>{}), ValidationError);
  EXPECT_NO_THROW(Pmf({0.5, 0.5 + 5e-10}));
  const Pmf p({0.25, 0.75 + 1e-12});
  EXPECT_NEAR(p[0] + p[1], 1.0, 2e-16);
}

TEST(JointPmf, MarginalAndAxisLookup) {
  const JointPmf j = bsc_joint(0.2);
  EXPECT_EQ(j.axis("Y"), 1u);
  EXPECT_THROW(j.axis("Q"), UsageError);
  const std::size_t y[] = {1};
  const JointPmf m = j.marginal(y);
  EXPECT_NEAR(m.table()[0], 0.5, 1e-15);
  EXPECT_NEAR(m.table()[1], 0.5, 1e-15);
  EXPECT_THROW(JointPmf({2, 2}, {0.5, 0.5, 0.5}), ValidationError);
}

TEST(MutualInformation, Examples) {
  std::mt19937_64 rng(3);
  const auto pa = oracle::random_simplex(rng, 3), pb = oracle::random_simplex(rng, 2);
  std::vector<double> prod;
  for (double a : pa)
    for (double b : pb) prod.push_back(a * b);
  EXPECT_NEAR(mutual_information(JointPmf({3, 2}, prod), {0}, {1}), 0.0, 1e-15);

  EXPECT_NEAR(mutual_information(bsc_joint(0.0), {0}, {1}), 1.0, 1e-15);
  const double oracle_bsc = static_cast<double>(1 - oracle::h2(0.11L));
  EXPECT_NEAR(mutual_information(bsc_joint(0.11), {0}, {1}), oracle_bsc, 1e-14);
  EXPECT_NEAR(oracle_bsc, 0.50008, 1e-5);
}

TEST(MutualInformation, OverlapIsUsageError) {
  const JointPmf j = bsc_joint(0.1);
  EXPECT_THROW(mutual_information(j, {0}, {0}), UsageError);
  EXPECT_THROW(conditional_mutual_information(j, {0}, {1}, {1}), UsageError);
}

TEST(MutualInformation, NonnegativeAndMatchesConditionalEntropyForm) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const JointPmf j = random_joint(rng, {3, 4});
    const double i = mutual_information(j, {0}, {1});
    const std::size_t a[] = {0}, b[] = {1}, ab[] = {0, 1};
    const double h_a_given_b = j.entropy_of(ab) - j.entropy_of(b);
    EXPECT_GE(i, 0.0);
    EXPECT_NEAR(i, j.entropy_of(a) - h_a_given_b, 1e-12);
  }
}

TEST(ConditionalMutualInformation, Examples) {
  // A = B uniform bit, C independent uniform bit.
  const JointPmf copy({2, 2, 2}, {0.25, 0.25, 0, 0, 0, 0, 0.25, 0.25});
  EXPECT_NEAR(conditional_mutual_information(copy, {0}, {1}, {2}), 1.0, 1e-15);

  // A, B conditionally independent given C.
  std::vector<double> ci;
  const double pc[] = {0.3, 0.7}, pa[] = {0.2, 0.9}, pb[] = {0.6, 0.1};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        ci.push_back(pc[c] * (a ? pa[c] : 1 - pa[c]) * (b ? pb[c] : 1 - pb[c]));
  EXPECT_NEAR(conditional_mutual_information(JointPmf({2, 2, 2}, ci), {0}, {1}, {2}), 0.0, 1e-14);

  // Y = X xor Z, X uniform, Z ~ Ber(0.3): axes X, Z, Y.
  std::vector<double> xor_table(8, 0.0);
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) xor_table[(x * 2 + z) * 2 + (x ^ z)] = 0.5 * (z ? 0.3 : 0.7);
  EXPECT_NEAR(conditional_mutual_information(JointPmf({2, 2, 2}, xor_table), {0}, {2}, {1}), 1.0, 1e-14);
}

TEST(ConditionalMutualInformation, ChainRule) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const JointPmf j = random_joint(rng, {2, 3, 2, 3});
    const double lhs = conditional_mutual_information(j, {0, 1}, {2}, {3});
    const double rhs =
        conditional_mutual_information(j, {0}, {2}, {3}) + conditional_mutual_information(j, {1}, {2}, {0, 3});
    EXPECT_NEAR(lhs, rhs, 1e-10);
  }
}

TEST(FBound, Examples) {
  EXPECT_NEAR(f_bound_bsc(0.1, 0.0), binary_entropy(0.1), 1e-15);
  for (double s : {0.0, 0.3, 0.75, 1.0}) EXPECT_NEAR(f_bound_bsc(0.0, s), s, 1e-11);
  const double want = static_cast<double>(oracle::h2(oracle::conv(0.1L, oracle::h2_inv(0.75L))));
  EXPECT_NEAR(f_bound_bsc(0.1, 0.75), want, 1e-11);
  EXPECT_NEAR(f_bound_bsc(0.1, 0.75), 0.84375, 1e-5);
  EXPECT_THROW(f_bound_bsc(0.6, 0.5), DomainError);
  EXPECT_THROW(f_bound_bsc(0.1, 1.5), DomainError);
}

TEST(FBound, ConvexInS) {
  for (double delta : {0.05, 0.1, 0.25, 0.4}) {
    const int n = 200;
    std::vector<double> f(n);
    for (int i = 0; i < n; ++i) f[i] = f_bound_bsc(delta, i / double(n - 1));
    for (int i = 1; i + 1 < n; ++i) EXPECT_GE(f[i - 1] - 2 * f[i] + f[i + 1], -1e-8) << "delta=" << delta;
  }
}

TEST(FBound, NondecreasingInS) {
  for (double delta : {0.0, 0.05, 0.2, 0.5}) {
    double prev = f_bound_bsc(delta, 0.0);
    for (int i = 1; i <= 200; ++i) {
      const double v = f_bound_bsc(delta, i / 200.0);
      EXPECT_GE(v, prev - 1e-10);
      prev = v;
    }
  }
}

TEST(StochasticMatrix, BscApply) {
  const StochasticMatrix w = StochasticMatrix::bsc(0.2);
  const Pmf out = w.apply(Pmf::bernoulli(0.1));
  EXPECT_NEAR(out[1], star(0.1, 0.2), 1e-15);
  EXPECT_THROW(StochasticMatrix(2, 2, {0.5, 0.5, 0.6, 0.5}), ValidationError);
}
