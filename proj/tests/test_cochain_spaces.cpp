#include <gtest/gtest.h>

#include "homnr/cochain_spaces.hpp"
#include "support/builders.hpp"
#include "support/random.hpp"

using namespace homnr;
using homnr::gen::diag;
using homnr::gen::product;

namespace {

Cochain lz2() { return product(2, {{2, 2, 1, 1}}); }
Cochain heis() { return product(3, {{1, 2, 3, 1}, {2, 1, 3, -1}}); }

// Independent count for diagonal twists: free (tuple, output) coordinates are
// those whose output eigenvalue equals the product of the tuple's eigenvalues.
std::size_t diagonal_count(const Vector& b, std::size_t k) {
    std::size_t count = 0;
    for_each_tuple(b.size(), k, [&](const Index& t) {
        Rational p(1);
        for (std::size_t x : t) p *= b[x];
        for (const auto& bo : b)
            if (bo == p) ++count;
    });
    return count;
}

}  // namespace

TEST(BetaCochainBasis, IdentityTwistIsFullSpace) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t k = 1; k <= 3; ++k)
            EXPECT_EQ(beta_cochain_basis(BasedSpace::standard(n), TwistMap::identity(n), k).dim(), ipow(n, k + 1));
}

TEST(BetaCochainBasis, DiagonalTwistExamples) {
    BasedSpace s = BasedSpace::standard(2);
    EXPECT_EQ(beta_cochain_basis(s, diag({1, 2}), 1).dim(), 2u);
    EXPECT_EQ(beta_cochain_basis(s, diag({1, 2}), 2).dim(), 3u);
    for (std::size_t k = 1; k <= 4; ++k)
        EXPECT_EQ(beta_cochain_basis(s, diag({1, 2}), k).dim(), diagonal_count({1, 2}, k));
    BasedSpace s3 = BasedSpace::standard(3);
    for (std::size_t k = 1; k <= 3; ++k)
        EXPECT_EQ(beta_cochain_basis(s3, diag({2, 3, 6}), k).dim(), diagonal_count({2, 3, 6}, k));
}

TEST(BetaCochainBasis, MembershipMatchesPredicate) {
    gen::Rng rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 3, k = 1 + rng() % 2;
        TwistMap beta(gen::random_matrix(rng, n, n, 0.4));
        CochainBasis basis = beta_cochain_basis(BasedSpace::standard(n), beta, k);
        for (const auto& m : basis.members) EXPECT_TRUE(is_beta_cochain(m, beta));
        Cochain f = gen::random_cochain(rng, n, n, k);
        EXPECT_EQ(is_beta_cochain(f, beta), basis.contains(f));
        // a random combination of members is always inside
        Cochain g(n, n, k);
        for (const auto& m : basis.members) g += gen::random_rational(rng) * m;
        EXPECT_TRUE(is_beta_cochain(g, beta));
    }
}

TEST(AlternatingBasis, Examples) {
    EXPECT_EQ(alternating_basis(BasedSpace::standard(2), TwistMap::identity(2), 2).dim(), 2u);
    EXPECT_EQ(alternating_basis(BasedSpace::standard(2), TwistMap::identity(2), 3).dim(), 0u);
    EXPECT_EQ(alternating_basis(BasedSpace::standard(3), TwistMap::identity(3), 2).dim(), 9u);
    EXPECT_EQ(alternating_basis(BasedSpace::standard(3), TwistMap::identity(3), 3).dim(), 3u);
    CochainBasis heis_beta = alternating_basis(BasedSpace::standard(3), diag({2, 3, 6}), 2);
    EXPECT_TRUE(heis_beta.contains(heis()));
}

TEST(AlternatingBasis, ContainedInBetaCochains) {
    gen::Rng rng(52);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng() % 3, k = 1 + rng() % 3;
        TwistMap beta(gen::random_matrix(rng, n, n, 0.4));
        CochainBasis alt = alternating_basis(BasedSpace::standard(n), beta, k);
        CochainBasis full = beta_cochain_basis(BasedSpace::standard(n), beta, k);
        for (const auto& m : alt.members) {
            EXPECT_TRUE(full.contains(m));
            EXPECT_TRUE(is_alternating(m));
        }
    }
}

TEST(PairCochain, Examples) {
    gen::Rng rng(53);
    TwistMap id2 = TwistMap::identity(2);
    Cochain alt = alternating_basis(BasedSpace::standard(2), id2, 2).members.at(0);
    EXPECT_TRUE(is_pair_cochain(alt, gen::random_cochain(rng, 2, 2, 2), id2));
    EXPECT_TRUE(is_pair_cochain(lz2(), lz2(), id2));
    Cochain one = product(1, {{1, 1, 1, 1}});
    EXPECT_FALSE(is_pair_cochain(one, one, TwistMap::identity(1)));
}

TEST(SymmetricLeibnizBasis, Examples) {
    BasedSpace s = BasedSpace::standard(2);
    TwistMap id2 = TwistMap::identity(2);
    for (std::size_t k = 1; k <= 3; ++k)
        EXPECT_EQ(symmetric_leibniz_basis(s, id2, k, Cochain(2, 2, 2)).dim(), ipow(2, k + 1));
    EXPECT_EQ(symmetric_leibniz_basis(s, id2, 1, lz2()).dim(), 4u);

    // k = 2 by hand: the conditions are f(e1, x) = -f(x, e1) for x = e1, e2,
    // i.e. f(e1,e1) = 0 and f(e1,e2) = -f(e2,e1); f(e2,e2) is free.
    CochainBasis b2 = symmetric_leibniz_basis(s, id2, 2, lz2());
    EXPECT_EQ(b2.dim(), 4u);
    EXPECT_TRUE(b2.contains(lz2()));
    for (const auto& m : b2.members) EXPECT_TRUE(is_pair_cochain(m, lz2(), id2));
}

TEST(SymmetricLeibnizBasis, MembershipMatchesPredicateRandom) {
    gen::Rng rng(54);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng() % 2, k = 2 + rng() % 2;
        Cochain d = gen::random_cochain(rng, n, n, 2, 0.3);
        TwistMap id = TwistMap::identity(n);
        CochainBasis b = symmetric_leibniz_basis(BasedSpace::standard(n), id, k, d);
        for (const auto& m : b.members) EXPECT_TRUE(is_pair_cochain(m, d, id));
        Cochain f = gen::random_cochain(rng, n, n, k, 0.3);
        EXPECT_EQ(b.contains(f), is_pair_cochain(f, d, id));
    }
}
