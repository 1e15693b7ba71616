#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gfc/decompose.hpp"
#include "gfc/mobius.hpp"

using namespace gfc;

TEST(Mobius, IdentityFromStandardTriple) {
    const std::vector<Scalar> s = {Scalar::infinity(), Scalar(0), Scalar(1)};
    EXPECT_TRUE(mobius_from_triple(s, s).is_identity());
    EXPECT_THROW(Mobius(Scalar(1), Scalar(2), Scalar(2), Scalar(4)), DomainError);
    EXPECT_THROW(mobius_from_triple({Scalar(1), Scalar(1), Scalar(2)}, s), InputError);
}

TEST(Mobius, SplitNormalizingMap) {
    const Scalar mu1(3);
    const Mobius t = mobius_from_triple({Scalar(1), Scalar(-1), mu1}, {Scalar(1), Scalar(0), Scalar::infinity()});
    const Scalar half = (Scalar(1) - mu1) / Scalar(2);
    EXPECT_EQ(t, Mobius(half, half, Scalar(1), -mu1));
    EXPECT_EQ(t(-mu1), Scalar::rational(-1, 3));
    EXPECT_EQ(t(-mu1), -((Scalar(1) - mu1).pow(2)) / (Scalar(4) * mu1));
}

TEST(Mobius, TripleReproducesTargetsForRandomExactTriples) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> v(-20, 20);
    for (int t = 0; t < 40; ++t) {
        std::vector<Scalar> src, dst;
        while (src.size() < 3) {
            const Scalar x = Scalar::rational(v(rng), 1 + (v(rng) & 7));
            if (std::find(src.begin(), src.end(), x) == src.end()) src.push_back(x);
        }
        while (dst.size() < 3) {
            const Scalar x = Scalar::quadratic(v(rng), v(rng) | 1, 5);
            if (std::find(dst.begin(), dst.end(), x) == dst.end()) dst.push_back(x);
        }
        if (t % 4 == 0) dst[t % 3] = Scalar::infinity();
        const Mobius m = mobius_from_triple(src, dst);
        for (int i = 0; i < 3; ++i) EXPECT_EQ(m(src[i]), dst[i]);
        EXPECT_TRUE((m * m.inverse()).is_identity());
    }
}

TEST(Mobius, InfinityHandledProjectively) {
    const Mobius inv(Scalar(0), Scalar(1), Scalar(1), Scalar(0));
    EXPECT_TRUE(inv(Scalar(0)).is_infinity());
    EXPECT_EQ(inv(Scalar::infinity()), Scalar(0));
    EXPECT_EQ(inv.order(), 2);
}

TEST(BranchSet, Validation) {
    EXPECT_THROW(BranchSet::standard({Scalar(0)}), InputError);
    EXPECT_THROW(BranchSet::standard({Scalar(1)}), InputError);
    EXPECT_THROW(BranchSet::standard({Scalar(2), Scalar(2)}), InputError);
    EXPECT_NO_THROW(BranchSet::standard({Scalar::symbol("a"), Scalar::symbol("b")}));
    EXPECT_EQ(BranchSet::standard({Scalar(5)}).size(), 4u);
}

namespace {

void expect_group(const BranchSet& b, const std::vector<Mobius>& g) {
    auto member = [&](const Mobius& m) { return std::any_of(g.begin(), g.end(), [&](const Mobius& x) { return x == m; }); };
    EXPECT_TRUE(member(Mobius::identity()));
    for (const auto& x : g) {
        EXPECT_TRUE(member(x.inverse()));
        for (const auto& y : g) EXPECT_TRUE(member(x * y));
        EXPECT_FALSE(b.permutation(x).empty());
    }
}

}  // namespace

TEST(Symmetries, ThreePointsGiveS3) {
    const BranchSet b({Scalar::infinity(), Scalar(0), Scalar(1)});
    const auto g = symmetries_of_branch_set(b);
    EXPECT_EQ(g.size(), 6u);
    expect_group(b, g);
}

TEST(Symmetries, GenericFourPointsGiveKleinFour) {
    const BranchSet b = BranchSet::standard({Scalar::rational(7, 3)});
    const auto g = symmetries_of_branch_set(b);
    EXPECT_EQ(g.size(), 4u);
    expect_group(b, g);
    for (const auto& m : g) EXPECT_LE(m.order(), 2);
}

TEST(Symmetries, HarmonicFourPointsGiveDihedralEight) {
    const BranchSet b = BranchSet::standard({Scalar(-1)});
    EXPECT_EQ(symmetries_of_branch_set(b).size(), 8u);
}

TEST(Symmetries, SymbolicRejected) {
    EXPECT_THROW(symmetries_of_branch_set(BranchSet::standard({Scalar::symbol("l")})), UnsupportedModeError);
}

TEST(Symmetries, HeptagonalSetHasOrderSeven) {
    const BranchSet b = heptagonal_branch_set();
    ASSERT_EQ(b.size(), 7u);
    const auto g = symmetries_of_branch_set(b);
    EXPECT_EQ(g.size(), 14u);
    std::set<int> orders;
    for (const auto& m : g) orders.insert(m.order());
    EXPECT_TRUE(orders.count(7));
    expect_group(b, g);
}
