#include <gtest/gtest.h>

#include <set>

#include "gfc/conjecture.hpp"
#include "gfc/decompose.hpp"

using namespace gfc;

TEST(UnitOrbitTuples, CountMatchesPsiForPrimes) {
    for (int q : {2, 3, 5, 7})
        for (int r = 2; r <= 6; ++r) {
            const auto tuples = unit_orbit_tuples(q, r);
            // One orbit per normalized tuple: first entry 1, the rest summing to -1.
            EXPECT_EQ(static_cast<std::int64_t>(tuples.size()), psi_closed(q, r)) << q << "," << r;
            for (const auto& t : tuples) EXPECT_EQ(t.front(), 1);
        }
}

TEST(UnitOrbitTuples, CompositeOrbitsAreDisjoint) {
    const auto tuples = unit_orbit_tuples(8, 3);
    std::set<std::vector<int>> seen;
    for (const auto& t : tuples) {
        std::set<std::vector<int>> orbit;
        for (int u : {1, 3, 5, 7}) {
            std::vector<int> s = t;
            for (auto& x : s) x = mod(static_cast<long>(u) * x, 8);
            orbit.insert(s);
        }
        for (const auto& s : orbit) EXPECT_TRUE(seen.insert(s).second);
    }
    EXPECT_FALSE(tuples.empty());
}

TEST(UnitOrbitTuples, Guards) {
    EXPECT_THROW(unit_orbit_tuples(1, 3), InputError);
    EXPECT_THROW(unit_orbit_tuples(12, 8), ResourceError);
}

TEST(Conjectural, PrimeKReproducesTheorem) {
    for (const auto& [p, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {3, 4}, {5, 2}}) {
        std::vector<Scalar> lambdas;
        for (int i = 0; i < n - 2; ++i) lambdas.push_back(Scalar::rational(3 * i + 5, 2));
        const BranchSet b = BranchSet::standard(lambdas);
        const auto conj = conjectural_enumeration(p, n, b);
        const auto dec = decompose_prime(p, n, b);
        std::multiset<std::string> a, d;
        for (const auto& c : conj.candidates) a.insert(c.equation);
        for (const auto& f : dec.factors) d.insert(f.equation);
        EXPECT_EQ(a, d) << p << "," << n;
        EXPECT_EQ(conj.mode, "CONJECTURAL");
    }
}

TEST(Conjectural, FermatFourCandidates) {
    const auto conj = conjectural_enumeration(4, 2, BranchSet::standard({}));
    EXPECT_TRUE(conj.symmetry_reduced);
    EXPECT_EQ(conj.symmetry_count, 6u);
    ASSERT_EQ(conj.subset_classes.at(3).size(), 1u);
    std::int64_t irreducible_genus = 0;
    std::size_t reducible = 0;
    for (const auto& c : conj.candidates) {
        if (c.reducible) {
            ++reducible;
            EXPECT_EQ(c.gcd, 2);
        } else {
            irreducible_genus += c.genus;
        }
    }
    EXPECT_EQ(conj.candidates.size(), 3u);
    EXPECT_EQ(irreducible_genus, 3);
    EXPECT_EQ(reducible, 0u);
}

TEST(Conjectural, ReducibleComponentsUseReducedDegree) {
    const auto conj = conjectural_enumeration(4, 3, BranchSet::standard({Scalar(3)}));
    bool found = false;
    for (const auto& c : conj.candidates)
        if (c.reducible) {
            found = true;
            EXPECT_EQ(c.gcd, 2);
            EXPECT_EQ(c.exponents, (std::vector<int>{2, 2, 2, 2}));
            EXPECT_EQ(c.genus, 1);
        }
    EXPECT_TRUE(found);
}

TEST(Conjectural, SymbolicSkipsSymmetryReduction) {
    const auto conj = conjectural_enumeration(3, 3, BranchSet::standard({Scalar::symbol("l")}));
    EXPECT_FALSE(conj.symmetry_reduced);
    EXPECT_EQ(conj.subset_classes.at(4).size(), 1u);
    EXPECT_EQ(conj.subset_classes.at(3).size(), 4u);
}

TEST(Conjectural, SizeMismatchRejected) {
    EXPECT_THROW(conjectural_enumeration(4, 3, BranchSet::standard({})), InputError);
}
