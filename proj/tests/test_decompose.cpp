#include <gtest/gtest.h>

#include <map>
#include <set>

#include "gfc/decompose.hpp"

using namespace gfc;

namespace {

std::vector<Scalar> rational_lambdas(int count) {
    const std::vector<Scalar> pool = {Scalar(2), Scalar(7), Scalar::rational(-5, 3), Scalar(11), Scalar::rational(3, 8),
                                      Scalar(-4)};
    return {pool.begin(), pool.begin() + count};
}

std::map<std::int64_t, std::size_t> census(const Decomposition& d) {
    std::map<std::int64_t, std::size_t> c;
    for (const auto& f : d.factors) ++c[f.genus];
    return c;
}

std::multiset<std::string> j_multiset(const Decomposition& d) {
    std::multiset<std::string> out;
    for (const auto& f : d.factors)
        if (f.j) out.insert(f.j->to_string());
    return out;
}

}  // namespace

TEST(DecomposePrime, TypeTwoFour) {
    const auto d = decompose_prime(2, 4, rational_lambdas(2));
    EXPECT_EQ(d.factors.size(), 5u);
    EXPECT_EQ(d.count_genus(1), 5u);
    EXPECT_TRUE(d.certificate.pass);
    EXPECT_EQ(d.genus_total, 5);
    EXPECT_EQ(d.mode, "THEOREM");
    for (std::size_t i = 0; i < d.factors.size(); ++i) EXPECT_EQ(d.factors[i].label, "C" + std::to_string(i + 1));
}

TEST(DecomposePrime, TypeTwoFive) {
    const auto l = rational_lambdas(3);
    const auto d = decompose_prime(2, 5, l);
    EXPECT_EQ(census(d), (std::map<std::int64_t, std::size_t>{{1, 15}, {2, 1}}));
    EXPECT_EQ(d.factor_genus_sum(), 17);
    const auto& big = d.factors.back();
    EXPECT_EQ(big.branch_indices, (std::vector<int>{1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(big.curve.equation(), HyperellipticModel({Scalar(0), Scalar(1), l[0], l[1], l[2]}).as_pgonal().equation());
}

TEST(DecomposePrime, TypeThreeThree) {
    const auto d = decompose_prime(3, 3, std::vector<Scalar>{Scalar::rational(7, 3)});
    EXPECT_EQ(census(d), (std::map<std::int64_t, std::size_t>{{1, 4}, {2, 3}}));
    for (const auto& f : d.factors) {
        if (f.genus == 1) {
            EXPECT_EQ(f.curve.branch_count(), 3);
            EXPECT_EQ(*f.j, Scalar(0));
        } else {
            EXPECT_EQ(f.curve.branch_count(), 4);
            EXPECT_TRUE(f.curve.terms().front().point.is_infinity());
        }
    }
    EXPECT_EQ(d.factors[4].equation, "y^3 = (x)^1*(x-1)^2*(x-7/3)^2");
}

TEST(DecomposePrime, TypeThreeFour) {
    const auto d = decompose_prime(3, 4, rational_lambdas(2));
    EXPECT_EQ(census(d), (std::map<std::int64_t, std::size_t>{{1, 10}, {2, 15}, {3, 5}}));
    EXPECT_EQ(d.factor_genus_sum(), 55);
}

TEST(DecomposePrime, GenusThreeTuplesUpToUnitsAndOrder) {
    const auto d = decompose_prime(3, 4, rational_lambdas(2));
    const std::vector<std::vector<int>> listed = {{1, 2, 2, 2}, {2, 1, 1, 1}, {2, 2, 1, 2}, {2, 2, 2, 1}, {2, 2, 2, 2}};
    auto key = [](std::vector<int> v) {
        std::vector<int> best;
        for (int u : {1, 2}) {
            std::vector<int> s = v;
            for (auto& x : s) x = (x * u) % 3;
            std::sort(s.begin(), s.end());
            if (best.empty() || s < best) best = s;
        }
        return best;
    };
    std::multiset<std::vector<int>> want, got;
    for (const auto& t : listed) want.insert(key(t));
    for (const auto& f : d.factors) {
        if (f.genus != 3) continue;
        std::vector<int> finite;
        for (const auto& t : f.curve.finite_terms()) finite.push_back(t.exponent);
        got.insert(key(finite));
    }
    EXPECT_EQ(got, want);

    // Position-exact, the listed tuples repeat one unit class and miss (1,2,1,1).
    std::set<std::vector<int>> classes;
    for (const auto& t : listed) {
        std::vector<int> a = t, b = t;
        for (auto& x : b) x = (2 * x) % 3;
        classes.insert(std::min(a, b));
    }
    EXPECT_EQ(classes.size(), 4u);
}

TEST(DecomposePrime, ClassicalFermatFive) {
    const auto d = decompose_prime(5, 2, std::vector<Scalar>{});
    EXPECT_EQ(census(d), (std::map<std::int64_t, std::size_t>{{2, 3}}));
    for (const auto& f : d.factors) {
        EXPECT_EQ(f.normalized.infinity_exponent(), 1);
        long finite = 0;
        for (const auto& t : f.normalized.finite_terms()) finite += t.exponent;
        EXPECT_EQ(mod(finite, 5), 4);
    }
}

TEST(DecomposePrime, Errors) {
    EXPECT_THROW(decompose_prime(4, 2, std::vector<Scalar>{}), UnsupportedModeError);
    EXPECT_THROW(decompose_prime(2, 4, std::vector<Scalar>{Scalar(2)}), InputError);
    EXPECT_THROW(decompose_prime(2, 4, std::vector<Scalar>{Scalar(2), Scalar(2)}), InputError);
    EXPECT_THROW(decompose_prime(2, 2, std::vector<Scalar>{}), InputError);
}

TEST(DecomposePrime, SweepBalancesAndCertifies) {
    for (int p : {2, 3, 5})
        for (int n = 2; n <= 6; ++n) {
            if (n + 1 < min_branch_count(p)) continue;
            long order = 1;
            for (int i = 0; i < n; ++i) order *= p;
            if (order > 243) continue;
            const auto d = decompose_prime(p, n, rational_lambdas(n - 2));
            EXPECT_TRUE(d.certificate.pass) << p << "," << n;
            EXPECT_EQ(d.factor_genus_sum(), total_genus(p, n)) << p << "," << n;
        }
}

TEST(DecomposePrime, PermutationInvariance) {
    for (int p : {2, 3}) {
        const Scalar a = Scalar::rational(-5, 3), b(7);
        const auto d1 = decompose_prime(p, 4, std::vector<Scalar>{a, b});
        const auto d2 = decompose_prime(p, 4, std::vector<Scalar>{b, a});
        EXPECT_EQ(census(d1), census(d2));
        EXPECT_EQ(j_multiset(d1), j_multiset(d2));
    }
}

TEST(DecomposePrime, DeterministicOrder) {
    const auto a = decompose_prime(3, 4, rational_lambdas(2));
    const auto b = decompose_prime(3, 4, rational_lambdas(2));
    for (std::size_t i = 0; i < a.factors.size(); ++i) EXPECT_EQ(a.factors[i].equation, b.factors[i].equation);
    for (std::size_t i = 1; i < a.factors.size(); ++i) {
        const auto& x = a.factors[i - 1];
        const auto& y = a.factors[i];
        EXPECT_TRUE(x.genus < y.genus || (x.genus == y.genus && x.equation <= y.equation));
    }
}

TEST(GroupByJ, GenericRationalGivesFiveClasses) {
    const auto d = decompose_prime(2, 4, std::vector<Scalar>{Scalar(2), Scalar(7)});
    const auto r = group_by_j(d);
    EXPECT_EQ(r.classes.size(), 5u);
}

TEST(GroupByJ, GoldenRatioGivesOneClass) {
    const Scalar l1 = Scalar::quadratic(mpq_class(1, 2), mpq_class(-1, 2), 5);
    const Scalar l2 = Scalar::quadratic(mpq_class(-1, 2), mpq_class(-1, 2), 5);
    EXPECT_EQ(l2, Scalar(1) / l1);
    const auto r = group_by_j(decompose_prime(2, 4, std::vector<Scalar>{l1, l2}));
    EXPECT_EQ(r.classes.size(), 1u);
    EXPECT_EQ(r.summary, "C1^5");
}

TEST(GroupByJ, NeverMergesAcrossGenus) {
    const auto d = decompose_prime(2, 5, rational_lambdas(3));
    const auto r = group_by_j(d);
    std::size_t members = 0;
    for (const auto& c : r.classes) members += c.labels.size();
    EXPECT_EQ(members, 15u);
    EXPECT_THROW(group_by_j(decompose_prime(2, 4, std::vector<Scalar>{Scalar::symbol("a"), Scalar::symbol("b")})),
                 UnsupportedModeError);
}

TEST(SpecialParameters, Examples) {
    const auto golden = special_parameter_conditions(Scalar::quadratic(mpq_class(1, 2), mpq_class(-1, 2), 5));
    EXPECT_TRUE(golden.all_hold());
    for (const auto& c : golden.conditions) EXPECT_TRUE(c.j_equal) << c.name;
    const auto two = special_parameter_conditions(Scalar(2));
    EXPECT_TRUE(two.none_hold());
    for (const auto& c : two.conditions) EXPECT_FALSE(c.j_equal) << c.name;
    const auto other = special_parameter_conditions(Scalar::quadratic(mpq_class(-1, 2), mpq_class(1, 2), 5));
    EXPECT_TRUE(other.all_hold());
}

TEST(SpecialParameters, PolynomialsMatchDirectEvaluation) {
    for (long num : {3L, -3L, 5L, 9L})
        for (long den : {2L, 7L}) {
            const Scalar l = Scalar::rational(num, den);
            const auto r = special_parameter_conditions(l);
            for (const auto& c : r.conditions) EXPECT_EQ(c.polynomial_vanishes, c.j_equal) << c.name << " " << l.to_string();
        }
    const Scalar i = Scalar::quadratic(0, 1, -1);
    const auto r = special_parameter_conditions(i);
    EXPECT_TRUE(r.conditions[0].polynomial_vanishes);
    EXPECT_FALSE(r.conditions[1].polynomial_vanishes);
    EXPECT_TRUE(r.conditions[2].polynomial_vanishes);
}

TEST(Omega5, Setup) {
    const auto s = omega5_setup();
    EXPECT_TRUE(s.t_fixes_one);
    EXPECT_TRUE(s.t_sends_omega_to_inf);
    EXPECT_TRUE(s.t_sends_omega4_to_zero);
    EXPECT_TRUE(s.lambda1_closed_form);
    EXPECT_TRUE(s.lambda2_closed_form);
    const Scalar golden = Scalar::quadratic(mpq_class(1, 2), mpq_class(-1, 2), 5);
    EXPECT_EQ(s.lambda1, Scalar(1) / golden);
    EXPECT_EQ(s.lambda2, golden);
    EXPECT_EQ(group_by_j(decompose_prime(2, 4, s.branch_set)).summary, "C1^5");
}

TEST(Heptagon, TypeTwoSix) {
    const auto d = decompose_prime(2, 6, heptagonal_branch_set());
    EXPECT_EQ(census(d), (std::map<std::int64_t, std::size_t>{{1, 35}, {2, 7}}));
    EXPECT_EQ(d.factor_genus_sum(), 49);
}

TEST(NamedFamilies, EvenSix) {
    const auto fam = named_family_subgroups(6);
    std::map<std::int64_t, std::size_t> c;
    for (const auto& s : fam) ++c[s.genus];
    EXPECT_EQ(c, (std::map<std::int64_t, std::size_t>{{1, 35}, {2, 7}}));
    EXPECT_EQ(fam.front().label, "K_1");
}

TEST(NamedFamilies, OddSeven) {
    const auto fam = named_family_subgroups(7);
    std::map<int, std::size_t> sizes;
    std::map<int, std::int64_t> genus;
    std::int64_t total = 0;
    for (const auto& s : fam) {
        ++sizes[s.j];
        genus[s.j] = s.genus;
        total += s.genus;
    }
    EXPECT_EQ(sizes, (std::map<int, std::size_t>{{0, 1}, {1, 28}, {2, 70}}));
    EXPECT_EQ(genus, (std::map<int, std::int64_t>{{0, 3}, {1, 2}, {2, 1}}));
    EXPECT_EQ(total, total_genus(2, 7));
    EXPECT_EQ(total, 129);
}

TEST(NamedFamilies, MatchHyperplaneKernelsOneToOne) {
    for (int n : {6, 7}) {
        const GroupType gt(2, n);
        const auto fam = named_family_subgroups(n);
        std::vector<Subgroup> kernels;
        for (const auto& chi : enumerate_hyperplanes(gt))
            if (hyperplane_signature(chi, gt).genus > 0) kernels.push_back(chi.kernel(gt));
        EXPECT_EQ(fam.size(), kernels.size());
        for (const auto& s : fam) {
            EXPECT_EQ(std::count(kernels.begin(), kernels.end(), s.subgroup), 1) << s.label;
            EXPECT_EQ(s.character.kernel(gt), s.subgroup) << s.label;
        }
    }
    EXPECT_THROW(named_family_subgroups(5), InputError);
}
