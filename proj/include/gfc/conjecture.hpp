#pragma once

/**
 * @file conjecture.hpp
 * @brief Composite exponents: the classical Fermat subgroup families, cyclic
 *        quotient scans, and the conjectural enumeration of candidate factors.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gfc/curves.hpp"
#include "gfc/decompose.hpp"
#include "gfc/error.hpp"
#include "gfc/genus.hpp"
#include "gfc/group.hpp"
#include "gfc/kani_rosen.hpp"
#include "gfc/mobius.hpp"

namespace gfc {

// ============================================================================
// Classical Fermat curves F_k (type (k, 2))
// ============================================================================

struct LabeledSubgroup {
    std::string label;
    Subgroup subgroup;
    Signature signature;
};

struct FermatFamily {
    int k = 2;
    std::vector<LabeledSubgroup> members;
    Certificate certificate;
    std::string mode = "VERIFIED-CRITERION";

    std::vector<Subgroup> subgroups() const {
        std::vector<Subgroup> out;
        for (const auto& m : members) out.push_back(m.subgroup);
        return out;
    }
};

/// The explicit generator lists used for F_4, F_6 and F_8.
inline std::vector<std::vector<std::string>> fermat_family_generators(int k) {
    switch (k) {
        case 4: return {{"a1*a2^2"}, {"a2*a1^2"}, {"a3*a2^2"}};
        case 6:
            return {{"a1*a2^-1", "a1^3"}, {"a1^3", "a2^2"}, {"a1^3", "a3^2"}, {"a1^2", "a2^3"}, {"a1^2", "a3^3"},
                    {"a2^3", "a3^2"},     {"a2^2", "a3^3"}, {"a1*a2^-1"},      {"a1*a3^-1"},      {"a2*a3^-1"}};
        case 8:
            return {{"a1^-2", "a1*a2^4"}, {"a2^-2", "a1^4*a2^-1"}, {"a1^-1*a2"}, {"a1^2*a2^-1"}, {"a1*a2^-2"},
                    {"a1^-3*a2^-1"},      {"a1^-3*a2"},            {"a1*a2^2"},  {"a1^2*a2"}};
        default: throw InputError("no built-in Fermat family for k = " + std::to_string(k) + " (use 4, 6 or 8)");
    }
}

/**
 * Family for F_k checked with the pairwise criterion. For k = 8 the default
 * family is H3..H9 as listed; pass all_members to check every listed subgroup.
 */
inline FermatFamily fermat_family(int k, bool all_members = false) {
    const GroupType gt(k, 2);
    const auto gens = fermat_family_generators(k);
    FermatFamily fam;
    fam.k = k;
    const std::size_t first = (k == 8 && !all_members) ? 2 : 0;
    for (std::size_t i = first; i < gens.size(); ++i) {
        LabeledSubgroup m;
        m.label = "H" + std::to_string(i + 1);
        m.subgroup = span(gens[i], gt);
        m.signature = quotient_signature(m.subgroup);
        fam.members.push_back(std::move(m));
    }
    fam.certificate = check_corollary(fam.subgroups());
    return fam;
}

struct ScanEntry {
    std::string label;
    Subgroup subgroup;
    Signature signature;
    std::optional<Character> character;
};

/// Kernels of all surjections H0 -> Z_k, one per cyclic quotient.
inline std::vector<ScanEntry> scan_cyclic_quotients(int k, int n) {
    const GroupType gt(k, n);
    std::vector<ScanEntry> out;
    for (const auto& chi : enumerate_cyclic_quotients(gt)) {
        ScanEntry e;
        e.character = chi;
        e.subgroup = chi.kernel(gt);
        e.label = e.subgroup.label();
        e.signature = quotient_signature(e.subgroup);
        out.push_back(std::move(e));
    }
    return out;
}

/// All cyclic subgroups of the given order with their quotient signatures.
inline std::vector<ScanEntry> scan_cyclic_subgroups(int k, int n, int order) {
    const GroupType gt(k, n);
    std::vector<ScanEntry> out;
    for (auto& h : enumerate_cyclic_subgroups(gt, order)) {
        ScanEntry e;
        e.label = h.label();
        e.signature = quotient_signature(h);
        e.subgroup = std::move(h);
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<ScanEntry> filter_signature(const std::vector<ScanEntry>& entries, const Signature& sig) {
    std::vector<ScanEntry> out;
    for (const auto& e : entries)
        if (e.signature == sig) out.push_back(e);
    return out;
}

// ============================================================================
// Conjectural enumeration
// ============================================================================

inline constexpr std::uint64_t kTupleLimit = 10'000'000;

/// Exponent tuples in {1..k-1}^r with sum 0 mod k, one lex-minimal representative per unit orbit.
inline std::vector<std::vector<int>> unit_orbit_tuples(int k, int r) {
    if (k < 2 || r < 1) throw InputError("unit_orbit_tuples needs k >= 2, r >= 1");
    std::uint64_t space = 1;
    for (int i = 0; i < r; ++i) {
        space *= static_cast<std::uint64_t>(k - 1);
        if (space > kTupleLimit)
            throw ResourceError("(k-1)^r exceeds the " + std::to_string(kTupleLimit) + " tuple guard");
    }
    std::vector<int> units;
    for (int u = 1; u < k; ++u)
        if (std::gcd(u, k) == 1) units.push_back(u);
    std::vector<std::vector<int>> out;
    std::vector<int> a(r, 1);
    while (true) {
        long sum = std::accumulate(a.begin(), a.end(), 0L);
        if (sum % k == 0) {
            bool minimal = true;
            for (int u : units) {
                std::vector<int> b(r);
                for (int i = 0; i < r; ++i) b[i] = mod(static_cast<long>(u) * a[i], k);
                if (b < a) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.push_back(a);
        }
        int i = r - 1;
        while (i >= 0 && a[i] == k - 1) a[i--] = 1;
        if (i < 0) break;
        ++a[i];
    }
    return out;
}

struct SubsetClass {
    std::vector<int> representative;  ///< 1-based branch indices
    std::size_t orbit_size = 1;
};

struct CandidateFactor {
    std::vector<int> subset;       ///< 1-based branch indices
    std::vector<int> exponents;    ///< the U_{r,k} representative on the subset
    std::size_t subset_class = 0;  ///< index into the A_r list of its size
    PGonalCurve curve;
    PGonalCurve normalized;
    std::string equation;
    bool reducible = false;
    int gcd = 1;
    std::int64_t genus = 0;  ///< of one irreducible component (degree k/gcd)
};

struct ConjecturalEnumeration {
    int k = 2;
    int n = 2;
    BranchSet parameters;
    bool symmetry_reduced = false;
    std::size_t symmetry_count = 0;
    std::map<int, std::vector<std::vector<int>>> unit_tuples;  ///< r -> U_{r,k}
    std::map<int, std::vector<SubsetClass>> subset_classes;   ///< r -> A_r
    std::vector<CandidateFactor> candidates;
    std::string mode = "CONJECTURAL";
};

/**
 * Candidate factors y^k = prod (x - b_j)^{alpha_j} for every branch subset of
 * size r >= r_k and every unit class of exponent tuples on it. Subsets are
 * grouped into A_r classes under the Möbius symmetries of B (skipped for
 * symbolic points). Genus-0 candidates are dropped.
 */
inline ConjecturalEnumeration conjectural_enumeration(int k, int n, const BranchSet& b) {
    if (k < 2 || n < 2) throw InputError("conjectural_enumeration needs k, n >= 2");
    if (static_cast<int>(b.size()) != n + 1)
        throw InputError("branch set has " + std::to_string(b.size()) + " points, type needs " + std::to_string(n + 1));
    ConjecturalEnumeration out;
    out.k = k;
    out.n = n;
    out.parameters = b;
    std::vector<std::vector<int>> perms;
    if (!b.is_symbolic()) {
        out.symmetry_reduced = true;
        for (const auto& t : symmetries_of_branch_set(b)) perms.push_back(b.permutation(t));
        out.symmetry_count = perms.size();
    }
    const int m = n + 1;
    for (int r = min_branch_count(k); r <= m; ++r) {
        out.unit_tuples[r] = unit_orbit_tuples(k, r);
        std::vector<std::vector<int>> subsets;
        detail::for_each_subset(m, r, [&](const std::vector<int>& s) { subsets.push_back(s); });
        std::map<std::vector<int>, std::size_t> class_of;
        auto& classes = out.subset_classes[r];
        for (const auto& s : subsets) {
            if (class_of.count(s)) continue;
            std::set<std::vector<int>> orbit = {s};
            for (const auto& p : perms) {
                std::vector<int> img;
                for (int i : s) img.push_back(p[i - 1] + 1);
                std::sort(img.begin(), img.end());
                orbit.insert(img);
            }
            for (const auto& o : orbit) class_of[o] = classes.size();
            classes.push_back({*orbit.begin(), orbit.size()});
        }
        for (const auto& s : subsets)
            for (const auto& alpha : out.unit_tuples[r]) {
                CandidateFactor c;
                c.subset = s;
                c.exponents = alpha;
                c.subset_class = class_of.at(s);
                std::vector<BranchTerm> terms;
                for (int i = 0; i < r; ++i) terms.push_back({b[s[i] - 1], alpha[i]});
                c.curve = PGonalCurve(k, terms);
                c.gcd = k;
                for (int a : alpha) c.gcd = std::gcd(c.gcd, a);
                c.reducible = c.gcd > 1;
                if (c.reducible) {
                    std::vector<BranchTerm> reduced;
                    for (const auto& t : terms) reduced.push_back({t.point, t.exponent / c.gcd});
                    c.genus = PGonalCurve(k / c.gcd, reduced).genus();
                } else {
                    c.genus = c.curve.genus();
                }
                if (c.genus < 1) continue;
                c.normalized = standard_form(c.curve).curve;
                c.equation = c.normalized.equation();
                out.candidates.push_back(std::move(c));
            }
    }
    std::stable_sort(out.candidates.begin(), out.candidates.end(), [](const auto& x, const auto& y) {
        if (x.genus != y.genus) return x.genus < y.genus;
        return x.equation < y.equation;
    });
    return out;
}

}  // namespace gfc
