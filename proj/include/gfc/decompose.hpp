#pragma once

/**
 * @file decompose.hpp
 * @brief Jacobian decomposition of a generalized Fermat curve of prime type (p, n)
 *        into cyclic p-gonal quotient curves, plus the named examples built on it.
 */

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gfc/curves.hpp"
#include "gfc/error.hpp"
#include "gfc/genus.hpp"
#include "gfc/group.hpp"
#include "gfc/kani_rosen.hpp"
#include "gfc/mobius.hpp"
#include "gfc/scalar.hpp"

namespace gfc {

struct DecompositionFactor {
    std::string label;           ///< C1, C2, ... in output order
    std::string subgroup_label;  ///< generators of the kernel
    Character character;
    Subgroup subgroup;
    Signature signature;
    PGonalCurve curve;       ///< over the original branch points
    PGonalCurve normalized;  ///< standard presentation (first points at inf, 0, 1)
    std::string equation;    ///< printed normalized curve
    std::int64_t genus = 0;
    int multiplicity = 1;
    std::vector<int> branch_indices;  ///< 1-based j with chi(a_j) != 0
    std::optional<Scalar> j;
};

struct Decomposition {
    int p = 2;
    int n = 2;
    BranchSet parameters;
    std::vector<DecompositionFactor> factors;
    Certificate certificate;
    std::int64_t genus_total = 0;
    std::string mode = "THEOREM";

    std::int64_t factor_genus_sum() const {
        std::int64_t s = 0;
        for (const auto& f : factors) s += f.genus * f.multiplicity;
        return s;
    }
    std::size_t count_genus(std::int64_t g) const {
        return static_cast<std::size_t>(
            std::count_if(factors.begin(), factors.end(), [g](const DecompositionFactor& f) { return f.genus == g; }));
    }
};

struct DecomposeOptions {
    bool cross_check_signatures = true;  ///< compare the fast signature with the stabilizer model
    bool with_j = true;
};

/// The lambda of a normalized genus-1 double cover y^2 = x(x-1)(x-lambda).
inline std::optional<Scalar> elliptic_lambda(const PGonalCurve& normalized) {
    if (normalized.degree() != 2 || normalized.branch_count() != 4) return std::nullopt;
    for (const auto& t : normalized.terms()) {
        if (t.point.is_infinity() || t.point.is_zero() || t.point == Scalar(1)) continue;
        return t.point;
    }
    return std::nullopt;
}

/// j-invariant of a genus-1 factor; nullopt for symbolic parameters.
inline std::optional<Scalar> factor_j(const PGonalCurve& normalized, std::int64_t genus) {
    if (genus != 1) return std::nullopt;
    if (normalized.degree() == 3 && normalized.branch_count() == 3) return Scalar(0);
    auto lam = elliptic_lambda(normalized);
    if (!lam || lam->is_symbolic()) return std::nullopt;
    return j_invariant(*lam);
}

inline Decomposition decompose_prime(int p, int n, const BranchSet& b, const DecomposeOptions& opt = {}) {
    if (!is_prime(p)) throw UnsupportedModeError("decompose_prime needs a prime p; use the conjecture mode for k = " +
                                                 std::to_string(p));
    const GroupType gt(p, n);
    if (n + 1 < min_branch_count(p))
        throw InputError("type (" + std::to_string(p) + "," + std::to_string(n) + ") has no positive-genus quotient");
    if (static_cast<int>(b.size()) != n + 1)
        throw InputError("branch set has " + std::to_string(b.size()) + " points, type needs " + std::to_string(n + 1));

    Decomposition dec;
    dec.p = p;
    dec.n = n;
    dec.parameters = b;
    dec.genus_total = total_genus(p, n);

    std::vector<Subgroup> kernels;
    for (const auto& chi : enumerate_hyperplanes(gt)) {
        const Signature sig = hyperplane_signature(chi, gt);
        if (sig.genus < 1) continue;
        DecompositionFactor f;
        f.character = chi;
        f.subgroup = chi.kernel(gt);
        if (opt.cross_check_signatures && !(quotient_signature(f.subgroup) == sig))
            throw ConsistencyError("signature mismatch for " + chi.to_string());
        f.subgroup_label = f.subgroup.label();
        f.signature = sig;
        f.curve = pgonal_from_character(chi, b);
        f.normalized = standard_form(f.curve).curve;
        f.equation = f.normalized.equation();
        f.genus = sig.genus;
        if (f.curve.genus() != f.genus) throw ConsistencyError("curve genus disagrees with signature for " + chi.to_string());
        for (int j = 1; j <= n + 1; ++j)
            if (chi.value(j) != 0) f.branch_indices.push_back(j);
        if (opt.with_j) f.j = factor_j(f.normalized, f.genus);
        kernels.push_back(f.subgroup);
        dec.factors.push_back(std::move(f));
    }
    dec.certificate = check_corollary(kernels);
    if (!dec.certificate.pass) throw ConsistencyError("decomposition certificate failed: " + dec.certificate.message);
    if (dec.factor_genus_sum() != dec.genus_total)
        throw ConsistencyError("factor genera sum to " + std::to_string(dec.factor_genus_sum()) + ", expected " +
                               std::to_string(dec.genus_total));

    std::stable_sort(dec.factors.begin(), dec.factors.end(), [](const auto& a, const auto& c) {
        if (a.genus != c.genus) return a.genus < c.genus;
        return a.equation < c.equation;
    });
    for (std::size_t i = 0; i < dec.factors.size(); ++i) dec.factors[i].label = "C" + std::to_string(i + 1);
    return dec;
}

inline Decomposition decompose_prime(int p, int n, const std::vector<Scalar>& lambdas, const DecomposeOptions& opt = {}) {
    if (static_cast<int>(lambdas.size()) != n - 2)
        throw InputError("type (" + std::to_string(p) + "," + std::to_string(n) + ") needs " + std::to_string(n - 2) +
                         " parameters, got " + std::to_string(lambdas.size()));
    return decompose_prime(p, n, BranchSet::standard(lambdas), opt);
}

// ============================================================================
// Isogeny classes of elliptic factors
// ============================================================================

struct JClass {
    Scalar j;
    std::vector<std::string> labels;
    int exponent() const { return static_cast<int>(labels.size()); }
};

struct JClassReport {
    std::vector<JClass> classes;
    std::string summary;  ///< e.g. "C1^5" (isomorphic over the algebraic closure)

    std::vector<int> exponents() const {
        std::vector<int> e;
        for (const auto& c : classes) e.push_back(c.exponent());
        std::sort(e.rbegin(), e.rend());
        return e;
    }
};

/// Buckets labeled j-values by equality (exact, or within tolerance for complex values).
inline JClassReport group_j_values(const std::vector<std::pair<std::string, Scalar>>& items) {
    JClassReport r;
    for (const auto& [label, j] : items) {
        auto it = std::find_if(r.classes.begin(), r.classes.end(), [&](const JClass& c) { return c.j == j; });
        if (it == r.classes.end()) {
            r.classes.push_back({j, {label}});
        } else {
            it->labels.push_back(label);
        }
    }
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
        if (i) r.summary += " x ";
        r.summary += r.classes[i].labels.front();
        if (r.classes[i].exponent() > 1) r.summary += "^" + std::to_string(r.classes[i].exponent());
    }
    return r;
}

/// Genus-1 factors bucketed by j; higher-genus factors are never merged.
inline JClassReport group_by_j(const Decomposition& dec) {
    std::vector<std::pair<std::string, Scalar>> items;
    for (const auto& f : dec.factors) {
        if (f.genus != 1) continue;
        if (!f.j) throw UnsupportedModeError("j-grouping needs concrete parameters");
        items.emplace_back(f.label, *f.j);
    }
    return group_j_values(items);
}

// ============================================================================
// Named p = 2 families
// ============================================================================

struct NamedSubgroup {
    int j = 0;                 ///< family index
    std::vector<int> tuple;    ///< the index set I (1-based)
    std::string label;         ///< "K_j" for the identity tuple, else "H(i1,...)"
    Subgroup subgroup;
    Character character;       ///< the kernel's character (support = complement of I)
    std::int64_t genus = 0;
};

namespace detail {

inline void for_each_subset(int m, int size, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 1);
    if (size > m) return;
    while (true) {
        f(idx);
        int i = size - 1;
        while (i >= 0 && idx[i] == m - size + i + 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int t = i + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
    }
}

}  // namespace detail

/**
 * The subgroups H_sigma for p = 2 and n >= 6: for each family index j the
 * index sets I of size 2j-1 (n even, j = 1..(n-2)/2) or 2j (n odd,
 * j = 0..(n-3)/2). H_sigma is generated by a_i (i in I) and a_{c1} a_{cm},
 * where c1 < c2 < ... is the complement of I and m runs up to the
 * second-to-last complement index.
 */
inline std::vector<NamedSubgroup> named_family_subgroups(int n) {
    if (n < 6) throw InputError("the named p = 2 families need n >= 6, got " + std::to_string(n));
    const GroupType gt(2, n);
    const bool even = n % 2 == 0;
    const int j_lo = even ? 1 : 0;
    const int j_hi = even ? (n - 2) / 2 : (n - 3) / 2;
    std::vector<NamedSubgroup> out;
    for (int j = j_lo; j <= j_hi; ++j) {
        const int size = even ? 2 * j - 1 : 2 * j;
        auto build = [&](const std::vector<int>& tuple) {
            std::vector<int> comp;
            for (int i = 1; i <= n + 1; ++i)
                if (std::find(tuple.begin(), tuple.end(), i) == tuple.end()) comp.push_back(i);
            std::vector<GroupElement> gens;
            for (int i : tuple) gens.push_back(GroupElement::generator(gt, i));
            for (std::size_t m = 1; m + 1 < comp.size(); ++m)
                gens.push_back(GroupElement::generator(gt, comp[0]) + GroupElement::generator(gt, comp[m]));
            NamedSubgroup ns;
            ns.j = j;
            ns.tuple = tuple;
            ns.subgroup = span(gens, gt);
            std::vector<int> coeffs(n, 0);
            for (int c : comp)
                if (c <= n) coeffs[c - 1] = 1;
            ns.character = Character(coeffs, 2);
            bool identity = true;
            for (int t = 0; t < size; ++t) identity = identity && tuple[t] == t + 1;
            if (identity) {
                ns.label = "K_" + std::to_string(j);
            } else {
                ns.label = "H(";
                for (std::size_t t = 0; t < tuple.size(); ++t) ns.label += (t ? "," : "") + std::to_string(tuple[t]);
                ns.label += ")";
            }
            ns.genus = quotient_signature(ns.subgroup).genus;
            out.push_back(std::move(ns));
        };
        if (size == 0) {
            build({});
        } else {
            detail::for_each_subset(n + 1, size, build);
        }
    }
    return out;
}

// ============================================================================
// Special parameters lambda_2 = 1/lambda_1 for type (2,4)
// ============================================================================

struct PolynomialFactor {
    std::string text;
    std::vector<long> coeffs;  ///< constant term first
    Scalar value;
    bool vanishes = false;
};

struct SpecialCondition {
    std::string name;  ///< which j coincidence
    std::vector<PolynomialFactor> factors;
    bool polynomial_vanishes = false;
    bool j_equal = false;  ///< direct evaluation of the coincidence
};

struct SpecialParameterReport {
    Scalar lambda1, lambda2;
    std::vector<SpecialCondition> conditions;
    bool all_hold() const {
        return std::all_of(conditions.begin(), conditions.end(), [](const SpecialCondition& c) { return c.polynomial_vanishes; });
    }
    bool none_hold() const {
        return std::none_of(conditions.begin(), conditions.end(), [](const SpecialCondition& c) { return c.polynomial_vanishes; });
    }
};

inline Scalar evaluate_polynomial(const std::vector<long>& coeffs, const Scalar& x) {
    Scalar acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Scalar(*it);
    return acc;
}

inline SpecialParameterReport special_parameter_conditions(const Scalar& lambda1) {
    if (lambda1.is_symbolic()) throw UnsupportedModeError("special parameters need a concrete lambda1");
    SpecialParameterReport r;
    r.lambda1 = lambda1;
    r.lambda2 = Scalar(1) / lambda1;
    BranchSet::standard({r.lambda1, r.lambda2});
    const Scalar &l1 = r.lambda1, &l2 = r.lambda2, one(1);
    const Scalar j1 = j_invariant(l1);

    struct Spec {
        const char* name;
        Scalar arg;
        std::vector<std::pair<const char*, std::vector<long>>> polys;
    };
    const std::pair<const char*, std::vector<long>> p_a{"1+l^2", {1, 0, 1}}, p_b{"l^2-l-1", {-1, -1, 1}},
        p_c{"l^2+l-1", {-1, 1, 1}}, p_d{"l^2+l+1", {1, 1, 1}}, p_e{"l^3-l+1", {1, -1, 0, 1}},
        p_f{"l^3-l^2+1", {1, 0, -1, 1}};
    const std::vector<Spec> specs = {
        {"j(l2(1-l1)/(l2-l1)) = j(l1)", l2 * (one - l1) / (l2 - l1), {p_a, p_b, p_c}},
        {"j(l2/l1) = j(l1)", l2 / l1, {p_b, p_c, p_d, p_e, p_f}},
        {"j((l2-1)/(l1-1)) = j(l1)", (l2 - one) / (l1 - one), {p_a, p_b, p_c}},
    };
    for (const auto& s : specs) {
        SpecialCondition c;
        c.name = s.name;
        for (const auto& [text, coeffs] : s.polys) {
            PolynomialFactor f;
            f.text = text;
            f.coeffs = coeffs;
            f.value = evaluate_polynomial(coeffs, l1);
            f.vanishes = f.value.is_zero() || (f.value.is_complex() && f.value == Scalar(0));
            c.polynomial_vanishes = c.polynomial_vanishes || f.vanishes;
            c.factors.push_back(std::move(f));
        }
        c.j_equal = j_invariant(s.arg) == j1;
        r.conditions.push_back(std::move(c));
    }
    return r;
}

// ============================================================================
// Branch sets built from roots of unity
// ============================================================================

inline Scalar root_of_unity(int m, int power, long prec) {
    BigFloat angle(prec);
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    angle = angle * BigFloat(mpq_class(2 * power, m), prec);
    BigFloat c(prec), s(prec);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    return Scalar(BigComplex(c, s));
}

/// The 7th roots of unity moved by a Möbius map so that 1, z, z^2 land on inf, 0, 1.
inline BranchSet heptagonal_branch_set(long prec = kDefaultPrecision) {
    std::vector<Scalar> roots;
    for (int k = 0; k < 7; ++k) roots.push_back(root_of_unity(7, k, prec));
    const Mobius t = mobius_to_standard(roots[0], roots[1], roots[2]);
    std::vector<Scalar> lambdas;
    for (int k = 3; k < 7; ++k) lambdas.push_back(t(roots[k]));
    return BranchSet::standard(lambdas);
}

struct Omega5Setup {
    Scalar omega;
    Mobius t;
    Scalar lambda1, lambda2;
    bool t_fixes_one = false, t_sends_omega_to_inf = false, t_sends_omega4_to_zero = false;
    bool lambda1_closed_form = false, lambda2_closed_form = false;
    BranchSet branch_set;
};

/**
 * T(x) = (x - w^4)(1 - w)/((x - w)(1 - w^4)) for w = exp(2 pi i/5), which moves
 * the 5th roots of unity onto {inf, 0, 1, lambda_1, lambda_2} with
 * lambda_1 = T(w^2) = -w/(1+w^2) and lambda_2 = T(w^3) = -w^2/((1+w^2)(1+w)^2).
 */
inline Omega5Setup omega5_setup(long prec = kDefaultPrecision) {
    Omega5Setup s;
    s.omega = root_of_unity(5, 1, prec);
    const Scalar w = s.omega, one(1);
    const Scalar w2 = w * w, w3 = w2 * w, w4 = w3 * w;
    s.t = Mobius(one - w, -(w4 * (one - w)), one - w4, -(w * (one - w4)));
    s.t_fixes_one = s.t(one) == one;
    s.t_sends_omega_to_inf = s.t.c() * w + s.t.d() == Scalar(0);
    s.t_sends_omega4_to_zero = s.t(w4) == Scalar(0);
    s.lambda1 = s.t(w2);
    s.lambda2 = s.t(w3);
    s.lambda1_closed_form = s.lambda1 == -(w / (one + w2));
    s.lambda2_closed_form = s.lambda2 == -(w2 / ((one + w2) * (one + w) * (one + w)));
    s.branch_set = BranchSet::standard({s.lambda1, s.lambda2});
    return s;
}

}  // namespace gfc
