#pragma once

/**
 * @file hyperelliptic.hpp
 * @brief Hyperelliptic curves with an extra involution: the split into two
 *        quotient curves, and the genus-4 family split into four elliptic curves.
 *
 * A genus-g curve y^2 = (x^2 - 1) prod (x^2 - mu_j^2) carries the extra
 * involution x -> -x. The quotient map
 *     P(x) = ((1 - mu_2^2)/(1 - mu_1^2)) * (x^2 - mu_1^2)/(x^2 - mu_2^2)
 * sends the branch data to {inf, 0, 1, lambda_1, ..., lambda_g}, with
 * lambda_{j-2} = P(mu_j), lambda_{g-1} = P(inf) and lambda_g = P(0).
 * Square roots are taken exactly when they exist in Q or in the parameters'
 * quadratic field; otherwise the computation continues in BigComplex.
 */

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gfc/curves.hpp"
#include "gfc/error.hpp"
#include "gfc/mobius.hpp"
#include "gfc/scalar.hpp"

namespace gfc {

/// The closed-form extra involution of the model C; kept as text only.
inline constexpr const char* kSplitInvolutionText =
    "tau(x,y) = ( (mu1-1)^2 (1-x) / (4 mu1 x + (mu1-1)^2), "
    "y * 2 sqrt(mu1) (1-mu1^2)^2 / (4 mu1 x + (1-mu1)^2)^(g+1) * "
    "prod_{j=2..g} (1-mu1)/sqrt(mu_j^2-mu1^2) * "
    "sqrt((mu_j^2-mu1^2)(1-mu1)^2 + 4 mu1^2 (1-mu_j^2) + 4 mu1 (1-mu1)(mu1+mu_j^2)) )";

struct RootResult {
    Scalar value;
    bool numeric = false;
};

/// Exact root in Q or Q(sqrt d) when one exists, else the principal BigComplex root.
inline RootResult exact_or_numeric_sqrt(const Scalar& x, long ambient_d, long prec) {
    if (x.is_symbolic()) throw UnsupportedModeError("square root of a symbolic value");
    if (!x.is_complex())
        if (auto r = sqrt_in_field(x, ambient_d)) return {*r, false};
    return {Scalar(x.to_complex(prec).sqrt()), true};
}

inline long common_field(const std::vector<Scalar>& xs) {
    long d = 0;
    for (const auto& x : xs) {
        if (!x.is_quadratic()) continue;
        if (d != 0 && d != x.field_d()) throw UnsupportedModeError("parameters from different quadratic fields");
        d = x.field_d();
    }
    return d;
}

/// mu_1^2..mu_g^2 recovered from lambda_1..lambda_g.
inline std::vector<Scalar> mu_squares_from_lambdas(const std::vector<Scalar>& lambdas) {
    const std::size_t g = lambdas.size();
    if (g < 2) throw InputError("the split needs g >= 2 parameters");
    BranchSet::standard(lambdas);
    const Scalar one(1);
    const Scalar& la = lambdas[g - 2];
    const Scalar& lb = lambdas[g - 1];
    std::vector<Scalar> out;
    const Scalar mu2sq = (la - one) / (lb - one);
    out.push_back((lb / la) * mu2sq);
    out.push_back(mu2sq);
    for (std::size_t j = 3; j <= g; ++j) {
        const Scalar& l = lambdas[j - 3];
        out.push_back(mu2sq * (l - lb) / (l - la));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].is_zero() || out[i] == one)
            throw DomainError("degenerate parameters: mu_" + std::to_string(i + 1) + "^2 = " + out[i].to_string());
        for (std::size_t j = 0; j < i; ++j)
            if (out[i] == out[j])
                throw DomainError("degenerate parameters: mu_" + std::to_string(j + 1) + "^2 = mu_" +
                                  std::to_string(i + 1) + "^2");
    }
    return out;
}

/// The quotient map P for given mu_1, mu_2 (only their squares matter).
inline Scalar split_quotient_map(const Scalar& mu1sq, const Scalar& mu2sq, const Scalar& x) {
    const Scalar one(1);
    const Scalar c = (one - mu2sq) / (one - mu1sq);
    if (x.is_infinity()) return c;
    const Scalar den = x * x - mu2sq;
    if (den.is_zero()) return Scalar::infinity();
    return c * (x * x - mu1sq) / den;
}

/// lambda_1..lambda_g from mu_1..mu_g (inverse of mu_squares_from_lambdas).
inline std::vector<Scalar> lambdas_from_mus(const std::vector<Scalar>& mus) {
    const std::size_t g = mus.size();
    if (g < 2) throw InputError("the split needs g >= 2 parameters");
    const Scalar m1 = mus[0] * mus[0], m2 = mus[1] * mus[1];
    std::vector<Scalar> out;
    for (std::size_t j = 3; j <= g; ++j) out.push_back(split_quotient_map(m1, m2, mus[j - 1]));
    out.push_back(split_quotient_map(m1, m2, Scalar::infinity()));
    out.push_back(split_quotient_map(m1, m2, Scalar(0)));
    return out;
}

/// Images under P of the branch points +-1, +-mu_j and of the critical points 0, inf.
inline std::vector<Scalar> split_branch_images(const std::vector<Scalar>& mus) {
    const Scalar m1 = mus[0] * mus[0], m2 = mus[1] * mus[1];
    std::vector<Scalar> out;
    for (const Scalar& x : {Scalar(1), Scalar(-1)}) out.push_back(split_quotient_map(m1, m2, x));
    for (const auto& mu : mus)
        for (const Scalar& x : {mu, -mu}) out.push_back(split_quotient_map(m1, m2, x));
    out.push_back(split_quotient_map(m1, m2, Scalar::infinity()));
    out.push_back(split_quotient_map(m1, m2, Scalar(0)));
    return out;
}

/// T(x) = ((1 - mu_1)/2) (x + 1)/(x - mu_1): sends 1 -> 1, -1 -> 0, mu_1 -> inf.
inline Mobius split_normalizing_map(const Scalar& mu1) {
    const Scalar half = (Scalar(1) - mu1) / Scalar(2);
    return {half, half, Scalar(1), -mu1};
}

struct HyperellipticSplit {
    std::vector<Scalar> lambdas;
    std::vector<Scalar> mu_squares;
    std::vector<Scalar> mus;
    bool numeric = false;        ///< some root fell back to BigComplex
    HyperellipticModel model_c;  ///< the genus-g curve in the normalized model
    HyperellipticModel c1;       ///< quotient by tau
    HyperellipticModel c2;       ///< quotient by tau*iota
    std::string involution = kSplitInvolutionText;
};

inline HyperellipticSplit hyperelliptic_split_params(const std::vector<Scalar>& lambdas, long prec = kDefaultPrecision) {
    const std::size_t g = lambdas.size();
    HyperellipticSplit out;
    out.lambdas = lambdas;
    out.mu_squares = mu_squares_from_lambdas(lambdas);
    const long d = common_field(lambdas);
    for (const auto& sq : out.mu_squares) {
        RootResult r = exact_or_numeric_sqrt(sq, d, prec);
        out.numeric = out.numeric || r.numeric;
        out.mus.push_back(r.value);
    }
    if (out.numeric)
        for (auto& m : out.mus) m = Scalar(m.to_complex(prec));

    const Mobius t = split_normalizing_map(out.mus[0]);
    std::vector<Scalar> roots = {Scalar(0), Scalar(1), t(-out.mus[0])};
    for (std::size_t j = 1; j < g; ++j) {
        roots.push_back(t(out.mus[j]));
        roots.push_back(t(-out.mus[j]));
    }
    out.model_c = HyperellipticModel(roots);

    std::vector<Scalar> head(lambdas.begin(), lambdas.end() - 2);
    std::vector<Scalar> r1 = {Scalar(0), Scalar(1)}, r2 = {Scalar(0), Scalar(1)};
    if (g % 2 == 0) {
        r1.push_back(lambdas[g - 1]);
        r2.push_back(lambdas[g - 2]);
        r1.insert(r1.end(), head.begin(), head.end());
        r2.insert(r2.end(), head.begin(), head.end());
    } else {
        r1.insert(r1.end(), head.begin(), head.end());
        r2.insert(r2.end(), lambdas.begin(), lambdas.end());
    }
    out.c1 = HyperellipticModel(r1);
    out.c2 = HyperellipticModel(r2);
    return out;
}

// ============================================================================
// Genus-4 family
// ============================================================================

inline Scalar genus4_lambda21(const Scalar& l11, const Scalar& l12) {
    const Scalar num = Scalar(4) + Scalar(2) * l11 - Scalar(13) * l12 + Scalar(8) * l12.pow(2) - l12.pow(3);
    const Scalar den = Scalar(1) - Scalar(4) * l12 + Scalar(2) * l11 * l12 + l12.pow(2);
    if (den.is_zero()) throw InputError("lambda21 undefined: 1 - 4 l12 + 2 l11 l12 + l12^2 = 0");
    return (Scalar(-4) * l12 + num / den) / Scalar(2);
}

inline Scalar genus4_lambda22(const Scalar& l11, const Scalar& l12) {
    const Scalar num = Scalar(2) * l11 + l12 - Scalar(4) * l11 * l12 + l11.pow(2) * l12;
    const Scalar den = Scalar(1) - Scalar(4) * l11 + Scalar(2) * l11 * l12 + l11.pow(2);
    if (den.is_zero()) throw InputError("lambda22 undefined: 1 - 4 l11 + 2 l11 l12 + l11^2 = 0");
    return num / den;
}

/// rho_{1,j}, rho_{2,j}, rho_{3,j} of the genus-2 curve with parameters mu_{1,j}, mu_{2,j}.
inline std::array<Scalar, 3> genus2_rhos(const Scalar& m1, const Scalar& m2) {
    const Scalar one(1), half = (one - m1) / Scalar(2);
    return {-((one - m1).pow(2)) / (Scalar(4) * m1), half * (m2 + one) / (m2 - m1), half * (m2 - one) / (m2 + m1)};
}

struct RhoCheck {
    std::array<int, 4> signs{};  ///< signs of mu_{1,1}, mu_{2,1}, mu_{1,2}, mu_{2,2}
    bool rho11_eq_rho22 = false;
    bool rho21_eq_rho12 = false;
    bool holds() const { return rho11_eq_rho22 && rho21_eq_rho12; }
};

struct Genus4Family {
    Scalar l11, l12, l21, l22;
    std::vector<std::string> labels;         ///< C11, C12, C21, C22
    std::vector<Scalar> factor_lambdas;      ///< lambda12, lambda11, lambda22, lambda21
    std::vector<HyperellipticModel> factors; ///< y^2 = x(x-1)(x-lambda)
    std::array<Scalar, 2> mu1j, mu2j;        ///< mu_{1,j}, mu_{2,j}, j = 1, 2
    std::array<std::array<Scalar, 3>, 2> rho;
    std::vector<Scalar> big_lambdas;         ///< rho11, rho21, rho31, rho32
    std::optional<HyperellipticSplit> big_curve;
    std::string big_curve_error;
    std::vector<RhoCheck> rho_checks;        ///< all 16 sign choices
    bool numeric = false;

    bool rho_identity_some_sign() const {
        for (const auto& c : rho_checks)
            if (c.holds()) return true;
        return false;
    }
};

inline Genus4Family genus4_family(const Scalar& l11, const Scalar& l12, long prec = kDefaultPrecision) {
    const Scalar zero(0), one(1);
    auto degenerate = [&](const Scalar& x) { return x.is_infinity() || x.is_zero() || x == one; };
    if (l11.is_symbolic() || l12.is_symbolic()) throw UnsupportedModeError("genus4_family needs concrete parameters");
    if (degenerate(l11) || degenerate(l12)) throw InputError("lambda11 and lambda12 must avoid 0, 1 and infinity");
    if (l11 == l12) throw InputError("condition lambda11 != lambda12 violated");
    if (l11 * l12 == one) throw InputError("condition lambda11*lambda12 != 1 violated");

    Genus4Family f;
    f.l11 = l11;
    f.l12 = l12;
    f.l21 = genus4_lambda21(l11, l12);
    f.l22 = genus4_lambda22(l11, l12);
    if (degenerate(f.l21)) throw InputError("condition lambda21 not in {0,1} violated");
    if (degenerate(f.l22)) throw InputError("condition lambda22 not in {0,1} violated");
    if (f.l21 == l11) throw InputError("condition lambda21 != lambda11 violated");
    if (f.l22 == l12) throw InputError("condition lambda22 != lambda12 violated");

    f.labels = {"C11", "C12", "C21", "C22"};
    f.factor_lambdas = {l12, l11, f.l22, f.l21};
    for (const auto& l : f.factor_lambdas) f.factors.emplace_back(std::vector<Scalar>{zero, one, l});

    const long d = common_field({l11, l12, f.l21, f.l22});
    const std::array<Scalar, 2> l1 = {l11, l12}, l2 = {f.l21, f.l22};
    for (int j = 0; j < 2; ++j) {
        const Scalar m2sq = (l1[j] - one) / (l2[j] - one);
        const Scalar m1sq = (l2[j] / l1[j]) * m2sq;
        RootResult a = exact_or_numeric_sqrt(m1sq, d, prec);
        RootResult b = exact_or_numeric_sqrt(m2sq, d, prec);
        f.numeric = f.numeric || a.numeric || b.numeric;
        f.mu1j[j] = a.value;
        f.mu2j[j] = b.value;
    }
    if (f.numeric)
        for (int j = 0; j < 2; ++j) {
            f.mu1j[j] = Scalar(f.mu1j[j].to_complex(prec));
            f.mu2j[j] = Scalar(f.mu2j[j].to_complex(prec));
        }
    for (int j = 0; j < 2; ++j) f.rho[j] = genus2_rhos(f.mu1j[j], f.mu2j[j]);

    for (int mask = 0; mask < 16; ++mask) {
        RhoCheck c;
        for (int b = 0; b < 4; ++b) c.signs[b] = (mask >> b) & 1 ? -1 : 1;
        const auto r1 = genus2_rhos(f.mu1j[0] * Scalar(c.signs[0]), f.mu2j[0] * Scalar(c.signs[1]));
        const auto r2 = genus2_rhos(f.mu1j[1] * Scalar(c.signs[2]), f.mu2j[1] * Scalar(c.signs[3]));
        c.rho11_eq_rho22 = r1[0] == r2[1];
        c.rho21_eq_rho12 = r1[1] == r2[0];
        f.rho_checks.push_back(c);
    }

    f.big_lambdas = {f.rho[0][0], f.rho[0][1], f.rho[0][2], f.rho[1][2]};
    try {
        f.big_curve = hyperelliptic_split_params(f.big_lambdas, prec);
    } catch (const Error& e) {
        f.big_curve_error = e.what();
    }
    return f;
}

}  // namespace gfc
