#pragma once

/**
 * @file curves.hpp
 * @brief Curve value objects: the fiber-product Fermat model, cyclic p-gonal
 *        quotient curves and hyperelliptic models, with their printers.
 */

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gfc/error.hpp"
#include "gfc/genus.hpp"
#include "gfc/group.hpp"
#include "gfc/mobius.hpp"
#include "gfc/scalar.hpp"

namespace gfc {

namespace detail {

/// Printed form of a point inside an equation factor.
inline std::string point_text(const Scalar& s) {
    if (s.is_symbolic()) return s.as_symbolic().f.to_string();
    return s.to_string();
}

/// "x", "(x-1)", "(x+3)", "(x-7/3)", "(x-(1/2+1*sqrt(5)))".
inline std::string linear_factor(const Scalar& s) {
    if (s.is_zero()) return "x";
    if (s.is_rational()) {
        const mpq_class& q = s.as_rational();
        return q < 0 ? "(x+" + mpq_class(-q).get_str() + ")" : "(x-" + q.get_str() + ")";
    }
    const std::string t = point_text(s);
    const bool simple = t.find_first_of("+-*/ ") == std::string::npos;
    return simple ? "(x-" + t + ")" : "(x-(" + t + "))";
}

}  // namespace detail

/// C^p(lambda_1..lambda_{n-2}) as n-1 Fermat relations in P^n.
struct FermatModel {
    int p = 2;
    int n = 2;
    std::vector<Scalar> lambdas;
    std::vector<std::string> equations;
    std::int64_t genus = 0;
};

inline FermatModel build_fermat_model(int p, int n, const std::vector<Scalar>& lambdas) {
    if (p < 2 || n < 2) throw InputError("Fermat model needs p, n >= 2");
    if (static_cast<int>(lambdas.size()) != n - 2)
        throw InputError("type (" + std::to_string(p) + "," + std::to_string(n) + ") needs " + std::to_string(n - 2) +
                         " parameters, got " + std::to_string(lambdas.size()));
    BranchSet::standard(lambdas);
    FermatModel m;
    m.p = p;
    m.n = n;
    m.lambdas = lambdas;
    const std::string e = "^" + std::to_string(p);
    m.equations.push_back("x1" + e + " + x2" + e + " + x3" + e + " = 0");
    for (int i = 0; i < n - 2; ++i) {
        std::string coeff = detail::point_text(lambdas[i]);
        if (coeff.find_first_of("+-/ ") != std::string::npos) coeff = "(" + coeff + ")";
        m.equations.push_back(coeff + "*x1" + e + " + x2" + e + " + x" + std::to_string(i + 4) + e + " = 0");
    }
    m.genus = total_genus(p, n);
    return m;
}

struct BranchTerm {
    Scalar point;
    int exponent = 1;
    friend bool operator==(const BranchTerm&, const BranchTerm&) = default;
};

/**
 * y^k = prod (x - mu_j)^alpha_j over the finite branched points. The term at
 * infinity, if branched, is kept so that the exponent sum is checkable, and is
 * omitted by the printer. k is prime for the theorem pipeline and may be
 * composite in the conjectural mode.
 */
class PGonalCurve {
public:
    PGonalCurve() = default;
    PGonalCurve(int k, std::vector<BranchTerm> terms) : k_(k), terms_(std::move(terms)) {
        for (auto& t : terms_) {
            t.exponent = mod(t.exponent, k_);
            if (t.exponent == 0) throw InputError("branch exponent divisible by the degree");
        }
        long sum = 0;
        for (const auto& t : terms_) sum += t.exponent;
        if (sum % k_ != 0) throw ConsistencyError("branch exponents do not sum to 0 mod " + std::to_string(k_));
    }

    int degree() const { return k_; }
    const std::vector<BranchTerm>& terms() const { return terms_; }
    int branch_count() const { return static_cast<int>(terms_.size()); }

    bool infinity_branched() const {
        return std::any_of(terms_.begin(), terms_.end(), [](const BranchTerm& t) { return t.point.is_infinity(); });
    }
    int infinity_exponent() const {
        for (const auto& t : terms_)
            if (t.point.is_infinity()) return t.exponent;
        return 0;
    }
    std::vector<BranchTerm> finite_terms() const {
        std::vector<BranchTerm> out;
        for (const auto& t : terms_)
            if (!t.point.is_infinity()) out.push_back(t);
        return out;
    }
    std::vector<int> exponents() const {
        std::vector<int> v;
        for (const auto& t : terms_) v.push_back(t.exponent);
        return v;
    }

    /// gcd(k, all exponents) > 1: the equation defines a reducible curve.
    bool is_reducible() const {
        int g = k_;
        for (const auto& t : terms_) g = std::gcd(g, t.exponent);
        return g > 1;
    }

    /// Genus of the normalization, 1 - k + sum (k - gcd(k, alpha_j))/2 (irreducible case).
    std::int64_t genus() const {
        long twice = 2 - 2L * k_;
        for (const auto& t : terms_) twice += k_ - std::gcd(k_, t.exponent);
        return twice / 2;
    }

    PGonalCurve scaled(int u) const {
        std::vector<BranchTerm> t = terms_;
        for (auto& x : t) x.exponent = mod(static_cast<long>(u) * x.exponent, k_);
        return {k_, std::move(t)};
    }

    /// "y^3 = (x)^1*(x-1)^2*(x-7/3)^2".
    std::string equation() const {
        std::ostringstream os;
        os << "y^" << k_ << " = ";
        bool first = true;
        for (const auto& t : terms_) {
            if (t.point.is_infinity()) continue;
            if (!first) os << '*';
            first = false;
            std::string f = detail::linear_factor(t.point);
            if (f == "x") f = "(x)";
            os << f << '^' << t.exponent;
        }
        if (first) os << '1';
        return os.str();
    }

    friend bool operator==(const PGonalCurve&, const PGonalCurve&) = default;

private:
    int k_ = 2;
    std::vector<BranchTerm> terms_;
};

/**
 * Quotient curve S/ker(chi) over the branch set B = (b_1..b_{n+1}). Exponents
 * are u*chi(a_j); the unit u makes the exponent at infinity 1 when infinity is
 * branched, and the first exponent 1 otherwise.
 */
inline PGonalCurve pgonal_from_character(const Character& chi, const BranchSet& b) {
    const int p = chi.modulus();
    if (!is_prime(p)) throw UnsupportedModeError("pgonal_from_character needs a prime modulus");
    if (static_cast<int>(b.size()) != chi.rank() + 1)
        throw InputError("branch set has " + std::to_string(b.size()) + " points, expected " +
                         std::to_string(chi.rank() + 1));
    const int r = chi.support_size();
    if ((r - 2) * (p - 1) < 2) throw DomainError("character " + chi.to_string() + " has a genus-0 quotient");
    std::vector<BranchTerm> terms;
    for (int j = 1; j <= chi.rank() + 1; ++j)
        if (const int v = chi.value(j); v != 0) terms.push_back({b[j - 1], v});
    int pivot = terms.front().exponent;
    for (const auto& t : terms)
        if (t.point.is_infinity()) pivot = t.exponent;
    int u = 1;
    while (mod(static_cast<long>(u) * pivot, p) != 1) ++u;
    PGonalCurve c = PGonalCurve(p, std::move(terms)).scaled(u);

    // Normalization conditions: finite exponents sum to p-1 when infinity is
    // branched, otherwise the first exponent is 1.
    long finite_sum = 0;
    for (const auto& t : c.finite_terms()) finite_sum += t.exponent;
    if (c.infinity_branched() ? mod(finite_sum, p) != p - 1 : c.terms().front().exponent != 1)
        throw ConsistencyError("normalization conditions violated for " + chi.to_string());
    return c;
}

/// Same exponents on the transformed points.
inline PGonalCurve renormalize_branches(const PGonalCurve& c, const Mobius& t) {
    std::vector<BranchTerm> terms;
    for (const auto& term : c.terms()) {
        Scalar img = t(term.point);
        for (const auto& done : terms)
            if (done.point == img) throw InputError("Möbius map collapses branch points onto " + img.to_string());
        terms.push_back({std::move(img), term.exponent});
    }
    return {c.degree(), std::move(terms)};
}

/// Lexicographically smallest exponent vector among the unit multiples.
inline PGonalCurve minimal_unit_scaling(const PGonalCurve& c) {
    PGonalCurve best = c;
    for (int u = 2; u < c.degree(); ++u) {
        if (std::gcd(u, c.degree()) != 1) continue;
        PGonalCurve s = c.scaled(u);
        if (s.exponents() < best.exponents()) best = std::move(s);
    }
    return best;
}

struct NormalizedCurve {
    PGonalCurve curve;
    Mobius map;
};

/**
 * Standard presentation of a factor: the first three branched points (infinity
 * first, then branch-set order) go to (inf, 0, 1) when infinity is branched
 * and to (0, 1, inf) otherwise; exponents are then scaled to the minimal unit
 * multiple.
 */
inline NormalizedCurve standard_form(const PGonalCurve& c) {
    if (c.branch_count() < 3) return {minimal_unit_scaling(c), Mobius::identity()};
    std::vector<BranchTerm> ordered;
    for (const auto& t : c.terms())
        if (t.point.is_infinity()) ordered.push_back(t);
    for (const auto& t : c.terms())
        if (!t.point.is_infinity()) ordered.push_back(t);
    const std::vector<Scalar> src = {ordered[0].point, ordered[1].point, ordered[2].point};
    const std::vector<Scalar> dst = c.infinity_branched()
                                        ? std::vector<Scalar>{Scalar::infinity(), Scalar(0), Scalar(1)}
                                        : std::vector<Scalar>{Scalar(0), Scalar(1), Scalar::infinity()};
    const Mobius t = mobius_from_triple(src, dst);
    PGonalCurve moved = renormalize_branches(PGonalCurve(c.degree(), ordered), t);
    return {minimal_unit_scaling(moved), t};
}

/// y^2 = prod (x - root) over distinct finite roots.
class HyperellipticModel {
public:
    HyperellipticModel() = default;
    explicit HyperellipticModel(std::vector<Scalar> roots) : roots_(std::move(roots)) {
        for (std::size_t i = 0; i < roots_.size(); ++i) {
            if (roots_[i].is_infinity()) throw InputError("hyperelliptic roots must be finite");
            for (std::size_t j = i + 1; j < roots_.size(); ++j)
                if (!roots_[i].is_symbolic() && roots_[i] == roots_[j])
                    throw InputError("repeated hyperelliptic root " + roots_[i].to_string());
        }
    }

    const std::vector<Scalar>& roots() const { return roots_; }
    std::int64_t genus() const {
        const long r = static_cast<long>(roots_.size());
        return r <= 2 ? 0 : (r - 2 + 1) / 2;
    }

    /// "y^2 = x*(x-1)*(x-7)".
    std::string equation() const {
        std::string out = "y^2 = ";
        for (std::size_t i = 0; i < roots_.size(); ++i) {
            if (i) out += "*";
            out += detail::linear_factor(roots_[i]);
        }
        return roots_.empty() ? out + "1" : out;
    }

    /// Roots as a branch set of a degree-2 p-gonal curve (infinity added for odd counts).
    PGonalCurve as_pgonal() const {
        std::vector<BranchTerm> t;
        if (roots_.size() % 2) t.push_back({Scalar::infinity(), 1});
        for (const auto& r : roots_) t.push_back({r, 1});
        return {2, std::move(t)};
    }

private:
    std::vector<Scalar> roots_;
};

}  // namespace gfc
