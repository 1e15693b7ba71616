#pragma once

/**
 * @file genus.hpp
 * @brief Genus counting identities and quotient orbifold signatures.
 *
 * Quotient signatures use the stabilizer model: every point of S lying over the
 * cone point b_j has stabilizer exactly <a_j>, there are k^(n-1) of them, and
 * the genus follows from the Riemann-Hurwitz relation between orbifold Euler
 * characteristics, evaluated in exact rationals.
 */

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gfc/error.hpp"
#include "gfc/group.hpp"

namespace gfc {

/// Orbifold signature (genus; cone orders with multiplicity).
struct Signature {
    std::int64_t genus = 0;
    std::map<int, std::int64_t> cones;  ///< order -> count, orders >= 2

    std::int64_t cone_count() const {
        std::int64_t c = 0;
        for (const auto& [o, n] : cones) c += n;
        return c;
    }

    mpq_class euler_characteristic() const {
        mpq_class chi = 2 - 2 * mpq_class(static_cast<long>(genus));
        for (const auto& [o, n] : cones) chi -= mpq_class(static_cast<long>(n)) * (1 - mpq_class(1, o));
        return chi;
    }

    /// "(4; 3^9)", "(1; 2^2)" or "(3; -)".
    std::string to_string() const {
        std::ostringstream os;
        os << '(' << genus << "; ";
        if (cones.empty()) os << '-';
        bool first = true;
        for (const auto& [o, n] : cones) {
            if (!first) os << ", ";
            first = false;
            os << o << '^' << n;
        }
        os << ')';
        return os.str();
    }

    friend bool operator==(const Signature&, const Signature&) = default;
};

inline mpz_class ipow(long base, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
    if (base < 0 && (e & 1)) r = -r;
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long r) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, r);
    return out;
}

inline std::int64_t to_int64(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p()) throw ResourceError(std::string(what) + " does not fit in 64 bits");
    return v.get_si();
}

/// phi(p, n) = p^(n-1) ((n-1) p - n - 1).
inline std::int64_t phi(int p, int n) {
    if (p < 2 || n < 2) throw InputError("phi needs p, n >= 2");
    return to_int64(ipow(p, n - 1) * ((n - 1) * p - n - 1), "phi");
}

/// Genus 1 + phi(p, n)/2 of a generalized Fermat curve of type (p, n).
inline std::int64_t total_genus(int p, int n) {
    const std::int64_t f = phi(p, n);
    if (f % 2 != 0) throw ConsistencyError("phi(" + std::to_string(p) + "," + std::to_string(n) + ") is odd");
    return 1 + f / 2;
}

/// Number of tuples (alpha_2..alpha_r) in {1..q-1} with sum = -1 mod q, closed form.
inline std::int64_t psi_closed(int q, int r) {
    if (q < 2 || r < 2) throw InputError("psi needs q, r >= 2");
    mpz_class v = ipow(1 - q, r - 1) - 1;
    if (mpz_divisible_ui_p(v.get_mpz_t(), q) == 0) throw ConsistencyError("psi closed form not integral");
    v /= q;
    if ((r + 1) % 2 != 0) v = -v;
    return to_int64(v, "psi");
}

inline constexpr std::uint64_t kPsiBruteforceLimit = 100'000'000;

/// Exhaustive count of the same tuples.
inline std::int64_t psi_bruteforce(int q, int r) {
    if (q < 2 || r < 2) throw InputError("psi needs q, r >= 2");
    const int len = r - 1;
    std::uint64_t space = 1;
    for (int i = 0; i < len; ++i) {
        space *= static_cast<std::uint64_t>(q - 1);
        if (space > kPsiBruteforceLimit)
            throw ResourceError("psi_bruteforce(" + std::to_string(q) + "," + std::to_string(r) +
                                ") exceeds the (q-1)^(r-1) <= 1e8 guard");
    }
    std::vector<int> a(len, 1);
    std::int64_t count = 0;
    int sum = len % q;
    while (true) {
        if (sum == q - 1) ++count;
        int i = len - 1;
        while (i >= 0 && a[i] == q - 1) {
            a[i] = 1;
            sum = mod(sum - (q - 2), q);
            --i;
        }
        if (i < 0) break;
        ++a[i];
        sum = (sum + 1) % q;
    }
    return count;
}

struct GenusSumIdentity {
    mpz_class lhs;
    mpz_class rhs;
    bool holds = false;
};

/// Smallest branch count giving a positive genus: 4 for q = 2, 3 otherwise.
inline int min_branch_count(int q) { return q == 2 ? 4 : 3; }

/// 1 + phi(q, n)/2 against sum_r C(n+1, r) (r-2)(q-1)/2 psi_q(r).
inline GenusSumIdentity genus_sum_identity(int q, int n) {
    if (n + 1 < min_branch_count(q)) throw InputError("genus_sum_identity needs n+1 >= r_q");
    GenusSumIdentity out;
    out.lhs = 1 + mpz_class(phi(q, n)) / 2;
    mpz_class twice = 0;
    for (int r = min_branch_count(q); r <= n + 1; ++r)
        twice += binomial(n + 1, r) * (r - 2) * (q - 1) * mpz_class(static_cast<long>(psi_closed(q, r)));
    out.rhs = twice / 2;
    out.holds = (twice % 2 == 0) && out.lhs == out.rhs;
    return out;
}

/// Signature of S/K for a subgroup K of H0, by the stabilizer model.
inline Signature quotient_signature(const Subgroup& K) {
    const GroupType& gt = K.type();
    const std::uint64_t order = K.order();
    const std::uint64_t fiber = gt.order() / static_cast<std::uint64_t>(gt.k);
    Signature sig;
    for (int j = 1; j <= gt.n + 1; ++j) {
        const int d = intersect_with_cyclic(K, j);
        if (d <= 1) continue;
        const std::uint64_t num = fiber * static_cast<std::uint64_t>(d);
        if (num % order != 0) throw ConsistencyError("non-integral cone count for generator a" + std::to_string(j));
        sig.cones[d] += static_cast<std::int64_t>(num / order);
    }
    const mpq_class base = 2 - mpq_class(gt.n + 1) * (1 - mpq_class(1, gt.k));
    const mpq_class chi = mpq_class(mpz_class(std::to_string(K.index()))) * base;
    mpq_class two_gamma = 2 - chi;
    for (const auto& [o, c] : sig.cones) two_gamma -= mpq_class(static_cast<long>(c)) * (1 - mpq_class(1, o));
    if (two_gamma.get_den() != 1 || two_gamma.get_num() % 2 != 0 || two_gamma < 0)
        throw ConsistencyError("quotient by " + K.label() + " has invalid genus " + mpq_class(two_gamma / 2).get_str());
    sig.genus = to_int64(two_gamma.get_num() / 2, "genus");
    return sig;
}

inline Signature quotient_signature(const Subgroup& K, const GroupType& gt) {
    if (!(K.type() == gt)) throw InputError("subgroup does not belong to the given group type");
    return quotient_signature(K);
}

/// Fast path for index-p kernels: genus (r-2)(p-1)/2 and p(n+1-r) cones of order p.
inline Signature hyperplane_signature(const Character& chi, const GroupType& gt) {
    if (!gt.prime_exponent()) throw UnsupportedModeError("hyperplane_signature needs a prime exponent");
    if (chi.modulus() != gt.k || chi.rank() != gt.n) throw InputError("character does not match group type");
    const int r = chi.support_size();
    Signature sig;
    sig.genus = static_cast<std::int64_t>(r - 2) * (gt.k - 1) / 2;
    const std::int64_t cones = static_cast<std::int64_t>(gt.k) * (gt.n + 1 - r);
    if (cones > 0) sig.cones[gt.k] = cones;
    return sig;
}

}  // namespace gfc
