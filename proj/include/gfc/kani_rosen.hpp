#pragma once

/**
 * @file kani_rosen.hpp
 * @brief Kani-Rosen splitting criterion for families of subgroups of H0.
 *
 * For subgroups H_1..H_s of the abelian group H0 (so H_i H_j = H_j H_i always
 * holds), with g_{ij} the genus of S/(H_i H_j) and g_{ii} = g_{H_i}:
 *   general form: weights n_i with sum n_i n_j g_ij = 0 and
 *                 sum_j n_j g_ij = 0 for every i;
 *   corollary:    g_ij = 0 for i < j and sum g_{H_i} = g(S).
 */

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gfc/error.hpp"
#include "gfc/genus.hpp"
#include "gfc/group.hpp"

namespace gfc {

struct Certificate {
    bool pass = false;
    bool pairwise_zero = false;
    bool sum_matches = false;
    std::int64_t genus_sum = 0;
    std::int64_t total_genus = 0;
    std::vector<std::int64_t> genera;                 ///< g_{H_i}
    std::vector<std::pair<int, int>> failing_pairs;   ///< 0-based (i, j), i < j, with g_ij > 0
    std::string message;
};

/// Genus of S itself for the group type of K (quotient by the trivial subgroup).
inline std::int64_t surface_genus(const GroupType& gt) { return total_genus(gt.k, gt.n); }

inline Certificate check_corollary(const std::vector<Subgroup>& subgroups) {
    Certificate c;
    if (subgroups.empty()) {
        c.message = "empty subgroup family";
        return c;
    }
    const GroupType gt = subgroups.front().type();
    for (const auto& h : subgroups)
        if (!(h.type() == gt)) throw InputError("subgroups of different groups in one certificate");
    c.total_genus = surface_genus(gt);
    for (const auto& h : subgroups) {
        c.genera.push_back(quotient_signature(h).genus);
        c.genus_sum += c.genera.back();
    }
    for (std::size_t i = 0; i < subgroups.size(); ++i)
        for (std::size_t j = i + 1; j < subgroups.size(); ++j) {
            const Subgroup prod = product(subgroups[i], subgroups[j]);
            if (prod.order() == gt.order()) continue;
            if (quotient_signature(prod).genus != 0) c.failing_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    c.pairwise_zero = c.failing_pairs.empty();
    c.sum_matches = c.genus_sum == c.total_genus;
    c.pass = c.pairwise_zero && c.sum_matches;
    std::ostringstream os;
    if (c.pass) {
        os << "pass: pairwise products have genus-0 quotients, genus sum " << c.genus_sum << " = " << c.total_genus;
    } else {
        os << "fail:";
        if (!c.pairwise_zero) {
            const auto [i, j] = c.failing_pairs.front();
            os << " " << c.failing_pairs.size() << " pair(s) with positive-genus quotient, first (" << i + 1 << ","
               << j + 1 << ");";
        }
        if (!c.sum_matches) os << " genus sum " << c.genus_sum << " != " << c.total_genus << ";";
    }
    c.message = os.str();
    return c;
}

struct GeneralCertificate {
    bool pass = false;
    bool condition_a = false;
    std::vector<bool> condition_b;
    std::vector<std::vector<std::int64_t>> genus_matrix;  ///< g_ij
    std::string statement;                                ///< the induced isogeny
};

inline GeneralCertificate check_general(const std::vector<Subgroup>& subgroups, const std::vector<long>& weights,
                                        const std::vector<std::string>& labels = {}) {
    if (subgroups.size() != weights.size()) throw InputError("one weight per subgroup is required");
    GeneralCertificate c;
    const std::size_t s = subgroups.size();
    c.genus_matrix.assign(s, std::vector<std::int64_t>(s, 0));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i; j < s; ++j) {
            if (weights[i] == 0 && weights[j] == 0) continue;
            const std::int64_t g =
                i == j ? quotient_signature(subgroups[i]).genus : quotient_signature(product(subgroups[i], subgroups[j])).genus;
            c.genus_matrix[i][j] = c.genus_matrix[j][i] = g;
        }
    mpz_class total = 0;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) total += mpz_class(weights[i]) * weights[j] * c.genus_matrix[i][j];
    c.condition_a = total == 0;
    bool all_b = true;
    for (std::size_t i = 0; i < s; ++i) {
        mpz_class row = 0;
        for (std::size_t j = 0; j < s; ++j) row += mpz_class(weights[j]) * c.genus_matrix[i][j];
        c.condition_b.push_back(row == 0);
        all_b = all_b && row == 0;
    }
    c.pass = c.condition_a && all_b;

    auto side = [&](int sign) {
        std::string out;
        for (std::size_t i = 0; i < s; ++i) {
            const long w = weights[i] * sign;
            if (w <= 0) continue;
            if (!out.empty()) out += " x ";
            out += "J(S/" + (i < labels.size() ? labels[i] : "H" + std::to_string(i + 1)) + ")";
            if (w != 1) out += "^" + std::to_string(w);
        }
        return out.empty() ? std::string("0") : out;
    };
    c.statement = side(1) + " ~ " + side(-1);
    return c;
}

/// Weights reducing the general criterion to the corollary: the family gets -1, the trivial group +1.
inline GeneralCertificate check_general_as_corollary(const std::vector<Subgroup>& subgroups) {
    if (subgroups.empty()) throw InputError("empty subgroup family");
    std::vector<Subgroup> fam = subgroups;
    fam.push_back(span(std::vector<GroupElement>{}, subgroups.front().type()));
    std::vector<long> w(subgroups.size(), -1);
    w.push_back(1);
    return check_general(fam, w);
}

}  // namespace gfc
