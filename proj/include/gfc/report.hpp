#pragma once

/**
 * @file report.hpp
 * @brief JSON and plain-text renderings of the pipeline results.
 *
 * JSON uses insertion-ordered objects so identical exact inputs produce
 * byte-identical output.
 */

#include <sstream>
#include <string>
#include <vector>

#include "gfc/conjecture.hpp"
#include "gfc/decompose.hpp"
#include "gfc/genus.hpp"
#include "gfc/hyperelliptic.hpp"
#include "gfc/kani_rosen.hpp"
#include "json.hpp"

namespace gfc {

using Json = nlohmann::ordered_json;

inline Json scalar_json(const Scalar& s) { return s.to_string(); }

inline Json scalars_json(const std::vector<Scalar>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(scalar_json(x));
    return a;
}

inline Json branch_set_json(const BranchSet& b) {
    Json a = Json::array();
    for (std::size_t i = 0; i < b.size(); ++i) a.push_back(scalar_json(b[i]));
    return a;
}

inline Json certificate_json(const Certificate& c) {
    Json j;
    j["pass"] = c.pass;
    j["pairwise_zero"] = c.pairwise_zero;
    j["genus_sum"] = c.genus_sum;
    j["total_genus"] = c.total_genus;
    Json pairs = Json::array();
    for (const auto& [a, b] : c.failing_pairs) pairs.push_back({a + 1, b + 1});
    j["failing_pairs"] = pairs;
    j["message"] = c.message;
    return j;
}

inline Json to_json(const Decomposition& d) {
    Json j;
    j["type"] = {{"p", d.p}, {"n", d.n}};
    j["genus"] = d.genus_total;
    j["parameters"] = branch_set_json(d.parameters);
    Json factors = Json::array();
    for (const auto& f : d.factors) {
        Json x;
        x["label"] = f.label;
        x["equation"] = f.equation;
        x["genus"] = f.genus;
        x["multiplicity"] = f.multiplicity;
        x["j"] = f.j ? scalar_json(*f.j) : Json(nullptr);
        x["subgroup"] = f.subgroup_label;
        x["character"] = f.character.to_string();
        x["signature"] = f.signature.to_string();
        factors.push_back(std::move(x));
    }
    j["factors"] = factors;
    j["certificate"] = certificate_json(d.certificate);
    j["mode"] = d.mode;
    return j;
}

inline Json to_json(const JClassReport& r) {
    Json j;
    Json classes = Json::array();
    for (const auto& c : r.classes)
        classes.push_back({{"j", scalar_json(c.j)}, {"members", c.labels}, {"exponent", c.exponent()}});
    j["classes"] = classes;
    j["summary"] = r.summary;
    j["relation"] = "isomorphic over the algebraic closure (equal j)";
    return j;
}

inline std::string to_text(const Decomposition& d) {
    std::ostringstream os;
    os << "type (" << d.p << "," << d.n << "), genus " << d.genus_total << ", mode " << d.mode << "\n";
    os << "branch points:";
    for (std::size_t i = 0; i < d.parameters.size(); ++i) os << " " << d.parameters[i].to_string();
    os << "\n";
    for (const auto& f : d.factors) {
        os << f.label << "  genus " << f.genus << "  x" << f.multiplicity << "  " << f.equation;
        if (f.j) os << "  j = " << f.j->to_string();
        os << "  [" << f.subgroup_label << ", " << f.signature.to_string() << "]\n";
    }
    os << "certificate: " << d.certificate.message << "\n";
    return os.str();
}

inline Json to_json(const HyperellipticModel& m) {
    return {{"equation", m.equation()}, {"genus", m.genus()}, {"roots", scalars_json(m.roots())}};
}

inline Json to_json(const HyperellipticSplit& s) {
    Json j;
    j["genus"] = static_cast<std::int64_t>(s.lambdas.size());
    j["lambdas"] = scalars_json(s.lambdas);
    j["mu_squares"] = scalars_json(s.mu_squares);
    j["mus"] = scalars_json(s.mus);
    j["numeric"] = s.numeric;
    j["involution"] = s.involution;
    j["model"] = to_json(s.model_c);
    j["factors"] = Json::array({to_json(s.c1), to_json(s.c2)});
    return j;
}

inline Json to_json(const Genus4Family& f) {
    Json j;
    j["lambda11"] = scalar_json(f.l11);
    j["lambda12"] = scalar_json(f.l12);
    j["lambda21"] = scalar_json(f.l21);
    j["lambda22"] = scalar_json(f.l22);
    Json factors = Json::array();
    std::vector<std::pair<std::string, Scalar>> items;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        const Scalar jv = j_invariant(f.factor_lambdas[i]);
        items.emplace_back(f.labels[i], jv);
        factors.push_back({{"label", f.labels[i]},
                           {"equation", f.factors[i].equation()},
                           {"genus", f.factors[i].genus()},
                           {"j", scalar_json(jv)}});
    }
    j["factors"] = factors;
    j["j_classes"] = to_json(group_j_values(items));
    j["big_curve_lambdas"] = scalars_json(f.big_lambdas);
    if (f.big_curve) {
        j["big_curve"] = to_json(*f.big_curve);
    } else {
        j["big_curve"] = nullptr;
        j["big_curve_error"] = f.big_curve_error;
    }
    Json checks = Json::array();
    for (const auto& c : f.rho_checks)
        checks.push_back({{"signs", c.signs}, {"rho11_eq_rho22", c.rho11_eq_rho22}, {"rho21_eq_rho12", c.rho21_eq_rho12}});
    j["rho_identity_holds_for_some_sign"] = f.rho_identity_some_sign();
    j["rho_checks"] = checks;
    j["numeric"] = f.numeric;
    return j;
}

inline Json identities_json(int q, int n_max) {
    if (q < 2) throw InputError("identities need q >= 2");
    if (n_max + 1 < min_branch_count(q)) throw InputError("n-max too small for q = " + std::to_string(q));
    Json j;
    j["q"] = q;
    Json psi = Json::array();
    for (int r = 2; r <= n_max + 1; ++r) {
        Json row;
        row["r"] = r;
        row["psi_closed"] = psi_closed(q, r);
        try {
            const std::int64_t b = psi_bruteforce(q, r);
            row["psi_bruteforce"] = b;
            row["status"] = b == psi_closed(q, r) ? "OK" : "MISMATCH";
        } catch (const ResourceError&) {
            row["psi_bruteforce"] = nullptr;
            row["status"] = "SKIPPED";
        }
        psi.push_back(std::move(row));
    }
    j["psi"] = psi;
    Json sums = Json::array();
    for (int n = std::max(2, min_branch_count(q) - 1); n <= n_max; ++n) {
        const auto id = genus_sum_identity(q, n);
        sums.push_back({{"n", n}, {"lhs", id.lhs.get_str()}, {"rhs", id.rhs.get_str()}, {"status", id.holds ? "OK" : "MISMATCH"}});
    }
    j["genus_sum"] = sums;
    return j;
}

inline Json to_json(const FermatFamily& f) {
    Json j;
    j["type"] = {{"k", f.k}, {"n", 2}};
    Json members = Json::array();
    for (const auto& m : f.members)
        members.push_back({{"label", m.label}, {"subgroup", m.subgroup.label()}, {"signature", m.signature.to_string()}});
    j["subgroups"] = members;
    j["certificate"] = certificate_json(f.certificate);
    j["mode"] = f.mode;
    return j;
}

inline Json to_json(const std::vector<ScanEntry>& scan) {
    Json a = Json::array();
    for (const auto& e : scan) {
        Json x;
        x["subgroup"] = e.label;
        if (e.character) x["character"] = e.character->to_string();
        x["signature"] = e.signature.to_string();
        x["genus"] = e.signature.genus;
        a.push_back(std::move(x));
    }
    return a;
}

inline Json to_json(const ConjecturalEnumeration& c) {
    Json j;
    j["type"] = {{"k", c.k}, {"n", c.n}};
    j["parameters"] = branch_set_json(c.parameters);
    j["symmetry_reduced"] = c.symmetry_reduced;
    j["symmetry_count"] = c.symmetry_count;
    Json u = Json::object(), a = Json::object();
    for (const auto& [r, tuples] : c.unit_tuples) u[std::to_string(r)] = tuples;
    for (const auto& [r, classes] : c.subset_classes) {
        Json cls = Json::array();
        for (const auto& s : classes) cls.push_back({{"subset", s.representative}, {"orbit_size", s.orbit_size}});
        a[std::to_string(r)] = cls;
    }
    j["unit_tuples"] = u;
    j["subset_classes"] = a;
    Json cands = Json::array();
    for (const auto& f : c.candidates)
        cands.push_back({{"equation", f.equation},
                         {"genus", f.genus},
                         {"subset", f.subset},
                         {"exponents", f.exponents},
                         {"subset_class", f.subset_class},
                         {"reducible", f.reducible},
                         {"gcd", f.gcd}});
    j["candidates"] = cands;
    j["mode"] = c.mode;
    return j;
}

namespace detail {

inline void render_text(const Json& j, std::ostringstream& os, int indent) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured()) {
                os << pad << k << ":\n";
                render_text(v, os, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_object(); });
        if (flat) {
            os << pad << j.dump() << "\n";
            return;
        }
        for (const auto& e : j) {
            os << pad << "-\n";
            render_text(e, os, indent + 2);
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace detail

/// Indented key: value rendering of any report.
inline std::string json_to_text(const Json& j) {
    std::ostringstream os;
    detail::render_text(j, os, 0);
    return os.str();
}

}  // namespace gfc
