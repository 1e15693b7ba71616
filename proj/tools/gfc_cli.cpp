// gfc: command-line front end for the generalized Fermat curve toolkit.
//
// Exit codes: 0 success, 2 input error (bad syntax, degenerate parameters,
// unsupported mode, resource guard), 3 certificate or consistency failure.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gfc/gfc.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCertificate = 3;

struct Common {
    std::string format = "text";
    long precision = gfc::kDefaultPrecision;
    std::string output;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--precision", c.precision, "Bits of precision for numeric values")->check(CLI::Range(32L, 1L << 20));
    cmd->add_option("--output", c.output, "Write the report to this file instead of standard output");
}

void emit(const Common& c, const gfc::Json& json, const std::string& text) {
    const std::string body = c.format == "json" ? json.dump(2) + "\n" : text;
    if (c.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw gfc::InputError("cannot open output file " + c.output);
    out << body;
}

std::vector<gfc::Scalar> parse_scalars(const std::vector<std::string>& texts, long prec) {
    std::vector<gfc::Scalar> out;
    for (const auto& t : texts) out.push_back(gfc::parse_scalar(t, prec));
    return out;
}

gfc::BranchSet branch_set_for(int n, const std::vector<gfc::Scalar>& lambdas) {
    if (static_cast<int>(lambdas.size()) != n - 2)
        throw gfc::InputError("n = " + std::to_string(n) + " needs " + std::to_string(n - 2) + " --lambda values, got " +
                              std::to_string(lambdas.size()));
    return gfc::BranchSet::standard(lambdas);
}

std::vector<gfc::Subgroup> parse_subgroups(const std::vector<std::string>& specs, const gfc::GroupType& gt) {
    std::vector<gfc::Subgroup> out;
    for (const auto& spec : specs) {
        std::vector<std::string> gens;
        std::string cur;
        for (char ch : spec) {
            if (ch == ',') {
                gens.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        gens.push_back(cur);
        out.push_back(gfc::span(gens, gt));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobian decompositions of generalized Fermat curves"};
    app.require_subcommand(1);

    Common common;
    int p = 0, n = 0, q = 0, n_max = 0;
    std::vector<std::string> lambda_texts, subgroup_specs;
    std::vector<long> weights;
    std::string l11_text, l12_text, family;
    bool named = false;

    auto* decompose = app.add_subcommand("decompose", "Decompose a type (p, n) curve, p prime");
    decompose->add_option("--p,--k", p, "Prime exponent")->required();
    decompose->add_option("--n", n, "Rank")->required();
    decompose->add_option("--lambda", lambda_texts, "Branch parameter (repeatable, in order)");
    add_common(decompose, common);

    auto* verify = app.add_subcommand("verify", "Check the pairwise Kani-Rosen criterion for a subgroup family");
    verify->add_option("--k,--p", p, "Exponent")->required();
    verify->add_option("--n", n, "Rank")->default_val(2);
    verify->add_option("--family", family, "Built-in Fermat family")->check(CLI::IsMember({"F4", "F6", "F8"}));
    verify->add_option("--subgroup", subgroup_specs, "Subgroup as comma-separated generators, e.g. a1*a2^-1,a1^3");
    verify->add_option("--weight", weights, "Integer weight per subgroup (general criterion)");
    add_common(verify, common);

    auto* enumerate = app.add_subcommand("enumerate", "List index-k quotients with their signatures");
    enumerate->add_option("--p,--k", p, "Exponent")->required();
    enumerate->add_option("--n", n, "Rank")->required();
    enumerate->add_flag("--named", named, "Named p = 2 families instead (n >= 6)");
    add_common(enumerate, common);

    auto* hyper = app.add_subcommand("hyperelliptic", "Split a hyperelliptic curve with an extra involution");
    hyper->add_option("--lambda", lambda_texts, "lambda_1 .. lambda_g")->required();
    add_common(hyper, common);

    auto* genus4 = app.add_subcommand("genus4", "Genus-4 family from lambda11, lambda12");
    genus4->add_option("--l11", l11_text, "lambda_{1,1}")->required();
    genus4->add_option("--l12", l12_text, "lambda_{1,2}")->required();
    add_common(genus4, common);

    auto* identities = app.add_subcommand("identities", "Counting and genus-sum identity checks");
    identities->add_option("--q", q, "Exponent")->required();
    identities->add_option("--n-max", n_max, "Largest rank")->required();
    add_common(identities, common);

    auto* conjecture = app.add_subcommand("conjecture", "Candidate factors for any k (conjectural)");
    conjecture->add_option("--k,--p", p, "Exponent")->required();
    conjecture->add_option("--n", n, "Rank")->required();
    conjecture->add_option("--lambda", lambda_texts, "Branch parameter (repeatable, in order)");
    add_common(conjecture, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (decompose->parsed()) {
            const auto lambdas = parse_scalars(lambda_texts, common.precision);
            const auto dec = gfc::decompose_prime(p, n, branch_set_for(n, lambdas));
            gfc::Json j = gfc::to_json(dec);
            std::string text = gfc::to_text(dec);
            if (!dec.parameters.is_symbolic() && dec.count_genus(1) > 0) {
                const auto classes = gfc::group_by_j(dec);
                j["j_classes"] = gfc::to_json(classes);
                text += "elliptic factors up to isomorphism: " + classes.summary + "\n";
            }
            emit(common, j, text);
            return 0;
        }
        if (verify->parsed()) {
            std::vector<gfc::Subgroup> subgroups;
            std::vector<std::string> labels;
            if (!family.empty()) {
                if (n != 2) throw gfc::InputError("--family needs n = 2");
                const int k = std::stoi(family.substr(1));
                if (k != p) throw gfc::InputError("--family " + family + " needs --k " + std::to_string(k));
                for (const auto& m : gfc::fermat_family(k).members) {
                    subgroups.push_back(m.subgroup);
                    labels.push_back(m.label);
                }
            } else if (!subgroup_specs.empty()) {
                subgroups = parse_subgroups(subgroup_specs, gfc::GroupType(p, n));
            } else {
                const gfc::GroupType gt(p, n);
                for (const auto& chi : gfc::enumerate_hyperplanes(gt))
                    if (gfc::hyperplane_signature(chi, gt).genus > 0) subgroups.push_back(chi.kernel(gt));
            }
            if (labels.empty())
                for (std::size_t i = 0; i < subgroups.size(); ++i) labels.push_back("H" + std::to_string(i + 1));
            gfc::Json j;
            j["type"] = {{"k", p}, {"n", n}};
            gfc::Json members = gfc::Json::array();
            for (std::size_t i = 0; i < subgroups.size(); ++i)
                members.push_back({{"label", labels[i]},
                                   {"subgroup", subgroups[i].label()},
                                   {"signature", gfc::quotient_signature(subgroups[i]).to_string()}});
            j["subgroups"] = members;
            bool pass = false;
            if (!weights.empty()) {
                const auto cert = gfc::check_general(subgroups, weights, labels);
                pass = cert.pass;
                j["general"] = {{"pass", cert.pass},
                                {"condition_a", cert.condition_a},
                                {"condition_b", cert.condition_b},
                                {"genus_matrix", cert.genus_matrix},
                                {"statement", cert.statement}};
            } else {
                const auto cert = gfc::check_corollary(subgroups);
                pass = cert.pass;
                j["certificate"] = gfc::certificate_json(cert);
            }
            emit(common, j, gfc::json_to_text(j));
            return pass ? 0 : kExitCertificate;
        }
        if (enumerate->parsed()) {
            gfc::Json j;
            j["type"] = {{"k", p}, {"n", n}};
            if (named) {
                if (p != 2) throw gfc::InputError("--named needs p = 2");
                gfc::Json fam = gfc::Json::array();
                for (const auto& s : gfc::named_family_subgroups(n))
                    fam.push_back({{"family", s.j},
                                   {"label", s.label},
                                   {"index_set", s.tuple},
                                   {"subgroup", s.subgroup.label()},
                                   {"character", s.character.canonical().to_string()},
                                   {"genus", s.genus}});
                j["named_subgroups"] = fam;
            } else {
                j["quotients"] = gfc::to_json(gfc::scan_cyclic_quotients(p, n));
            }
            emit(common, j, gfc::json_to_text(j));
            return 0;
        }
        if (hyper->parsed()) {
            const auto split = gfc::hyperelliptic_split_params(parse_scalars(lambda_texts, common.precision), common.precision);
            const gfc::Json j = gfc::to_json(split);
            emit(common, j, gfc::json_to_text(j));
            return 0;
        }
        if (genus4->parsed()) {
            const auto fam = gfc::genus4_family(gfc::parse_scalar(l11_text, common.precision),
                                                gfc::parse_scalar(l12_text, common.precision), common.precision);
            const gfc::Json j = gfc::to_json(fam);
            emit(common, j, gfc::json_to_text(j));
            return 0;
        }
        if (identities->parsed()) {
            const gfc::Json j = gfc::identities_json(q, n_max);
            emit(common, j, gfc::json_to_text(j));
            bool ok = true;
            for (const auto& row : j["psi"]) ok = ok && row["status"] != "MISMATCH";
            for (const auto& row : j["genus_sum"]) ok = ok && row["status"] == "OK";
            return ok ? 0 : kExitCertificate;
        }
        if (conjecture->parsed()) {
            const auto lambdas = parse_scalars(lambda_texts, common.precision);
            const auto res = gfc::conjectural_enumeration(p, n, branch_set_for(n, lambdas));
            const gfc::Json j = gfc::to_json(res);
            emit(common, j, gfc::json_to_text(j));
            return 0;
        }
    } catch (const gfc::ConsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCertificate;
    } catch (const gfc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
