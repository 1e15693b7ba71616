#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "gfc/gfc.hpp"

using namespace gfc;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
    bool known_gap = false;  ///< failing for a documented reason in the input data
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::map<std::int64_t, std::size_t> census(const Decomposition& d) {
    std::map<std::int64_t, std::size_t> c;
    for (const auto& f : d.factors) ++c[f.genus];
    return c;
}

Outcome psi_oracle() {
    int cases = 0;
    for (int q = 2; q <= 7; ++q)
        for (int r = 2; r <= 9; ++r) {
            if (psi_closed(q, r) != psi_bruteforce(q, r))
                return {false, "mismatch at q=" + std::to_string(q) + " r=" + std::to_string(r)};
            ++cases;
        }
    return {cases == 48, std::to_string(cases) + " cases agree"};
}

Outcome genus_identity() {
    int cases = 0;
    for (int q = 2; q <= 7; ++q)
        for (int n = 2; n + 1 <= 8; ++n) {
            if (n + 1 < min_branch_count(q)) continue;
            if (!genus_sum_identity(q, n).holds)
                return {false, "fails at q=" + std::to_string(q) + " n=" + std::to_string(n)};
            ++cases;
        }
    return {true, std::to_string(cases) + " cases hold"};
}

Outcome type_2_4() {
    const Scalar l1 = Scalar::symbol("l1"), l2 = Scalar::symbol("l2"), one(1);
    const auto sym = decompose_prime(2, 4, std::vector<Scalar>{l1, l2});
    if (sym.count_genus(1) != 5 || sym.factors.size() != 5 || !sym.certificate.pass) return {false, "symbolic census"};
    auto table = [&](const Scalar& a, const Scalar& b) {
        return std::vector<Scalar>{(b - one) / (a - one), b / a, b * (one - a) / (b - a), b, a};
    };
    for (const auto& want : table(l1, l2)) {
        int hits = 0;
        for (const auto& f : sym.factors) {
            const auto lam = elliptic_lambda(f.normalized);
            if (lam && *lam == want) ++hits;
        }
        if (hits != 1) return {false, "symbolic table entry " + want.to_string()};
    }
    const Scalar r1(2), r2(7);
    const auto rat = decompose_prime(2, 4, std::vector<Scalar>{r1, r2});
    if (rat.count_genus(1) != 5 || !rat.certificate.pass) return {false, "rational census"};
    std::multiset<Scalar> got, want;
    for (const auto& f : rat.factors) got.insert(*f.j);
    for (const auto& lam : table(r1, r2)) want.insert(j_invariant(lam));
    if (got != want) return {false, "rational j-values differ from the table"};
    return {true, "5 genus-1 factors, table matched symbolically and at (2,7)"};
}

Outcome type_2_5() {
    const std::vector<Scalar> l = {Scalar(2), Scalar(7), Scalar::rational(-5, 3)};
    const auto d = decompose_prime(2, 5, l);
    const bool ok_census = census(d) == std::map<std::int64_t, std::size_t>{{1, 15}, {2, 1}};
    const auto want = HyperellipticModel({Scalar(0), Scalar(1), l[0], l[1], l[2]}).as_pgonal();
    const bool ok_big = d.factors.back().genus == 2 && d.factors.back().curve.equation() == want.equation();
    const bool ok = ok_census && ok_big && d.factor_genus_sum() == 17 && d.certificate.pass;
    return {ok, "15 x genus 1 + " + d.factors.back().curve.equation() + ", sum " + std::to_string(d.factor_genus_sum())};
}

Outcome type_3_3() {
    const auto d = decompose_prime(3, 3, std::vector<Scalar>{Scalar::rational(7, 3)});
    bool ok = census(d) == std::map<std::int64_t, std::size_t>{{1, 4}, {2, 3}} && d.factor_genus_sum() == 10 &&
              d.certificate.pass;
    for (const auto& f : d.factors)
        if (f.genus == 2) ok = ok && f.curve.branch_count() == 4 && f.curve.degree() == 3;
    return {ok, "4 x genus 1 + 3 x genus 2 on the full branch set, total " + std::to_string(d.factor_genus_sum())};
}

Outcome type_3_4() {
    const auto d = decompose_prime(3, 4, std::vector<Scalar>{Scalar(2), Scalar(7)});
    const bool ok_census = census(d) == std::map<std::int64_t, std::size_t>{{1, 10}, {2, 15}, {3, 5}};
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
    for (const auto& t : std::vector<std::vector<int>>{{1, 2, 2, 2}, {2, 1, 1, 1}, {2, 2, 1, 2}, {2, 2, 2, 1}, {2, 2, 2, 2}})
        want.insert(key(t));
    for (const auto& f : d.factors) {
        if (f.genus != 3) continue;
        std::vector<int> e;
        for (const auto& t : f.curve.finite_terms()) e.push_back(t.exponent);
        got.insert(key(e));
    }
    const bool ok = ok_census && got == want && d.factor_genus_sum() == 55 && d.certificate.pass;
    return {ok, "10/15/5 factors, total genus " + std::to_string(d.factor_genus_sum())};
}

Outcome special_parameters() {
    const Scalar l1 = Scalar::quadratic(mpq_class(1, 2), mpq_class(-1, 2), 5);
    const Scalar l2 = Scalar::quadratic(mpq_class(-1, 2), mpq_class(-1, 2), 5);
    const auto golden = group_by_j(decompose_prime(2, 4, std::vector<Scalar>{l1, l2}));
    const auto generic = group_by_j(decompose_prime(2, 4, std::vector<Scalar>{Scalar(2), Scalar(7)}));
    const bool ok = golden.summary == "C1^5" && generic.classes.size() == 5;
    return {ok, "golden " + golden.summary + "; (2,7) gives " + std::to_string(generic.classes.size()) + " classes"};
}

Outcome exact_values() {
    bool ok = j_invariant(Scalar(-1)) == Scalar::rational(27, 4) && j_invariant(Scalar::rational(1, 5)) == Scalar::rational(9261, 400);
    const auto f = genus4_family(Scalar::quadratic(4, 1, 11), Scalar::quadratic(-3, -1, 11));
    ok = ok && f.l21 == Scalar::quadratic(mpq_class(3, 2), mpq_class(-1, 2), 11) &&
         f.l22 == Scalar::quadratic(mpq_class(1, 2), mpq_class(1, 2), 11);
    std::vector<std::pair<std::string, Scalar>> items;
    for (std::size_t i = 0; i < f.labels.size(); ++i) items.emplace_back(f.labels[i], j_invariant(f.factor_lambdas[i]));
    ok = ok && group_j_values(items).exponents() == std::vector<int>{3, 1};
    return {ok, "lambda21 = " + f.l21.to_string() + ", lambda22 = " + f.l22.to_string()};
}

Outcome round_trip() {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<long> num(2, 60), den(1, 9), sign(0, 1);
    const long prec = 256;
    const BigFloat tol = BigFloat::pow2(-100, prec);
    int done = 0;
    while (done < 20) {
        const std::size_t g = 2 + done % 5;
        std::vector<Scalar> mus, squares;
        while (mus.size() < g) {
            Scalar m = Scalar::rational(num(rng), den(rng));
            if (sign(rng)) m = -m;
            const Scalar sq = m * m;
            if (sq == Scalar(1) || std::find(squares.begin(), squares.end(), sq) != squares.end()) continue;
            squares.push_back(sq);
            mus.push_back(m);
        }
        std::vector<Scalar> lambdas;
        try {
            lambdas = lambdas_from_mus(mus);
            BranchSet::standard(lambdas);
        } catch (const InputError&) {
            continue;
        }
        if (mu_squares_from_lambdas(lambdas) != squares) return {false, "exact mismatch"};
        std::vector<Scalar> numeric;
        for (const auto& m : mus) numeric.emplace_back(m.to_complex(prec));
        const auto back = mu_squares_from_lambdas(lambdas_from_mus(numeric));
        for (std::size_t i = 0; i < g; ++i)
            if (!((back[i].to_complex(prec) - squares[i].to_complex(prec)).abs() < tol)) return {false, "numeric mismatch"};
        ++done;
    }
    return {true, "20 configurations, exact and 256-bit"};
}

Outcome fermat_examples() {
    const auto f4 = fermat_family(4);
    bool ok4 = f4.members.size() == 3 && f4.certificate.pass && f4.certificate.genus_sum == 3;
    for (const auto& m : f4.members) ok4 = ok4 && m.signature.to_string() == "(1; 2^2)";
    const auto f6 = fermat_family(6);
    const bool ok6 = f6.members.size() == 10 && !f6.certificate.pass;
    const auto f8 = fermat_family(8);
    std::size_t sig322 = 0;
    for (const auto& m : f8.members) sig322 += m.signature.to_string() == "(3; 2^2)";
    const bool ok8 = f8.members.size() == 7 && sig322 == 7 && f8.certificate.pass && f8.certificate.genus_sum == 21;
    std::string detail = std::string("k=4 ") + (ok4 ? "ok" : "FAIL") + "; k=6 fails as expected " + (ok6 ? "ok" : "FAIL") +
                         "; k=8 " + std::to_string(sig322) + " of 7 listed subgroups have (3; 2^2), genus sum " +
                         std::to_string(f8.certificate.genus_sum) + " of " + std::to_string(f8.certificate.total_genus);
    if (!ok8) {
        for (const auto& m : f8.members)
            if (m.signature.to_string() != "(3; 2^2)") detail += ", " + m.label + " = " + m.subgroup.label() + " has " + m.signature.to_string();
        detail += "; Z8^2 has only 6 cyclic-quotient kernels with (3; 2^2)";
    }
    return {ok4 && ok6 && ok8, detail, ok4 && ok6 && !ok8};
}

Outcome signature_engine() {
    int checked = 0;
    for (const auto& [p, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 3}, {3, 4}, {5, 2}, {5, 3}}) {
        const GroupType gt(p, n);
        for (const auto& chi : enumerate_hyperplanes(gt)) {
            if (!(hyperplane_signature(chi, gt) == quotient_signature(chi.kernel(gt))))
                return {false, "mismatch for " + chi.to_string()};
            ++checked;
        }
    }
    const auto u1 = quotient_signature(span(std::vector<std::string>{"a1", "a2*a3"}, GroupType(3, 4)));
    return {u1.to_string() == "(4; 3^9)", std::to_string(checked) + " hyperplanes agree; U1 gives " + u1.to_string()};
}

Outcome heptagon() {
    const BranchSet b = heptagonal_branch_set();
    const auto sym = symmetries_of_branch_set(b);
    const bool has7 = std::any_of(sym.begin(), sym.end(), [](const Mobius& m) { return m.order() == 7; });
    const auto d = decompose_prime(2, 6, b);
    const bool ok = has7 && census(d) == std::map<std::int64_t, std::size_t>{{1, 35}, {2, 7}} && d.factor_genus_sum() == 49;
    return {ok, std::to_string(sym.size()) + " symmetries, order 7 present " + (has7 ? "yes" : "no") + ", genus sum " +
                    std::to_string(d.factor_genus_sum())};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "counting oracle", 1.0, psi_oracle},
        {2, "genus-sum identity", 1.0, genus_identity},
        {3, "type (2,4) factors", 1.0, type_2_4},
        {4, "type (2,5) factors", 1.0, type_2_5},
        {5, "type (3,3) factors", 1.0, type_3_3},
        {6, "type (3,4) factors", 5.0, type_3_4},
        {7, "special parameters", 1.0, special_parameters},
        {8, "exact j-values and genus-4 family", 1.0, exact_values},
        {9, "split round trip", 5.0, round_trip},
        {10, "Fermat examples", 6.0, fermat_examples},
        {11, "signature engine", 5.0, signature_engine},
        {12, "heptagonal (2,6) example", 10.0, heptagon},
    };
    int unexpected = 0, known = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = o.pass && in_time;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3fs", secs);
        std::cout << (pass ? "PASS " : "FAIL ") << c.id << ": " << c.name << " (" << timing << ") " << o.detail;
        if (!in_time) std::cout << " [time limit " << c.limit_seconds << "s exceeded]";
        if (!pass && o.known_gap && in_time) std::cout << " [known gap in the listed subgroups]";
        std::cout << "\n";
        if (!pass) (o.known_gap && in_time ? known : unexpected) += 1;
    }
    std::cout << "summary: " << criteria.size() - static_cast<std::size_t>(unexpected + known) << " passed, " << known
              << " known gap, " << unexpected << " unexpected\n";
    return unexpected == 0 ? 0 : 1;
}
