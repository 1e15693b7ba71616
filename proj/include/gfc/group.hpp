#pragma once

/**
 * @file group.hpp
 * @brief The generalized Fermat group H0 = Z_k^n, its subgroups and characters.
 *
 * Elements are exponent vectors with respect to the standard generators
 * a_1, ..., a_n. The extra standard generator a_{n+1} is the inverse product
 * a_1^{-1} ... a_n^{-1}, i.e. the vector with every coordinate k - 1, so that
 * a_1 a_2 ... a_{n+1} = 1.
 *
 * Subgroups are stored fully enumerated (sorted mixed-radix codes). This is
 * uniform for prime and composite k and cheap at desk scale; the group order
 * is guarded by max_group_order().
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gfc/error.hpp"

namespace gfc {

inline constexpr std::uint64_t kDefaultMaxGroupOrder = 20'000'000;

/// Resource guard on k^n; the environment variable GFC_MAX_GROUP_ORDER overrides it.
inline std::uint64_t max_group_order() {
    if (const char* env = std::getenv("GFC_MAX_GROUP_ORDER")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultMaxGroupOrder;
}

inline bool is_prime(long v) {
    if (v < 2) return false;
    for (long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline int mod(long a, int k) {
    const long r = a % k;
    return static_cast<int>(r < 0 ? r + k : r);
}

/// Exponent k >= 2 (the prime p when prime) and rank n >= 2.
struct GroupType {
    int k = 2;
    int n = 2;

    GroupType() = default;
    GroupType(int k_, int n_) : k(k_), n(n_) {
        if (k < 2) throw InputError("group exponent k must be >= 2, got " + std::to_string(k));
        if (n < 2) throw InputError("group rank n must be >= 2, got " + std::to_string(n));
        const std::uint64_t limit = max_group_order();
        std::uint64_t ord = 1;
        for (int i = 0; i < n; ++i) {
            ord *= static_cast<std::uint64_t>(k);
            if (ord > limit)
                throw ResourceError("group order " + std::to_string(k) + "^" + std::to_string(n) +
                                    " exceeds the limit " + std::to_string(limit) +
                                    " (set GFC_MAX_GROUP_ORDER to raise it)");
        }
    }

    std::uint64_t order() const {
        std::uint64_t ord = 1;
        for (int i = 0; i < n; ++i) ord *= static_cast<std::uint64_t>(k);
        return ord;
    }

    bool prime_exponent() const { return is_prime(k); }

    friend bool operator==(const GroupType&, const GroupType&) = default;
};

class GroupElement {
public:
    GroupElement() = default;
    GroupElement(std::vector<int> exponents, int k) : k_(k), exps_(std::move(exponents)) {
        for (int& e : exps_) e = mod(e, k_);
    }

    static GroupElement identity(const GroupType& gt) { return {std::vector<int>(gt.n, 0), gt.k}; }

    /// Standard generator a_j, 1 <= j <= n+1.
    static GroupElement generator(const GroupType& gt, int j) {
        if (j < 1 || j > gt.n + 1)
            throw InputError("generator index " + std::to_string(j) + " outside 1.." +
                             std::to_string(gt.n + 1));
        if (j == gt.n + 1) return {std::vector<int>(gt.n, gt.k - 1), gt.k};
        std::vector<int> e(gt.n, 0);
        e[j - 1] = 1;
        return {std::move(e), gt.k};
    }

    int k() const { return k_; }
    int rank() const { return static_cast<int>(exps_.size()); }
    const std::vector<int>& exponents() const { return exps_; }
    bool is_identity() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
    }

    GroupElement operator+(const GroupElement& o) const {
        check_compatible(o);
        std::vector<int> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
        return {std::move(e), k_};
    }
    GroupElement operator-() const {
        std::vector<int> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = -exps_[i];
        return {std::move(e), k_};
    }
    GroupElement operator-(const GroupElement& o) const { return *this + (-o); }
    GroupElement scaled(long m) const {
        std::vector<int> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = mod(m * exps_[i], k_);
        return {std::move(e), k_};
    }

    /// Additive order of the element in Z_k^n.
    int order() const {
        int ord = 1;
        for (int e : exps_) {
            if (e == 0) continue;
            const int o = k_ / std::gcd(e, k_);
            ord = std::lcm(ord, o);
        }
        return ord;
    }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement& a, const GroupElement& b) { return a.exps_ <=> b.exps_; }

    /// Canonical full form "a1^e1*a2^e2*...*an^en".
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (i) os << '*';
            os << 'a' << (i + 1) << '^' << exps_[i];
        }
        return os.str();
    }

    /// Compact form skipping zero exponents, "1" for the identity.
    std::string short_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!first) os << '*';
            first = false;
            os << 'a' << (i + 1);
            if (exps_[i] != 1) os << '^' << exps_[i];
        }
        return first ? "1" : os.str();
    }

private:
    void check_compatible(const GroupElement& o) const {
        if (k_ != o.k_ || exps_.size() != o.exps_.size())
            throw InputError("group elements of different types combined");
    }

    int k_ = 2;
    std::vector<int> exps_;
};

/// Parses "a1*a2^-1*a5^2" (a_{n+1} allowed) or "1" for the identity.
inline GroupElement parse_element(const std::string& text, const GroupType& gt) {
    GroupElement acc = GroupElement::identity(gt);
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.empty() || s == "1" || s == "e") return acc;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'a') throw InputError("cannot parse group element '" + text + "'");
        ++pos;
        std::size_t used = 0;
        int idx = 0;
        long exp = 1;
        try {
            idx = std::stoi(s.substr(pos), &used);
        } catch (const std::exception&) {
            throw InputError("missing generator index in '" + text + "'");
        }
        pos += used;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            try {
                exp = std::stol(s.substr(pos), &used);
            } catch (const std::exception&) {
                throw InputError("missing exponent in '" + text + "'");
            }
            pos += used;
        }
        acc = acc + GroupElement::generator(gt, idx).scaled(exp);
        if (pos < s.size()) {
            if (s[pos] != '*') throw InputError("expected '*' in group element '" + text + "'");
            ++pos;
        }
    }
    return acc;
}

namespace detail {

inline std::uint32_t encode(const GroupElement& g) {
    std::uint64_t code = 0, base = 1;
    for (int e : g.exponents()) {
        code += base * static_cast<std::uint64_t>(e);
        base *= static_cast<std::uint64_t>(g.k());
    }
    return static_cast<std::uint32_t>(code);
}

inline GroupElement decode(std::uint32_t code, const GroupType& gt) {
    std::vector<int> e(gt.n);
    for (int i = 0; i < gt.n; ++i) {
        e[i] = static_cast<int>(code % static_cast<std::uint32_t>(gt.k));
        code /= static_cast<std::uint32_t>(gt.k);
    }
    return {std::move(e), gt.k};
}

inline std::uint32_t add_codes(std::uint32_t a, std::uint32_t b, const GroupType& gt) {
    std::uint32_t out = 0, base = 1;
    const auto k = static_cast<std::uint32_t>(gt.k);
    for (int i = 0; i < gt.n; ++i) {
        out += base * (((a % k) + (b % k)) % k);
        a /= k;
        b /= k;
        base *= k;
    }
    return out;
}

inline bool sorted_contains(const std::vector<std::uint32_t>& v, std::uint32_t x) {
    return std::binary_search(v.begin(), v.end(), x);
}

// Closure of a subgroup S (sorted codes) under one more element g: the union of
// the cosets S + m*g for m below the first multiple landing in S.
inline std::vector<std::uint32_t> adjoin(const std::vector<std::uint32_t>& s, std::uint32_t g,
                                         const GroupType& gt) {
    if (sorted_contains(s, g)) return s;
    std::vector<std::uint32_t> out = s;
    std::uint32_t step = g;
    while (!sorted_contains(s, step)) {
        for (std::uint32_t x : s) out.push_back(add_codes(x, step, gt));
        step = add_codes(step, g, gt);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

class Subgroup {
public:
    Subgroup() = default;

    const GroupType& type() const { return type_; }
    const std::vector<GroupElement>& generators() const { return generators_; }
    /// Sorted mixed-radix codes of every element.
    const std::vector<std::uint32_t>& codes() const { return codes_; }
    std::uint64_t order() const { return codes_.size(); }
    std::uint64_t index() const { return type_.order() / order(); }

    bool contains(const GroupElement& g) const {
        if (g.k() != type_.k || g.rank() != type_.n) return false;
        return detail::sorted_contains(codes_, detail::encode(g));
    }

    std::vector<GroupElement> elements() const {
        std::vector<GroupElement> out;
        out.reserve(codes_.size());
        for (auto c : codes_) out.push_back(detail::decode(c, type_));
        return out;
    }

    bool is_subgroup_of(const Subgroup& o) const {
        return type_ == o.type_ &&
               std::includes(o.codes_.begin(), o.codes_.end(), codes_.begin(), codes_.end());
    }

    /// Generator list as written, e.g. "<a1, a2*a3, a2*a4>".
    std::string label() const {
        std::ostringstream os;
        os << '<';
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (i) os << ", ";
            os << generators_[i].short_string();
        }
        os << '>';
        return os.str();
    }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.type_ == b.type_ && a.codes_ == b.codes_;
    }

private:
    friend Subgroup span(const std::vector<GroupElement>&, const GroupType&);
    friend Subgroup product(const Subgroup&, const Subgroup&);

    GroupType type_;
    std::vector<GroupElement> generators_;
    std::vector<std::uint32_t> codes_;
};

/// Subgroup generated by gens; deterministic sorted element order.
inline Subgroup span(const std::vector<GroupElement>& gens, const GroupType& gt) {
    Subgroup s;
    s.type_ = gt;
    s.codes_ = {0};
    for (const auto& g : gens) {
        if (g.rank() != gt.n || g.k() != gt.k)
            throw InputError("generator " + g.to_string() + " does not belong to Z_" +
                             std::to_string(gt.k) + "^" + std::to_string(gt.n));
        s.codes_ = detail::adjoin(s.codes_, detail::encode(g), gt);
        s.generators_.push_back(g);
    }
    return s;
}

inline Subgroup span(const std::vector<std::string>& gens, const GroupType& gt) {
    std::vector<GroupElement> els;
    els.reserve(gens.size());
    for (const auto& t : gens) els.push_back(parse_element(t, gt));
    return span(els, gt);
}

/// The whole group H0.
inline Subgroup full_group(const GroupType& gt) {
    std::vector<GroupElement> gens;
    for (int j = 1; j <= gt.n; ++j) gens.push_back(GroupElement::generator(gt, j));
    return span(gens, gt);
}

/// Subgroup generated by A and B (equal to {ab} since H0 is abelian).
inline Subgroup product(const Subgroup& a, const Subgroup& b) {
    if (!(a.type() == b.type())) throw InputError("product of subgroups of different groups");
    const Subgroup& big = a.order() >= b.order() ? a : b;
    const Subgroup& small = a.order() >= b.order() ? b : a;
    Subgroup out = big;
    for (const auto& g : small.generators()) {
        out.codes_ = detail::adjoin(out.codes_, detail::encode(g), out.type_);
        out.generators_.push_back(g);
    }
    return out;
}

/// |K ∩ <a_j>|, a divisor of k.
inline int intersect_with_cyclic(const Subgroup& K, int j) {
    const GroupType& gt = K.type();
    const GroupElement a = GroupElement::generator(gt, j);
    int count = 0;
    for (int m = 0; m < gt.k; ++m)
        if (K.contains(a.scaled(m))) ++count;
    return count;
}

/// Greedy generating set of a subgroup given by its elements, in code order.
inline std::vector<GroupElement> greedy_generators(const std::vector<std::uint32_t>& codes,
                                                   const GroupType& gt) {
    std::vector<GroupElement> gens;
    std::vector<std::uint32_t> cur = {0};
    for (auto c : codes) {
        if (detail::sorted_contains(cur, c)) continue;
        cur = detail::adjoin(cur, c, gt);
        gens.push_back(detail::decode(c, gt));
        if (cur.size() == codes.size()) break;
    }
    return gens;
}

/**
 * Homomorphism Z_k^n -> Z_k given by its values on a_1..a_n; the value on
 * a_{n+1} is minus their sum. For prime k its kernel is an index-k
 * subgroup (a hyperplane).
 */
class Character {
public:
    Character() = default;
    Character(std::vector<int> coeffs, int k) : k_(k), coeffs_(std::move(coeffs)) {
        for (int& c : coeffs_) c = mod(c, k_);
        if (std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; }))
            throw InputError("character with all coefficients zero");
    }

    int modulus() const { return k_; }
    int rank() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<int>& coeffs() const { return coeffs_; }

    /// Value on the standard generator a_j, 1 <= j <= n+1.
    int value(int j) const {
        if (j >= 1 && j <= rank()) return coeffs_[j - 1];
        if (j == rank() + 1) {
            long s = 0;
            for (int c : coeffs_) s += c;
            return mod(-s, k_);
        }
        throw InputError("generator index " + std::to_string(j) + " out of range");
    }

    int value(const GroupElement& g) const {
        long s = 0;
        for (int i = 0; i < rank(); ++i) s += static_cast<long>(coeffs_[i]) * g.exponents()[i];
        return mod(s, k_);
    }

    /// Values on a_1..a_{n+1}.
    std::vector<int> generator_values() const {
        std::vector<int> v;
        for (int j = 1; j <= rank() + 1; ++j) v.push_back(value(j));
        return v;
    }

    /// Number of standard generators not in the kernel (branched points of the quotient).
    int support_size() const {
        int r = 0;
        for (int j = 1; j <= rank() + 1; ++j)
            if (value(j) != 0) ++r;
        return r;
    }

    bool surjective() const {
        int g = k_;
        for (int c : coeffs_) g = std::gcd(g, c);
        return g == 1;
    }

    /// Lexicographically smallest unit multiple (first nonzero = 1 when k is prime).
    Character canonical() const {
        std::vector<int> best = coeffs_;
        for (int u = 1; u < k_; ++u) {
            if (std::gcd(u, k_) != 1) continue;
            std::vector<int> c(coeffs_.size());
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(static_cast<long>(u) * coeffs_[i], k_);
            if (c < best) best = c;
        }
        return {best, k_};
    }

    /// Kernel; for a canonical prime-modulus character the generators are
    /// a_j * a_{i0}^{-c_j} for j != i0, where i0 is the first nonzero slot.
    Subgroup kernel(const GroupType& gt) const {
        if (gt.k != k_ || gt.n != rank()) throw InputError("character does not match group type");
        int i0 = -1;
        for (int i = 0; i < rank(); ++i)
            if (coeffs_[i] != 0 && std::gcd(coeffs_[i], k_) == 1) {
                i0 = i;
                break;
            }
        if (i0 >= 0) {
            // Scale so that the pivot coefficient is 1.
            int inv = 1;
            while (mod(static_cast<long>(inv) * coeffs_[i0], k_) != 1) ++inv;
            std::vector<GroupElement> gens;
            for (int j = 0; j < rank(); ++j) {
                if (j == i0) continue;
                std::vector<int> e(rank(), 0);
                e[j] = 1;
                e[i0] = mod(-static_cast<long>(inv) * coeffs_[j], k_);
                gens.emplace_back(std::move(e), k_);
            }
            Subgroup s = span(gens, gt);
            if (s.order() * static_cast<std::uint64_t>(k_) == gt.order()) return s;
        }
        // No unit coefficient (or composite corner cases): enumerate.
        std::vector<std::uint32_t> codes;
        for (std::uint32_t c = 0; c < gt.order(); ++c)
            if (value(detail::decode(c, gt)) == 0) codes.push_back(c);
        return span(greedy_generators(codes, gt), gt);
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "chi[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
        os << ']';
        return os.str();
    }

    friend bool operator==(const Character&, const Character&) = default;
    friend auto operator<=>(const Character& a, const Character& b) { return a.coeffs_ <=> b.coeffs_; }

private:
    int k_ = 2;
    std::vector<int> coeffs_;
};

namespace detail {

template <typename F>
void for_each_vector(int n, int k, F&& f) {
    std::vector<int> v(n, 0);
    while (true) {
        f(v);
        int i = n - 1;
        while (i >= 0 && v[i] == k - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
}

}  // namespace detail

/// One canonical character per index-p subgroup, (p^n - 1)/(p - 1) in total.
inline std::vector<Character> enumerate_hyperplanes(const GroupType& gt) {
    if (!gt.prime_exponent())
        throw UnsupportedModeError("hyperplane enumeration needs a prime exponent; k = " +
                                   std::to_string(gt.k) +
                                   " is composite, pass explicit subgroups instead");
    std::vector<Character> out;
    detail::for_each_vector(gt.n, gt.k, [&](const std::vector<int>& v) {
        auto it = std::find_if(v.begin(), v.end(), [](int c) { return c != 0; });
        if (it != v.end() && *it == 1) out.emplace_back(v, gt.k);
    });
    return out;
}

/// Surjective characters onto Z_k up to unit scaling: the subgroups with H0/K cyclic of order k.
inline std::vector<Character> enumerate_cyclic_quotients(const GroupType& gt) {
    std::vector<Character> out;
    detail::for_each_vector(gt.n, gt.k, [&](const std::vector<int>& v) {
        if (std::all_of(v.begin(), v.end(), [](int c) { return c == 0; })) return;
        Character chi(v, gt.k);
        if (!chi.surjective()) return;
        if (chi.canonical() == chi) out.push_back(chi);
    });
    return out;
}

/// All cyclic subgroups of the given order, ordered by their smallest generator.
inline std::vector<Subgroup> enumerate_cyclic_subgroups(const GroupType& gt, int order) {
    std::vector<Subgroup> out;
    std::vector<std::vector<std::uint32_t>> seen;
    for (std::uint32_t c = 0; c < gt.order(); ++c) {
        const GroupElement g = detail::decode(c, gt);
        if (g.order() != order) continue;
        Subgroup s = span({g}, gt);
        if (std::find(seen.begin(), seen.end(), s.codes()) != seen.end()) continue;
        seen.push_back(s.codes());
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace gfc
