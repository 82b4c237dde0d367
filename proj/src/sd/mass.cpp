#include "sd/mass.hpp"

#include <cctype>

namespace sd {

namespace {

[[noreturn]] void inadmissible(int n, const std::string& f) {
    throw Error(Err::LengthNotAdmissible, "length " + std::to_string(n) + " not admissible for family " + f);
}

// trailing-letter labels such as 9H, 5E; returns q or 0
int q_label(const std::string& f, char kind) {
    if (f.size() < 2 || f.back() != kind) return 0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (!std::isdigit((unsigned char)f[i])) return 0;
    return std::stoi(f.substr(0, f.size() - 1));
}

int isqrt_exact(int q) {
    int r = 0;
    while ((r + 1) * (r + 1) <= q) ++r;
    return r * r == q ? r : 0;
}

// (p, e) with q = p^e, or (0, 0)
std::pair<int, int> prime_power(int q) {
    for (int p = 2; p <= q; ++p)
        if (q % p == 0) {
            int e = 0, m = q;
            while (m % p == 0) m /= p, ++e;
            return m == 1 ? std::make_pair(p, e) : std::make_pair(0, 0);
        }
    return {0, 0};
}

}  // namespace

Z sigma(int n, int k) {
    if (k < 0 || 2 * k > n) throw Error(Err::PreconditionFailed, "need 0 <= k <= n/2");
    if (k == 0) return 1;
    auto p2 = [](long e) { return e < 0 ? Q(1, 1) / Q(ipow(2, -e)) : Q(ipow(2, e)); };
    int r = ((n % 8) + 8) % 8;
    long h = n / 2;
    Q v = 1;
    if (r == 1 || r == 7 || r == 2 || r == 6 || r == 3 || r == 5) {
        int sgn = (r == 1 || r == 7) ? 1 : (r == 3 || r == 5) ? -1 : 0;
        for (int i = 0; i < k; ++i)
            v *= (p2(n - 2 * i - 2) + sgn * p2(h - i - 1) - 1) / (p2(i + 1) - 1);
    } else {
        int sgn = r == 0 ? 1 : -1;
        for (int i = 0; i <= k - 2; ++i)
            v *= (p2(n - 2 * i - 2) + sgn * p2(h - i - 1) - 2) / (p2(i + 1) - 1);
        v *= 1 / p2(k - 1) + (p2(n - 2 * k) + sgn * p2(h - k) - 2) / (p2(k) - 1);
    }
    if (v.get_den() != 1) throw Error(Err::NonRationalResult, "sigma(" + std::to_string(n) + "," + std::to_string(k) + ") is not an integer");
    return v.get_num();
}

Z total_count(int n, const std::string& f) {
    if (n <= 0) inadmissible(n, f);
    Z t = 1;
    if (f == "2") {
        if (n % 2) inadmissible(n, f);
        for (int i = 1; i <= n / 2 - 1; ++i) t *= ipow(2, i) + 1;
    } else if (f == "2II") {
        if (n % 8) inadmissible(n, f);
        t = 2;
        for (int i = 1; i <= n / 2 - 2; ++i) t *= ipow(2, i) + 1;
    } else if (f == "3") {
        if (n % 4) inadmissible(n, f);
        t = 2;
        for (int i = 1; i <= n / 2 - 1; ++i) t *= ipow(3, i) + 1;
    } else if (f == "4H+") {
        for (int i = 1; i <= n; ++i) t *= ipow(2, i) + 1;
    } else if (f == "4H+II") {
        if (n % 2) inadmissible(n, f);
        t = 2;
        for (int i = 1; i <= n - 1; ++i) t *= ipow(2, i) + 1;
    } else if (f == "4Z") {
        t = 0;
        for (int k = 0; k <= n / 2; ++k) t += sigma(n, k) * ipow(2, (unsigned long)k * (k + 1) / 2);
    } else if (int q = q_label(f, 'H')) {
        int r = isqrt_exact(q);
        if (!r || !prime_power(q).first) throw Error(Err::UnsupportedFamily, "family qH needs q an even power of a prime");
        if (n % 2) inadmissible(n, f);
        for (int i = 0; i <= n / 2 - 1; ++i) t *= ipow(r, 2 * i + 1) + 1;
    } else if (int q = q_label(f, 'E')) {
        if (!prime_power(q).first) throw Error(Err::UnsupportedFamily, "family qE needs a prime power q");
        if (n % 2) inadmissible(n, f);
        t = q % 2 ? 2 : 1;
        for (int i = 1; i <= n / 2 - 1; ++i) t *= ipow(q, i) + 1;
    } else {
        throw Error(Err::UnsupportedFamily, "no count for family " + f);
    }
    return t;
}

Z group_order(int n, const std::string& f) {
    if (n < 0) throw Error(Err::PreconditionFailed, "negative length");
    Z nf = factorial(n);
    if (f == "2" || f == "2I" || f == "2II") return nf;
    if (f == "3") return ipow(2, n) * nf;
    if (f == "4H") return 2 * ipow(3, n) * nf;
    if (f == "4E") return 2 * nf;
    if (f == "4H+" || f == "4H+I" || f == "4H+II") return ipow(6, n) * nf;
    if (f == "4Z" || f == "4ZII" || f == "6Z") return ipow(2, n) * nf;
    if (f == "5Z") return 2 * ipow(2, n) * nf;
    if (f == "7Z") return 3 * ipow(2, n) * nf;
    if (f == "8Z") return ipow(4, n) * nf;
    if (f == "9Z") return 3 * ipow(2, n) * nf;
    if (int q = q_label(f, 'H')) {
        int r = isqrt_exact(q);
        auto [p, e] = prime_power(q);
        if (!r || !p) throw Error(Err::UnsupportedFamily, "family qH needs q an even power of a prime");
        return Z(e) * (r - 1) * ipow(r + 1, n) * nf;
    }
    if (int q = q_label(f, 'E')) {
        auto [p, e] = prime_power(q);
        if (!p) throw Error(Err::UnsupportedFamily, "family qE needs a prime power q");
        Z r = Z(e) * ipow(2, n) * nf * (q - 1);
        return r / 2;
    }
    throw Error(Err::UnsupportedFamily, "no group order for family " + f);
}

MassCheck verify_mass(int n, const std::string& family, const std::vector<Z>& aut) {
    MassCheck m;
    m.lhs = 0;
    for (const auto& a : aut) {
        if (a <= 0) throw Error(Err::PreconditionFailed, "automorphism group orders must be positive");
        m.lhs += Q(1) / Q(a);
    }
    m.rhs = Q(total_count(n, family)) / Q(group_order(n, family));
    m.rhs.canonicalize();
    m.equal = m.lhs == m.rhs;
    return m;
}

Z parse_factored(const std::string& s) {
    Z v = 1;
    std::size_t p = 0;
    bool any = false;
    auto num = [&]() {
        std::size_t b = p;
        while (p < s.size() && std::isdigit((unsigned char)s[p])) ++p;
        if (b == p) throw Error(Err::Parse, "bad factored integer '" + s + "'");
        return Z(s.substr(b, p - b));
    };
    while (p < s.size()) {
        if (std::isspace((unsigned char)s[p]) || s[p] == '*' || s[p] == '.') {
            ++p;
            continue;
        }
        Z b = num();
        if (p < s.size() && s[p] == '^') {
            ++p;
            Z e = num();
            mpz_pow_ui(b.get_mpz_t(), b.get_mpz_t(), e.get_ui());
        }
        v *= b;
        any = true;
    }
    if (!any) throw Error(Err::Parse, "empty factored integer");
    return v;
}

}  // namespace sd
