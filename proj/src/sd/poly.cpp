#include "sd/poly.hpp"

#include <algorithm>
#include <cctype>

namespace sd {

PolyC to_cyclo(const PolyQ& p) {
    return p.map_coeffs<Cyclo>([](const Q& q) { return Cyclo(q); });
}

PolyQ to_rational(const PolyC& p) {
    return p.map_coeffs<Q>([](const Cyclo& c) { return c.rational(); });
}

namespace {

struct RawTerm {
    Q coef;
    std::vector<std::pair<std::string, int>> vars;
};

}  // namespace

PolyQ parse_poly(const std::string& text, std::vector<std::string> names) {
    std::string s;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) s += ch;
    if (s.empty()) throw Error(Err::Parse, "empty polynomial");

    std::vector<RawTerm> raw;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) { throw Error(Err::Parse, why + " at offset " + std::to_string(i) + " in '" + s + "'"); };
    while (i < s.size()) {
        RawTerm t;
        t.coef = 1;
        bool neg = false;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') neg = !neg;
            ++i;
        }
        bool need_factor = true;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (s[i] == '*') {
                ++i;
                continue;
            }
            if (std::isdigit((unsigned char)s[i])) {
                std::size_t j = i;
                while (j < s.size() && (std::isdigit((unsigned char)s[j]) || s[j] == '/')) ++j;
                t.coef *= parse_q(s.substr(i, j - i));
                i = j;
            } else if (std::isalpha((unsigned char)s[i])) {
                std::size_t j = i + 1;  // variables are single letters
                std::string v = s.substr(i, j - i);
                i = j;
                int e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::size_t k = i;
                    while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
                    if (k == i) fail("missing exponent");
                    e = std::stoi(s.substr(i, k - i));
                    i = k;
                }
                t.vars.emplace_back(v, e);
            } else {
                fail("unexpected character");
            }
            need_factor = false;
        }
        if (need_factor) fail("empty term");
        if (neg) t.coef = -t.coef;
        raw.push_back(std::move(t));
    }

    if (names.empty()) {
        std::vector<std::string> base = {"x", "y", "z", "t"};
        int nv = 2;
        for (const auto& t : raw)
            for (const auto& [v, e] : t.vars) {
                auto it = std::find(base.begin(), base.end(), v);
                if (it == base.end()) throw Error(Err::Parse, "unknown variable " + v);
                nv = std::max(nv, int(it - base.begin()) + 1);
            }
        names.assign(base.begin(), base.begin() + nv);
    }
    PolyQ p((int)names.size(), names);
    for (const auto& t : raw) {
        Exps e(names.size(), 0);
        for (const auto& [v, k] : t.vars) {
            auto it = std::find(names.begin(), names.end(), v);
            if (it == names.end()) throw Error(Err::Parse, "unknown variable " + v);
            e[it - names.begin()] += k;
        }
        p.add_term(e, t.coef);
    }
    return p;
}

Series series_mul(const Series& a, const Series& b, std::size_t trunc) {
    Series r(std::min(trunc, a.size() + b.size() - 1), Q(0));
    for (std::size_t i = 0; i < a.size() && i < r.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series series_inv(const Series& a, std::size_t trunc) {
    if (a.empty() || is_zero(a[0])) throw Error(Err::PreconditionFailed, "series with zero constant term is not invertible");
    Series r(trunc, Q(0));
    Q inv0 = 1 / a[0];
    for (std::size_t k = 0; k < trunc; ++k) {
        Q s = k == 0 ? Q(1) : Q(0);
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) s -= a[j] * r[k - j];
        r[k] = s * inv0;
    }
    return r;
}

Series series_pow(const Series& a, long k, std::size_t trunc) {
    Series base = k < 0 ? series_inv(a, trunc) : a;
    unsigned long e = k < 0 ? (unsigned long)(-k) : (unsigned long)k;
    Series r(1, Q(1));
    while (e) {
        if (e & 1) r = series_mul(r, base, trunc);
        e >>= 1;
        if (e) base = series_mul(base, base, trunc);
    }
    r.resize(trunc, Q(0));
    return r;
}

}  // namespace sd
