#include "sd/wenum.hpp"

#include <cctype>
#include <cmath>
#include <unordered_map>

namespace sd {

const char* kind_name(EnumKind k) {
    switch (k) {
    case EnumKind::Hwe: return "hwe";
    case EnumKind::Swe: return "swe";
    case EnumKind::Cwe: return "cwe";
    }
    return "?";
}

EnumKind parse_kind(const std::string& s) {
    if (s == "hwe") return EnumKind::Hwe;
    if (s == "swe") return EnumKind::Swe;
    if (s == "cwe") return EnumKind::Cwe;
    throw Error(Err::Parse, "unknown enumerator kind " + s);
}

Alphabet family_alphabet(const std::string& f) {
    if (f == "2") return Alphabet::f2();
    if (f == "3") return Alphabet::f3();
    if (f == "4H") return Alphabet::f4h();
    if (f == "4E") return Alphabet::f4e();
    if (f == "4H+") return Alphabet::f4plus();
    if (f.size() >= 2 && (f.back() == 'Z' || f.back() == 'E')) {
        std::string d = f.substr(0, f.size() - 1);
        bool digits = !d.empty();
        for (char ch : d) digits = digits && std::isdigit((unsigned char)ch);
        if (digits) {
            int m = std::stoi(d);
            return f.back() == 'Z' ? Alphabet::z(m) : Alphabet(Kind::PrimeField, m, Form::Euclidean);
        }
    }
    try {
        return Alphabet::from_token(f);
    } catch (const Error&) {
        throw Error(Err::UnsupportedFamily, "unknown family " + f);
    }
}

int swe_class(const Alphabet& A, int a) {
    if (A.kind() == Kind::F4) return a >= 2 ? 2 : a;
    return std::min(a, A.size() - a);
}

int swe_classes(const Alphabet& A) { return A.kind() == Kind::F4 ? 3 : A.size() / 2 + 1; }

namespace {

std::vector<std::string> split_names() { return {"x", "y", "X", "Y"}; }

}  // namespace

PolyQ hwe(const Code& c, std::uint64_t cap) {
    PolyQ p(2);
    for (const auto& [w, cnt] : weight_distribution(c, Metric::Hamming, cap)) p.add_term({c.n - w, w}, Q(cnt));
    return p;
}

PolyQ cwe(const Code& c, std::uint64_t cap) {
    int q = c.A.size();
    if (q > 4) throw Error(Err::UnsupportedAlphabet, "cwe needs an alphabet with at most 4 symbols");
    if (q == 2) return hwe(c, cap);
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t base = c.n + 1;
    std::vector<std::uint64_t> unit(q, 1);
    for (int a = 1; a < q; ++a) unit[a] = unit[a - 1] * base;
    for_each_codeword(c, cap, [&](const Vec& v) {
        std::uint64_t key = 0;
        for (int a : v) key += unit[a];
        ++counts[key];
    });
    PolyQ p(q);
    for (const auto& [key, cnt] : counts) {
        Exps e(q);
        std::uint64_t k = key;
        for (int a = 0; a < q; ++a) {
            e[a] = int(k % base);
            k /= base;
        }
        p.add_term(e, Q(Z(std::to_string(cnt))));
    }
    return p;
}

PolyQ cwe_to_swe(const PolyQ& w, const Alphabet& A) {
    int k = swe_classes(A);
    PolyQ p(k);
    for (const auto& [e, c] : w.terms()) {
        Exps f(k, 0);
        for (int a = 0; a < (int)e.size(); ++a) f[swe_class(A, a)] += e[a];
        p.add_term(f, c);
    }
    return p;
}

PolyQ cwe_to_hwe(const PolyQ& w) {
    PolyQ p(2);
    for (const auto& [e, c] : w.terms()) {
        int nz = 0;
        for (std::size_t a = 1; a < e.size(); ++a) nz += e[a];
        p.add_term({e[0], nz}, c);
    }
    return p;
}

PolyQ swe(const Code& c, std::uint64_t cap) {
    if (c.A.size() > 4) {
        // classes directly, for Z_m with m > 4
        int k = swe_classes(c.A);
        std::map<Exps, std::uint64_t> counts;
        for_each_codeword(c, cap, [&](const Vec& v) {
            Exps e(k, 0);
            for (int a : v) ++e[swe_class(c.A, a)];
            ++counts[e];
        });
        PolyQ p(k);
        for (const auto& [e, cnt] : counts) p.add_term(e, Q(Z(std::to_string(cnt))));
        return p;
    }
    return cwe_to_swe(cwe(c, cap), c.A);
}

PolyQ words_enumerator(const Alphabet& A, int n, const std::vector<Vec>& words, EnumKind k) {
    int nv = k == EnumKind::Hwe ? 2 : k == EnumKind::Swe ? swe_classes(A) : A.size();
    std::map<Exps, long> counts;
    for (const auto& v : words) {
        if ((int)v.size() != n) throw Error(Err::LengthMismatch, "word of the wrong length");
        Exps e(nv, 0);
        for (int a : v) ++e[k == EnumKind::Hwe ? (a != 0) : k == EnumKind::Swe ? swe_class(A, a) : a];
        ++counts[e];
    }
    PolyQ p(nv);
    for (const auto& [e, cnt] : counts) p.add_term(e, Q(cnt));
    return p;
}

PolyQ enumerator(const Code& c, EnumKind k, std::uint64_t cap) {
    switch (k) {
    case EnumKind::Hwe: return hwe(c, cap);
    case EnumKind::Swe: return swe(c, cap);
    case EnumKind::Cwe: return cwe(c, cap);
    }
    return hwe(c, cap);
}

namespace {

// character value of the pairing between symbols a and b
Cyclo character(const Alphabet& A, int a, int b) {
    if (A.kind() == Kind::F4) {
        int prod = A.form() == Form::Euclidean ? A.mul(a, b) : A.mul(a, A.conj(b));
        return Cyclo(Alphabet::f4_trace(prod) ? -1L : 1L);
    }
    int m = A.size();
    return Cyclo::zeta(m, (long)a * b % m);
}

// Collapses a full q x q matrix onto the classes of an enumerator kind; every
// member of a class must give the same collapsed row.
LinearSub collapse(const Alphabet& A, const std::vector<std::vector<Cyclo>>& full, EnumKind k) {
    int q = A.size();
    if (k == EnumKind::Cwe) return {full};
    auto cls = [&](int a) { return k == EnumKind::Hwe ? (a ? 1 : 0) : swe_class(A, a); };
    int nc = k == EnumKind::Hwe ? 2 : swe_classes(A);
    std::vector<std::vector<Cyclo>> M(nc);
    std::vector<bool> seen(nc, false);
    for (int a = 0; a < q; ++a) {
        std::vector<Cyclo> row(nc, Cyclo(0L));
        for (int b = 0; b < q; ++b) row[cls(b)] += full[a][b];
        int ca = cls(a);
        if (!seen[ca]) {
            M[ca] = row;
            seen[ca] = true;
        } else if (M[ca] != row) {
            throw Error(Err::UnsupportedFamily, std::string("no ") + kind_name(k) + " transform for " + A.family());
        }
    }
    return {M};
}

}  // namespace

LinearSub macwilliams_sub(const Alphabet& A, EnumKind k) {
    int q = A.size();
    std::vector<std::vector<Cyclo>> full(q, std::vector<Cyclo>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) full[a][b] = character(A, a, b);
    return collapse(A, full, k);
}

LinearSub shadow_sub(const Alphabet& A, EnumKind k) {
    int q = A.size();
    std::vector<std::vector<Cyclo>> full(q, std::vector<Cyclo>(q));
    if (A.form() == Form::TraceHermitian) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) full[a][b] = a ? -character(A, a, b) : character(A, a, b);
    } else if ((A.kind() == Kind::IntegerRing || A.size() == 2) && q % 2 == 0) {
        for (int j = 0; j < q; ++j)
            for (int b = 0; b < q; ++b) full[j][b] = Cyclo::zeta(2 * q, (long)j * j + 2L * j * b);
    } else {
        throw Error(Err::UnsupportedFamily, "no shadow transform for family " + A.family());
    }
    return collapse(A, full, k);
}

PolyQ apply_sub(const PolyQ& w, const LinearSub& s, const Q& scale) {
    int nv = (int)s.M.size();
    if (w.nvars() != nv) throw Error(Err::LengthMismatch, "enumerator has " + std::to_string(w.nvars()) + " variables, transform expects " + std::to_string(nv));
    bool rational = true;
    for (const auto& r : s.M)
        for (const auto& c : r) rational = rational && c.is_rational();
    if (rational) {
        std::vector<PolyQ> img;
        for (int a = 0; a < nv; ++a) {
            PolyQ p(nv, w.names());
            for (int b = 0; b < nv; ++b) p += PolyQ::monomial(PolyQ::var(nv, b).terms().begin()->first, s.M[a][b].rational(), w.names());
            img.push_back(p);
        }
        return scale * w.substitute(img);
    }
    std::vector<PolyC> img;
    for (int a = 0; a < nv; ++a) {
        PolyC p(nv, w.names());
        for (int b = 0; b < nv; ++b) {
            Exps e(nv, 0);
            e[b] = 1;
            p.add_term(e, s.M[a][b]);
        }
        img.push_back(p);
    }
    PolyC r = to_cyclo(w).substitute(img);
    return scale * to_rational(r);
}

PolyQ macwilliams(const PolyQ& w, const std::string& family, EnumKind k, const Z& size_c) {
    Alphabet A = family_alphabet(family);
    if (k == EnumKind::Cwe && w.nvars() != A.size())
        throw Error(Err::LengthMismatch, "cwe for this family has " + std::to_string(A.size()) + " variables");
    return apply_sub(w, macwilliams_sub(A, k), Q(1) / Q(size_c));
}

PolyQ shadow_enumerator(const PolyQ& w, const std::string& family, EnumKind k) {
    Alphabet A = family_alphabet(family);
    Q size = 0;
    for (const auto& [e, c] : w.terms()) size += c;
    if (is_zero(size)) throw Error(Err::PreconditionFailed, "enumerator counts no words");
    PolyQ s = apply_sub(w, shadow_sub(A, k), 1 / size);
    for (const auto& [e, c] : s.terms())
        if (sgn(c) < 0) throw Error(Err::NegativeCoefficient, "shadow enumerator has negative coefficient " + str(c));
    return s;
}

Z krawtchouk(int k, int x, int n, int q) {
    Z s = 0;
    for (int j = 0; j <= k; ++j) {
        Z t = binom(x, j) * binom(n - x, k - j) * ipow(q - 1, k - j);
        if (j % 2) s -= t;
        else s += t;
    }
    return s;
}

std::map<int, Q> dual_distribution(const std::map<int, Z>& A, int n, int q) {
    Z size = 0;
    for (const auto& [i, a] : A) size += a;
    std::map<int, Q> out;
    for (int k = 0; k <= n; ++k) {
        Z s = 0;
        for (const auto& [i, a] : A) s += a * krawtchouk(k, i, n, q);
        Q v = Q(s) / Q(size);
        if (!is_zero(v)) out[k] = v;
    }
    return out;
}

PolyQ split_enumerator(const Code& c, int left, std::uint64_t cap) {
    if (left < 0 || left > c.n) throw Error(Err::LengthMismatch, "split point outside the code");
    std::map<Exps, std::uint64_t> counts;
    for_each_codeword(c, cap, [&](const Vec& v) {
        int wl = 0, wr = 0;
        for (int j = 0; j < c.n; ++j)
            if (v[j]) (j < left ? wl : wr)++;
        ++counts[{left - wl, wl, c.n - left - wr, wr}];
    });
    PolyQ p(4, split_names());
    for (const auto& [e, cnt] : counts) p.add_term(e, Q(Z(std::to_string(cnt))));
    return p;
}

PolyQ jacobi(const Code& c, const Vec& v, std::uint64_t cap) {
    if ((int)v.size() != c.n) throw Error(Err::LengthMismatch, "Jacobi vector length differs from code length");
    std::map<Exps, std::uint64_t> counts;
    for_each_codeword(c, cap, [&](const Vec& u) {
        int w = 0, m = 0;
        for (int j = 0; j < c.n; ++j)
            if (u[j]) {
                ++w;
                if (v[j]) ++m;
            }
        ++counts[{w, m}];
    });
    PolyQ p(2, {"x", "z"});
    for (const auto& [e, cnt] : counts) p.add_term(e, Q(Z(std::to_string(cnt))));
    return p;
}

std::vector<Z> theta_series(const PolyQ& w, int terms) {
    if (w.nvars() != 2) throw Error(Err::LengthMismatch, "theta series needs a binary hwe");
    if (terms < 0) terms = 0;
    // series in s = q^(1/2): theta3(2z) = sum s^(4m^2), theta2(2z) = sum s^((2m+1)^2)
    std::size_t len = 2 * terms + 1;
    int M = (int)std::ceil(std::sqrt(terms / 2.0)) + 1;
    Series t3(len, Q(0)), t2(len, Q(0));
    for (int m = -M; m <= M; ++m) {
        long a = 4L * m * m, b = (2L * m + 1) * (2L * m + 1);
        if (a < (long)len) t3[a] += 1;
        if (b < (long)len) t2[b] += 1;
    }
    Series total(len, Q(0));
    std::map<int, Series> p3, p2;
    auto power = [&](std::map<int, Series>& cache, const Series& base, int k) -> const Series& {
        if (cache.empty()) cache[0] = Series{Q(1)};
        int have = cache.rbegin()->first;
        while (have < k) {
            cache[have + 1] = series_mul(cache[have], base, len);
            ++have;
        }
        return cache[k];
    };
    for (const auto& [e, c] : w.terms()) {
        Series t = series_mul(power(p3, t3, e[0]), power(p2, t2, e[1]), len);
        for (std::size_t i = 0; i < t.size(); ++i) total[i] += c * t[i];
    }
    std::vector<Z> out;
    for (std::size_t i = 0; i < len; ++i) {
        if (i % 2) {
            if (!is_zero(total[i])) throw Error(Err::PreconditionFailed, "theta series has half-integral exponents (odd weights)");
            continue;
        }
        if (total[i].get_den() != 1) throw Error(Err::NonRationalResult, "theta coefficient is not an integer");
        out.push_back(total[i].get_num());
    }
    return out;
}

}  // namespace sd
