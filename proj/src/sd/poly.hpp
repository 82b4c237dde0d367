#pragma once

#include <map>
#include <string>
#include <vector>

#include "sd/cyclo.hpp"
#include "sd/num.hpp"

namespace sd {

using Exps = std::vector<int>;

inline std::string cstr(const Q& q) { return str(q); }
inline std::string cstr(const Cyclo& c) {
    std::string s = c.str();
    return c.is_rational() ? s : "(" + s + ")";
}

// Multivariate polynomial with exact coefficients.  Terms are kept in a map
// keyed by exponent vector; zero coefficients are never stored.
template <class C>
class Poly {
public:
    using Terms = std::map<Exps, C>;

    Poly() = default;
    explicit Poly(int nvars, std::vector<std::string> names = {}) : nv_(nvars), names_(std::move(names)) {
        if (names_.empty()) names_ = default_names(nvars);
    }

    static std::vector<std::string> default_names(int nv) {
        static const char* base[] = {"x", "y", "z", "t"};
        std::vector<std::string> r;
        for (int i = 0; i < nv; ++i) r.push_back(i < 4 ? base[i] : "v" + std::to_string(i));
        return r;
    }

    static Poly var(int nvars, int i, std::vector<std::string> names = {}) {
        Poly p(nvars, std::move(names));
        Exps e(nvars, 0);
        e[i] = 1;
        p.t_[e] = C(1);
        return p;
    }
    static Poly constant(int nvars, const C& c, std::vector<std::string> names = {}) {
        Poly p(nvars, std::move(names));
        if (!is_zero(c)) p.t_[Exps(nvars, 0)] = c;
        return p;
    }
    static Poly monomial(const Exps& e, const C& c, std::vector<std::string> names = {}) {
        Poly p((int)e.size(), std::move(names));
        if (!is_zero(c)) p.t_[e] = c;
        return p;
    }

    int nvars() const { return nv_; }
    const std::vector<std::string>& names() const { return names_; }
    void set_names(std::vector<std::string> n) { names_ = std::move(n); }
    const Terms& terms() const { return t_; }
    bool is_zero_poly() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    void add_term(const Exps& e, const C& c) {
        if (is_zero(c)) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) t_.erase(it);
        }
    }

    C coeff(const Exps& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? C(0) : it->second;
    }

    // -1 for the zero polynomial or a non-homogeneous one
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int v : e) s += v;
            if (d == -1) d = s;
            else if (d != s) return -1;
        }
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int v : e) s += v;
            d = std::max(d, s);
        }
        return d;
    }
    bool is_homogeneous() const { return t_.empty() || degree() >= 0; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& b) {
        check(b);
        for (const auto& [e, c] : b.t_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& b) {
        check(b);
        for (const auto& [e, c] : b.t_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.nv_, a.names_);
        Exps e(a.nv_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                for (int i = 0; i < a.nv_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    friend Poly operator*(const C& s, Poly a) {
        if (is_zero(s)) return Poly(a.nv_, a.names_);
        for (auto& [e, c] : a.t_) c = s * c;
        return a;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.nv_ == b.nv_ && a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned k) const {
        Poly r = constant(nv_, C(1), names_), b = *this;
        while (k) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }

    // Replaces variable i by images[i]; all images share one variable set.
    Poly substitute(const std::vector<Poly>& images) const {
        if ((int)images.size() != nv_) throw Error(Err::LengthMismatch, "substitution arity");
        int onv = images.empty() ? 0 : images[0].nv_;
        std::vector<std::vector<Poly>> pw(nv_);
        auto power = [&](int i, int k) -> const Poly& {
            auto& v = pw[i];
            if (v.empty()) v.push_back(constant(onv, C(1), images[i].names_));
            while ((int)v.size() <= k) v.push_back(v.back() * images[i]);
            return v[k];
        };
        Poly r(onv, images.empty() ? std::vector<std::string>{} : images[0].names_);
        // share partial products over common exponent prefixes
        Exps prev;
        std::vector<Poly> partial;
        for (const auto& [e, c] : t_) {
            int common = 0;
            if (!prev.empty())
                while (common < nv_ - 1 && common < (int)partial.size() && e[common] == prev[common]) ++common;
            partial.resize(common);
            for (int i = common; i < nv_ - 1; ++i) {
                const Poly& pi = power(i, e[i]);
                partial.push_back(i == 0 ? pi : partial.back() * pi);
            }
            Poly term = nv_ == 1 ? power(0, e[0]) : partial.back() * power(nv_ - 1, e[nv_ - 1]);
            for (const auto& [te, tc] : term.t_) r.add_term(te, c * tc);
            prev = e;
        }
        return r;
    }

    C eval(const std::vector<C>& pt) const {
        C s(0);
        for (const auto& [e, c] : t_) {
            C m = c;
            for (int i = 0; i < nv_; ++i)
                for (int k = 0; k < e[i]; ++k) m = m * pt[i];
            s += m;
        }
        return s;
    }

    template <class D, class F>
    Poly<D> map_coeffs(F f) const {
        Poly<D> r(nv_, names_);
        for (const auto& [e, c] : t_) r.add_term(e, f(c));
        return r;
    }

    // Terms from the highest power of the first variable down.
    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += cstr(it->second);
            for (int i = 0; i < nv_; ++i) s += "*" + names_[i] + "^" + std::to_string(it->first[i]);
        }
        return s;
    }

    // Same order, without unit coefficients and zero exponents: x^8 + 14*x^4*y^4 + y^8
    std::string pretty() const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            std::string c = cstr(it->second), mono;
            bool neg = !c.empty() && c[0] == '-';
            if (neg) c = c.substr(1);
            for (int i = 0; i < nv_; ++i) {
                int e = it->first[i];
                if (!e) continue;
                if (!mono.empty()) mono += "*";
                mono += names_[i];
                if (e > 1) mono += "^" + std::to_string(e);
            }
            std::string term = mono.empty() ? c : (c == "1" ? mono : c + "*" + mono);
            if (s.empty()) s = neg ? "-" + term : term;
            else s += (neg ? " - " : " + ") + term;
        }
        return s;
    }

private:
    void check(const Poly& b) const {
        if (b.nv_ != nv_) throw Error(Err::LengthMismatch, "polynomials over different variable sets");
    }

    int nv_ = 0;
    std::vector<std::string> names_;
    Terms t_;
};

using PolyQ = Poly<Q>;
using PolyC = Poly<Cyclo>;

PolyC to_cyclo(const PolyQ& p);
// Throws NonRationalResult when a coefficient is irrational.
PolyQ to_rational(const PolyC& p);

// Lenient parser: accepts terms like `3*x^2*y`, `x^4`, `-2 x y^3`, `1/3*z`.
// Variables are taken from `names`; when empty, x,y,z,t are used and the
// variable count is the highest one mentioned (at least 2).
PolyQ parse_poly(const std::string& text, std::vector<std::string> names = {});

// Univariate helpers used by series work: coefficients indexed by degree.
using Series = std::vector<Q>;
Series series_mul(const Series& a, const Series& b, std::size_t trunc);
Series series_inv(const Series& a, std::size_t trunc);
Series series_pow(const Series& a, long k, std::size_t trunc);  // k may be negative

}  // namespace sd
