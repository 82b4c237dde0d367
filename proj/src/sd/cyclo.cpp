#include "sd/cyclo.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace sd {

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

long lcm_int(long a, long b) { return a / std::gcd(a, b) * b; }

namespace {

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
    // den monic
    int dn = (int)den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (int i = (int)num.size() - 1; i >= dn; --i) {
        long c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(int n) {
    static std::recursive_mutex mu;
    static std::map<int, std::vector<long>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        p = poly_div_exact(p, cyclotomic_poly(d));
    }
    return cache[n] = p;
}

Cyclo::Cyclo() : N_(1), c_(1, Q(0)) {}
Cyclo::Cyclo(const Q& r) : N_(1), c_(1, r) {}
Cyclo::Cyclo(long r) : N_(1), c_(1, Q(r)) {}

Cyclo Cyclo::from_powers(int N, const std::vector<Q>& p) {
    std::vector<Q> folded(N, Q(0));
    for (std::size_t k = 0; k < p.size(); ++k) folded[k % N] += p[k];
    const auto& phi = cyclotomic_poly(N);
    int d = (int)phi.size() - 1;
    for (int i = N - 1; i >= d; --i) {
        if (sd::is_zero(folded[i])) continue;
        Q c = folded[i];
        for (int j = 0; j <= d; ++j) folded[i - d + j] -= c * phi[j];
    }
    Cyclo r;
    r.N_ = N;
    r.c_.assign(folded.begin(), folded.begin() + d);
    return r;
}

Cyclo Cyclo::zeta(int N, long k) {
    k %= N;
    if (k < 0) k += N;
    std::vector<Q> p(k + 1, Q(0));
    p[k] = 1;
    return from_powers(N, p);
}

Cyclo Cyclo::sqrt_of(int q) {
    if (q <= 0) throw Error(Err::PreconditionFailed, "sqrt of non-positive " + std::to_string(q));
    // q = s^2 * p1 * p2 * ... with distinct primes p
    long s = 1;
    Cyclo r(1);
    int m = q;
    for (int d = 2; d * d <= m; ++d) {
        int e = 0;
        while (m % d == 0) m /= d, ++e;
        for (int k = 0; k < e / 2; ++k) s *= d;
        if (e % 2) r *= sqrt_prime(d);
    }
    if (m > 1) r *= sqrt_prime(m);
    return Cyclo(Q(s)) * r;
}

Cyclo Cyclo::sqrt_prime(int q) {
    if (q == 2) return zeta(8) + zeta(8, 7);
    // Gauss sum g = sum (a/q) zeta_q^a, g^2 = (-1)^((q-1)/2) q
    std::vector<Q> p(q, Q(0));
    for (int a = 1; a < q; ++a) {
        long s = 1;
        for (int e = 0; e < (q - 1) / 2; ++e) s = s * a % q;
        p[a] = (s == 1) ? 1 : -1;
    }
    Cyclo g = from_powers(q, p);
    if (q % 4 == 1) return g;
    return -(i() * g);  // g = i sqrt(q)
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (!sd::is_zero(x)) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (!sd::is_zero(c_[k])) return false;
    return true;
}

Q Cyclo::rational() const {
    if (!is_rational()) throw Error(Err::NonRationalResult, "value " + str() + " is not rational");
    return c_.empty() ? Q(0) : c_[0];
}

Cyclo Cyclo::lift(int M) const {
    if (M == N_) return *this;
    int s = M / N_;
    std::vector<Q> p((c_.size() - 1) * s + 1, Q(0));
    for (std::size_t k = 0; k < c_.size(); ++k) p[k * s] = c_[k];
    return from_powers(M, p);
}

Cyclo Cyclo::conj() const {
    std::vector<Q> p(N_, Q(0));
    for (std::size_t k = 0; k < c_.size(); ++k) p[(N_ - k) % N_] += c_[k];
    return from_powers(N_, p);
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    if (a.N_ != b.N_) {
        int M = (int)lcm_int(a.N_, b.N_);
        return a.lift(M) + b.lift(M);
    }
    Cyclo r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
    return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.N_ != b.N_) {
        int M = (int)lcm_int(a.N_, b.N_);
        return a.lift(M) * b.lift(M);
    }
    if (a.N_ == 1) return Cyclo(a.c_[0] * b.c_[0]);
    std::vector<Q> p(a.c_.size() + b.c_.size() - 1, Q(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sd::is_zero(a.c_[i])) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    }
    return Cyclo::from_powers(a.N_, p);
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.N_ != b.N_) {
        int M = (int)lcm_int(a.N_, b.N_);
        return a.lift(M) == b.lift(M);
    }
    return a.c_ == b.c_;
}

Cyclo Cyclo::inv() const {
    if (is_zero()) throw Error(Err::PreconditionFailed, "inverse of zero");
    if (N_ == 1) return Cyclo(Q(1) / c_[0]);
    // Solve M x = e0 where column j of M is this * zeta^j.
    int d = (int)c_.size();
    std::vector<std::vector<Q>> m(d, std::vector<Q>(d + 1, Q(0)));
    for (int j = 0; j < d; ++j) {
        Cyclo col = *this * zeta(N_, j);
        for (int i = 0; i < d; ++i) m[i][j] = col.c_[i];
    }
    m[0][d] = 1;
    for (int c = 0; c < d; ++c) {
        int piv = c;
        while (sd::is_zero(m[piv][c])) ++piv;
        std::swap(m[piv], m[c]);
        Q inv = 1 / m[c][c];
        for (int k = c; k <= d; ++k) m[c][k] *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == c || sd::is_zero(m[r][c])) continue;
            Q f = m[r][c];
            for (int k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
        }
    }
    Cyclo r;
    r.N_ = N_;
    r.c_.resize(d);
    for (int i = 0; i < d; ++i) r.c_[i] = m[i][d];
    return r;
}

std::size_t Cyclo::hash() const {
    std::size_t h = std::hash<int>()(N_);
    for (const auto& x : c_) {
        std::size_t hx = mpz_get_ui(x.get_num_mpz_t()) * 31 + mpz_get_ui(x.get_den_mpz_t());
        if (sgn(x) < 0) hx = ~hx;
        h ^= hx + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::string Cyclo::str() const {
    if (is_rational()) return sd::str(c_[0]);
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (sd::is_zero(c_[k])) continue;
        if (!s.empty()) s += " + ";
        s += sd::str(c_[k]);
        if (k > 0) s += "*z" + std::to_string(N_) + "^" + std::to_string(k);
    }
    return s;
}

}  // namespace sd
