#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sd/num.hpp"

namespace sd {

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1),
// reduced modulo the N-th cyclotomic polynomial.  The representation is
// canonical for a fixed conductor; mixed conductors are lifted to the lcm.
class Cyclo {
public:
    Cyclo();
    Cyclo(const Q& r);  // NOLINT
    Cyclo(long r);      // NOLINT

    static Cyclo zeta(int N, long k = 1);
    // positive square root of q > 0; odd prime factors via Gauss sums
    static Cyclo sqrt_of(int q);
    static Cyclo i() { return zeta(4); }

    int conductor() const { return N_; }
    const std::vector<Q>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Q rational() const;  // throws NonRationalResult

    Cyclo lift(int M) const;  // M must be a multiple of N
    Cyclo conj() const;       // complex conjugation
    Cyclo inv() const;

    Cyclo operator-() const;
    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }
    Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
    Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
    Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    std::size_t hash() const;
    std::string str() const;

    // Builds sum p[k] zeta_N^k for arbitrary exponents k >= 0.
    static Cyclo from_powers(int N, const std::vector<Q>& p);

private:
    static Cyclo sqrt_prime(int p);

    int N_ = 1;
    std::vector<Q> c_;
};

inline bool is_zero(const Cyclo& c) { return c.is_zero(); }

int euler_phi(int n);
long lcm_int(long a, long b);
// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_poly(int n);

}  // namespace sd
