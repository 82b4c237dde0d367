#pragma once

#include <string>
#include <vector>

namespace sd {

enum class Kind { PrimeField, F4, IntegerRing };
enum class Form { Euclidean, Hermitian, TraceHermitian };

using Vec = std::vector<int>;

// One code family's ambient algebra: symbols are indices 0..q-1 with
// precomputed tables.  F4 uses the order 0, 1, w, W (W = w^2).
class Alphabet {
public:
    Alphabet() : Alphabet(Kind::PrimeField, 2, Form::Euclidean) {}
    Alphabet(Kind kind, int q, Form form);

    static Alphabet f2() { return {Kind::PrimeField, 2, Form::Euclidean}; }
    static Alphabet f3() { return {Kind::PrimeField, 3, Form::Euclidean}; }
    static Alphabet f4h() { return {Kind::F4, 4, Form::Hermitian}; }
    static Alphabet f4e() { return {Kind::F4, 4, Form::Euclidean}; }
    static Alphabet f4plus() { return {Kind::F4, 4, Form::TraceHermitian}; }
    static Alphabet z(int m) { return {Kind::IntegerRing, m, Form::Euclidean}; }
    static Alphabet from_token(const std::string& tok);
    std::string token() const;
    // Family label used by the transform and bound tables: 2, 3, 4H, 4E, 4H+, 4Z, mZ, qE.
    std::string family() const;

    Kind kind() const { return kind_; }
    Form form() const { return form_; }
    int size() const { return q_; }
    bool is_field() const { return kind_ != Kind::IntegerRing; }
    bool frobenius() const { return kind_ == Kind::F4 && form_ != Form::Euclidean; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int conj(int a) const { return conj_[a]; }
    int inv(int a) const;  // fields only; -1 for non-units
    // F4 only: absolute trace to F2
    static int f4_trace(int a) { return a >= 2 ? 1 : 0; }

    // Coordinate form value; TraceHermitian returns 0 or 1.
    int ip_symbol(int a, int b) const;
    // Sum of coordinate forms in the value group of the form (F2 for TraceHermitian).
    int ip(const Vec& u, const Vec& v) const;

    int lee(int a) const;
    int norm(int a) const { int l = lee(a); return l * l; }
    static int hamming(const Vec& v);
    int lee(const Vec& v) const;
    int norm(const Vec& v) const;

    char to_char(int a) const;
    int from_char(char c) const;  // -1 when invalid
    std::string to_string(const Vec& v) const;
    Vec parse_vec(const std::string& s) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.kind_ == b.kind_ && a.q_ == b.q_ && a.form_ == b.form_;
    }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

private:
    Kind kind_;
    int q_;
    Form form_;
    std::vector<int> add_, mul_, neg_, conj_;
};

}  // namespace sd
