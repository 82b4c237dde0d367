#include "sd/alphabet.hpp"

#include <cctype>

#include "sd/num.hpp"

namespace sd {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// F4 multiplication on indices 0,1,w,W via logs 1->0, w->1, W->2
int f4_mul(int a, int b) {
    if (a == 0 || b == 0) return 0;
    int l = (a - 1 + b - 1) % 3;
    return l + 1;
}

}  // namespace

Alphabet::Alphabet(Kind kind, int q, Form form) : kind_(kind), q_(q), form_(form) {
    // Z2 and Z3 are the binary and ternary families
    if (kind_ == Kind::IntegerRing && (q == 2 || q == 3)) kind_ = Kind::PrimeField;
    kind = kind_;
    if (form != Form::Euclidean && kind != Kind::F4)
        throw Error(Err::UnsupportedAlphabet, "Hermitian forms need F4");
    if (kind == Kind::PrimeField && !is_prime(q)) throw Error(Err::UnsupportedAlphabet, "F" + std::to_string(q) + " is not a prime field");
    if (kind == Kind::F4 && q != 4) throw Error(Err::UnsupportedAlphabet, "F4 must have 4 symbols");
    if (kind == Kind::IntegerRing && (q < 2 || q > 36)) throw Error(Err::UnsupportedAlphabet, "Z_m needs 2 <= m <= 36");
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    conj_.resize(q);
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (kind == Kind::F4) {
                add_[a * q + b] = a ^ b;
                mul_[a * q + b] = f4_mul(a, b);
            } else {
                add_[a * q + b] = (a + b) % q;
                mul_[a * q + b] = (a * b) % q;
            }
        }
        neg_[a] = kind == Kind::F4 ? a : (q - a) % q;
        conj_[a] = frobenius() ? f4_mul(a, a) : a;
    }
}

Alphabet Alphabet::from_token(const std::string& tok) {
    if (tok == "F4H") return f4h();
    if (tok == "F4E") return f4e();
    if (tok == "F4H+") return f4plus();
    auto num = [&](std::size_t from) {
        std::string d = tok.substr(from);
        if (d.empty()) throw Error(Err::UnsupportedAlphabet, "bad alphabet token " + tok);
        for (char c : d)
            if (!std::isdigit((unsigned char)c)) throw Error(Err::UnsupportedAlphabet, "bad alphabet token " + tok);
        return std::stoi(d);
    };
    if (tok.size() >= 2 && tok[0] == 'F') {
        int p = num(1);
        if (p == 4) throw Error(Err::UnsupportedAlphabet, "F4 needs a form: F4H, F4E or F4H+");
        return {Kind::PrimeField, p, Form::Euclidean};
    }
    if (tok.size() >= 2 && tok[0] == 'Z') return z(num(1));
    throw Error(Err::UnsupportedAlphabet, "bad alphabet token " + tok);
}

std::string Alphabet::token() const {
    switch (kind_) {
    case Kind::PrimeField: return "F" + std::to_string(q_);
    case Kind::IntegerRing: return "Z" + std::to_string(q_);
    case Kind::F4:
        return form_ == Form::Hermitian ? "F4H" : form_ == Form::Euclidean ? "F4E" : "F4H+";
    }
    return "?";
}

std::string Alphabet::family() const {
    switch (kind_) {
    case Kind::PrimeField:
        if (q_ == 2) return "2";
        if (q_ == 3) return "3";
        return std::to_string(q_) + "E";
    case Kind::IntegerRing:
        return q_ == 4 ? "4Z" : std::to_string(q_) + "Z";
    case Kind::F4:
        return form_ == Form::Hermitian ? "4H" : form_ == Form::Euclidean ? "4E" : "4H+";
    }
    return "?";
}

int Alphabet::inv(int a) const {
    for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    return -1;
}

int Alphabet::ip_symbol(int a, int b) const {
    switch (form_) {
    case Form::Euclidean: return mul(a, b);
    case Form::Hermitian: return mul(a, conj(b));
    case Form::TraceHermitian: return f4_trace(mul(a, conj(b)));
    }
    return 0;
}

int Alphabet::ip(const Vec& u, const Vec& v) const {
    if (u.size() != v.size()) throw Error(Err::LengthMismatch, "inner product of vectors of different lengths");
    int s = 0;
    if (form_ == Form::TraceHermitian) {
        for (std::size_t i = 0; i < u.size(); ++i) s ^= ip_symbol(u[i], v[i]);
        return s;
    }
    for (std::size_t i = 0; i < u.size(); ++i) s = add(s, ip_symbol(u[i], v[i]));
    return s;
}

int Alphabet::lee(int a) const {
    if (kind_ == Kind::F4) throw Error(Err::UnsupportedAlphabet, "Lee weight is not defined over F4");
    return std::min(a, q_ - a);
}

int Alphabet::hamming(const Vec& v) {
    int w = 0;
    for (int a : v) w += a != 0;
    return w;
}

int Alphabet::lee(const Vec& v) const {
    int w = 0;
    for (int a : v) w += lee(a);
    return w;
}

int Alphabet::norm(const Vec& v) const {
    int w = 0;
    for (int a : v) w += norm(a);
    return w;
}

char Alphabet::to_char(int a) const {
    if (kind_ == Kind::F4) return "01wW"[a];
    return a < 10 ? char('0' + a) : char('a' + a - 10);
}

int Alphabet::from_char(char c) const {
    int a = -1;
    if (kind_ == Kind::F4) {
        if (c == '0') a = 0;
        else if (c == '1') a = 1;
        else if (c == 'w') a = 2;
        else if (c == 'W') a = 3;
    } else if (c >= '0' && c <= '9') {
        a = c - '0';
    } else if (c >= 'a' && c <= 'z') {
        a = c - 'a' + 10;
    }
    return a < q_ ? a : -1;
}

std::string Alphabet::to_string(const Vec& v) const {
    std::string s;
    for (int a : v) s += to_char(a);
    return s;
}

Vec Alphabet::parse_vec(const std::string& s) const {
    Vec v;
    for (char c : s) {
        if (std::isspace((unsigned char)c)) continue;
        int a = from_char(c);
        if (a < 0) throw Error(Err::Parse, std::string("symbol '") + c + "' not in " + token());
        v.push_back(a);
    }
    return v;
}

}  // namespace sd
