#include "sd/num.hpp"

namespace sd {

const char* err_name(Err e) {
    switch (e) {
        case Err::LengthMismatch: return "LengthMismatch";
        case Err::UnsupportedAlphabet: return "UnsupportedAlphabet";
        case Err::UnsupportedFamily: return "UnsupportedFamily";
        case Err::TooLarge: return "TooLarge";
        case Err::NonRationalResult: return "NonRationalResult";
        case Err::NegativeCoefficient: return "NegativeCoefficient";
        case Err::NotSelfDual: return "NotSelfDual";
        case Err::NotSelfOrthogonal: return "NotSelfOrthogonal";
        case Err::PreconditionFailed: return "PreconditionFailed";
        case Err::CapExceeded: return "CapExceeded";
        case Err::NoMatch: return "NoMatch";
        case Err::NotInRing: return "NotInRing";
        case Err::DegreeMismatch: return "DegreeMismatch";
        case Err::SingularG: return "SingularG";
        case Err::LengthNotAdmissible: return "LengthNotAdmissible";
        case Err::AlphabetMismatch: return "AlphabetMismatch";
        case Err::BadGlueLabel: return "BadGlueLabel";
        case Err::NoD2mAtColumns: return "NoD2mAtColumns";
        case Err::NotNested: return "NotNested";
        case Err::NotTypeII: return "NotTypeII";
        case Err::NotADivisor: return "NotADivisor";
        case Err::Parse: return "Parse";
        case Err::Io: return "Io";
        case Err::UnknownName: return "UnknownName";
    }
    return "Unknown";
}

Z binom(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

Q gbinom(const Q& a, long k) {
    if (k < 0) return 0;
    Q r = 1;
    for (long j = 0; j < k; ++j) r = r * (a - j) / (j + 1);
    return r;
}

Z factorial(long n) {
    Z r;
    mpz_fac_ui(r.get_mpz_t(), (unsigned long)n);
    return r;
}

Z ipow(long b, unsigned long e) {
    Z r, base = b;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Q qpow(const Q& b, long e) {
    Q r = 1;
    Q base = e < 0 ? Q(1 / b) : b;
    for (long k = e < 0 ? -e : e; k > 0; --k) r *= base;
    return r;
}

std::string str(const Q& q) { return q.get_str(); }
std::string str(const Z& z) { return z.get_str(); }

Q parse_q(const std::string& s) {
    Q r;
    if (s.empty() || r.set_str(s, 10) != 0) throw Error(Err::Parse, "bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace sd
