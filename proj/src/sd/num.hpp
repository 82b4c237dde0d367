#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace sd {

using Z = mpz_class;
using Q = mpq_class;

// Every error raised by the library carries one of these codes; the C API maps
// them one-to-one onto its status values.
enum class Err {
    LengthMismatch = 2,
    UnsupportedAlphabet,
    UnsupportedFamily,
    TooLarge,
    NonRationalResult,
    NegativeCoefficient,
    NotSelfDual,
    NotSelfOrthogonal,
    PreconditionFailed,
    CapExceeded,
    NoMatch,
    NotInRing,
    DegreeMismatch,
    SingularG,
    LengthNotAdmissible,
    AlphabetMismatch,
    BadGlueLabel,
    NoD2mAtColumns,
    NotNested,
    NotTypeII,
    NotADivisor,
    Parse,
    Io,
    UnknownName,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
    Err code;
    Error(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

inline bool is_zero(const Q& q) { return sgn(q) == 0; }

Z binom(long n, long k);
// a choose k for rational a
Q gbinom(const Q& a, long k);
Z factorial(long n);
Z ipow(long b, unsigned long e);
Q qpow(const Q& b, long e);

std::string str(const Q& q);
std::string str(const Z& z);
Q parse_q(const std::string& s);

}  // namespace sd
