#pragma once

#include <map>
#include <string>
#include <vector>

#include "sd/code.hpp"
#include "sd/cyclo.hpp"
#include "sd/poly.hpp"

namespace sd {

enum class EnumKind { Hwe, Swe, Cwe };
const char* kind_name(EnumKind k);
EnumKind parse_kind(const std::string& s);

// Family labels 2, 3, 4H, 4E, 4H+, 4Z, <m>Z, <p>E; alphabet tokens are accepted too.
Alphabet family_alphabet(const std::string& family);

// Symbol classes identified by the swe: F4 joins w and W, Z_m joins j and -j.
int swe_class(const Alphabet& A, int a);
int swe_classes(const Alphabet& A);

PolyQ hwe(const Code& c, std::uint64_t cap = kDefaultCap);
PolyQ cwe(const Code& c, std::uint64_t cap = kDefaultCap);
PolyQ swe(const Code& c, std::uint64_t cap = kDefaultCap);
PolyQ enumerator(const Code& c, EnumKind k, std::uint64_t cap = kDefaultCap);
// Enumerator of an arbitrary word list (e.g. a shadow).
PolyQ words_enumerator(const Alphabet& A, int n, const std::vector<Vec>& words, EnumKind k);
PolyQ cwe_to_swe(const PolyQ& cwe, const Alphabet& A);
PolyQ cwe_to_hwe(const PolyQ& cwe);

// Image of variable a is sum_b M[a][b] * var_b.
struct LinearSub {
    std::vector<std::vector<Cyclo>> M;
};
LinearSub macwilliams_sub(const Alphabet& A, EnumKind k);
LinearSub shadow_sub(const Alphabet& A, EnumKind k);
// Substitutes then multiplies by scale; throws NonRationalResult if the result is not rational.
PolyQ apply_sub(const PolyQ& w, const LinearSub& s, const Q& scale);

PolyQ macwilliams(const PolyQ& w, const std::string& family, EnumKind k, const Z& size_c);
// Enumerator of the shadow of a self-orthogonal code with enumerator w.
PolyQ shadow_enumerator(const PolyQ& w, const std::string& family, EnumKind k);

Z krawtchouk(int k, int x, int n, int q);
std::map<int, Q> dual_distribution(const std::map<int, Z>& A, int n, int q);

// (x, y, X, Y): left block of `left` coordinates, then the rest.
PolyQ split_enumerator(const Code& c, int left, std::uint64_t cap = kDefaultCap);
// sum over u in C of x^wt(u) z^wt(u meet v)
PolyQ jacobi(const Code& c, const Vec& v, std::uint64_t cap = kDefaultCap);

// Coefficients of q^0..q^terms of W(theta3(2z), theta2(2z)).
std::vector<Z> theta_series(const PolyQ& w, int terms);

}  // namespace sd
