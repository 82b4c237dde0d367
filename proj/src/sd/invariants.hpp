#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sd/cyclo.hpp"
#include "sd/poly.hpp"

namespace sd {

// Square matrix, row-major.
struct CMat {
    int dim = 0;
    std::vector<Cyclo> a;

    CMat() = default;
    explicit CMat(int d) : dim(d), a(std::size_t(d) * d) {}
    static CMat identity(int d);
    static CMat diag(const std::vector<Cyclo>& d);
    // rows given as nested lists, optionally multiplied by s
    static CMat from_rows(const std::vector<std::vector<Cyclo>>& rows, const Cyclo& s = Cyclo(1));

    Cyclo& at(int i, int j) { return a[std::size_t(i) * dim + j]; }
    const Cyclo& at(int i, int j) const { return a[std::size_t(i) * dim + j]; }
    Cyclo trace() const;
    int conductor() const;  // lcm of the entries' conductors
    CMat lift(int N) const;
    std::string str() const;

    friend CMat operator*(const CMat& x, const CMat& y);
    friend bool operator==(const CMat& x, const CMat& y);
};

struct MatrixGroup {
    int dim = 0;
    int conductor = 1;
    std::vector<CMat> gens;
    std::vector<CMat> elements;  // identity first, then breadth-first order
    std::size_t order() const { return elements.size(); }
};

MatrixGroup generate_group(const std::vector<CMat>& gens, std::size_t cap = 100000);

// Groups used throughout: G2q (order 2, parameter q), G4 = <-I>, G16, G192,
// G48 (ternary), D12 (4H hwe), G120 (q=5 swe, icosahedral).
MatrixGroup named_group(const std::string& name, int q = 4);
std::vector<std::string> named_group_names();

// coefficients a_0..a_K of the Molien series
Series molien(const MatrixGroup& g, int K = 64);
// Numerator N(l) with series == N / prod(1 - l^d); throws NoMatch.
Series match_molien_form(const Series& s, const std::vector<int>& denoms);
// Coefficients of num / prod(1 - l^d) up to K.
Series expand_molien_form(const Series& num, const std::vector<int>& denoms, int K);

// f(A x) for each A, averaged
PolyC act(const PolyC& f, const CMat& A);
PolyC average(const PolyC& f, const MatrixGroup& g);
bool is_invariant(const PolyC& f, const MatrixGroup& g);

// Mini-language for matrix entries: rationals, i, w (zeta3), zN (zeta_N),
// sqrtQ, with + - * / and parentheses.
Cyclo parse_cyclo(const std::string& text);
// "a,b;c,d" -> 2x2 matrix
CMat parse_matrix(const std::string& text);

struct GleasonRing {
    std::string name;
    std::vector<PolyQ> primary;
    std::vector<PolyQ> secondary;  // {1} for free rings
    std::vector<std::string> primary_names;
    std::vector<std::string> secondary_names;
    std::string group;  // empty when no defining group is implemented
    Series phi_num;
    std::vector<int> phi_den;
};

// 2I, 2II, 3, 4H, 4H+, 4Z, 2I.shadow, SO1, SO7, SO17 (self-orthogonal modules)
GleasonRing named_ring(const std::string& name);
std::vector<std::string> named_ring_names();

struct RingTerm {
    int secondary = 0;
    std::vector<int> exps;
    Q coeff;
};
// Expresses w in products of the ring's basis; throws DegreeMismatch / NotInRing.
std::vector<RingTerm> gleason_decompose(const PolyQ& w, const GleasonRing& r);
PolyQ ring_element(const GleasonRing& r, const std::vector<RingTerm>& terms);
std::string ring_terms_str(const GleasonRing& r, const std::vector<RingTerm>& terms);

// Families 2II, 2I, 3, 4H.
PolyQ extremal_enumerator(int n, const std::string& family);
// Same, by triangular solve in the ring basis (2I included).
std::vector<Q> extremal_ring_coeffs(int n, const std::string& family);
Q extremal_leading_count(int n);

// kappa_ij with x^j f = sum_i kappa_ij g^i; f, g truncated series.
Q burmann_lagrange(const Series& f, const Series& g, int i, int j);
// c_i of the 2I expansion sum c_i phi2^(n/2-4i) theta8^i, via Burmann-Lagrange
Q extremal_c(int n, int i);
// sign of the coefficient after the leading one in the extremal enumerator
int next_coefficient_sign(int n, const std::string& family);
// true if the shadow transform of a 2I enumerator has integer, nonnegative coefficients
bool shadow_integral(const PolyQ& w);

}  // namespace sd
