#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sd/alphabet.hpp"
#include "sd/num.hpp"

namespace sd {

constexpr std::uint64_t kDefaultCap = std::uint64_t(1) << 28;

struct Code {
    Alphabet A;
    int n = 0;
    std::vector<Vec> gens;
    bool additive = false;  // F2-span only (family 4H+)
};

Code make_code(const Alphabet& A, int n, std::vector<Vec> gens, bool additive = false);
// Rows given as symbol strings in the file alphabet (w, W for F4).
Code make_code(const std::string& token, const std::vector<std::string>& rows, bool additive = false);
Code additive_f4_code(int n, std::vector<Vec> gens);
Code parse_code(const std::string& text);
std::string format_code(const Code& c);
Code read_code_file(const std::string& path);

// Codewords are exactly the sums sum c_i * row_i with 0 <= c_i < order_i,
// each word once.
struct BasisRow {
    Vec row;
    int order;
};
std::vector<BasisRow> enum_basis(const Code& c);
Z code_size(const Code& c);
// Same code with an irredundant generating set.
Code reduced(const Code& c);

Code dual(const Code& c);
// Z4 only: dual from the standard-form closed formula.
Code z4_dual_closed_form(const Code& c);
bool contains(const Code& c, const Vec& v);
bool same_code(const Code& a, const Code& b);
bool is_self_orthogonal(const Code& c);
bool is_self_dual(const Code& c);

enum class CodeType { TypeII, StrictTypeI, NotSelfDual, NotApplicable };
const char* type_name(CodeType t);
CodeType classify_type(const Code& c);

struct Z4StandardForm {
    int n = 0, k1 = 0, k2 = 0;
    std::vector<Vec> X, Y1, Y2, Z;  // binary
    std::vector<int> perm;          // standard column j is original column perm[j]
    // generator matrix of the standard form, in original column order
    Code assemble() const;
};
Z4StandardForm z4_standard_form(const Code& c);
std::pair<Code, Code> residue_codes(const Code& c);
std::vector<Vec> gray_map(const Code& c, std::uint64_t cap = kDefaultCap);

enum class Metric { Hamming, Lee, Norm };
const char* metric_name(Metric m);
Metric parse_metric(const std::string& s);
int vec_weight(const Alphabet& A, const Vec& v, Metric m);

std::map<int, Z> weight_distribution(const Code& c, Metric m, std::uint64_t cap = kDefaultCap);
// 0 for the zero code.
int minimal_distance(const Code& c, Metric m, std::uint64_t cap = kDefaultCap);
std::vector<Vec> all_codewords(const Code& c, std::uint64_t cap = kDefaultCap);

// Field linear algebra on rows (fields only, including F4)
std::vector<Vec> field_rref(std::vector<Vec> rows, const Alphabet& A, std::vector<int>* pivots = nullptr);
std::vector<Vec> field_nullspace(const std::vector<Vec>& rows, int n, const Alphabet& A);

// Smith form over Z_m: U G V = diag(d).  Returns d (length min(k,n)), U, V and V^{-1} (mod m).
struct SmithForm {
    std::vector<long> d;
    std::vector<std::vector<long>> U, V, Vinv;
};
SmithForm smith_mod(const std::vector<Vec>& G, int n, int m);
// Some u with F u = t (mod m), if any.
bool solve_mod(const std::vector<Vec>& F, int n, const Vec& t, int m, Vec& u);

void check_cap(const Code& c, std::uint64_t cap);

// Visits every codeword once.  The word passed is valid only during the call.
template <class F>
void for_each_codeword(const Code& c, std::uint64_t cap, F&& f) {
    check_cap(c, cap);
    auto basis = enum_basis(c);
    const Alphabet& A = c.A;
    Vec word(c.n, 0);
    std::vector<int> digit(basis.size(), 0);
    f(word);
    if (basis.empty()) return;
    for (;;) {
        std::size_t i = 0;
        for (; i < basis.size(); ++i) {
            const Vec& r = basis[i].row;
            for (int j = 0; j < c.n; ++j)
                if (r[j]) word[j] = A.add(word[j], r[j]);
            if (++digit[i] < basis[i].order) break;
            digit[i] = 0;
        }
        if (i == basis.size()) return;
        f(word);
    }
}

}  // namespace sd
