#pragma once

#include <string>

#include "sd/code.hpp"
#include "sd/poly.hpp"

namespace sd {

struct BoundReport {
    int n = 0;
    std::string family;
    int upper = 0;
    int lower_gv = -1;  // -1 when no GV bound is implemented for the family
    int extremal_d = 0;
    int epsilon = 0;  // the correction term used (eps, eps' or eps'')
    bool meeting_implies_type_ii = false;
    std::string metric = "hamming";
};

// Families: 2 / 2I, 2II, 3, 4H, 4E, 4H+ / 4H+I, 4H+II, qH / qE (e.g. 5E, 9H),
// 4Z / 4Z-norm (Type I norm bound), 4ZII (Type II norm bound).
int upper_bound(int n, const std::string& family);
BoundReport bound_report(int n, const std::string& family);
// Highest d a strictly Type I binary code can reach under the shadow bound
// combined with the classification of codes meeting 2[n/8]+2.
int strict_type_i_bound(int n);

int gv_distance(int n, const std::string& family);
PolyQ average_weight_enumerator(int n, const std::string& family);

struct AsymptoticConstants {
    double gv_delta;
    double krasikov_litsyn;
};
AsymptoticConstants asymptotic_constants();
double binary_entropy(double x);

// Family label used by the bound for a self-dual code (2I, 2II, 3, 4H, ...).
std::string bound_family(const Code& c);
bool is_extremal(const Code& c, std::uint64_t cap = kDefaultCap);
bool is_norm_extremal(const Code& c, std::uint64_t cap = kDefaultCap);

}  // namespace sd
