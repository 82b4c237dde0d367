#pragma once

#include <string>
#include <vector>

#include "sd/num.hpp"

namespace sd {

// Number of distinct self-dual codes of length n.  Families: 2, 2II, 3, 4H,
// 4E, 4H+, 4H+II, qH (q a square), qE, 4Z.
Z total_count(int n, const std::string& family);
// doubly-even self-orthogonal binary [n, k] codes
Z sigma(int n, int k);
Z group_order(int n, const std::string& family);

struct MassCheck {
    Q lhs;  // sum of 1/|Aut|
    Q rhs;  // T_n / |G|
    bool equal;
};
MassCheck verify_mass(int n, const std::string& family, const std::vector<Z>& aut_orders);

// "2^30*3^6*5^3" or plain digits
Z parse_factored(const std::string& s);

}  // namespace sd
