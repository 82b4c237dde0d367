#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "sd/constructions.hpp"
#include "sd/mass.hpp"

using namespace sd;

namespace {

std::vector<Z> type2_n32_orders() {
    std::istringstream in(catalog_file("type2_n32_aut.txt"));
    std::string line;
    std::vector<Z> out;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string label, comps, order;
        ls >> label >> comps >> order;
        out.push_back(parse_factored(order));
    }
    return out;
}

}  // namespace

TEST_CASE("total counts") {
    CHECK(total_count(8, "2") == 135);
    CHECK(total_count(8, "2II") == 30);
    CHECK(total_count(2, "2") == 1);
    CHECK_THROWS_AS(total_count(12, "2II"), Error);
    CHECK_THROWS_AS(total_count(3, "2"), Error);
    CHECK_THROWS_AS(total_count(8, "4ZII"), Error);
}

TEST_CASE("property: total count equals brute-force enumeration of binary self-dual codes") {
    for (int n = 2; n <= 12; n += 2) {
        CAPTURE(n);
        CHECK(Z(std::to_string(oracle::count_binary_self_dual(n, false))) == total_count(n, "2"));
    }
    CHECK(Z(std::to_string(oracle::count_binary_self_dual(8, true))) == total_count(8, "2II"));
}

TEST_CASE("property: total count equals brute-force enumeration of Z4 self-dual codes, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(Z(std::to_string(oracle::count_z4_self_dual(n))) == total_count(n, "4Z"));
    }
}

TEST_CASE("property: counts are positive integers") {
    for (int n = 2; n <= 40; n += 2) {
        CHECK(sgn(total_count(n, "2")) > 0);
        CHECK(sgn(total_count(n, "4H")) > 0);
        CHECK(sgn(total_count(n, "4Z")) > 0);
        if (n % 8 == 0) CHECK(sgn(total_count(n, "2II")) > 0);
        if (n % 4 == 0) CHECK(sgn(total_count(n, "3")) > 0);
    }
}

TEST_CASE("sigma") {
    for (int n = 1; n <= 20; ++n) CHECK(sigma(n, 0) == 1);
    CHECK(sigma(8, 1) == 71);
    CHECK(sigma(7, 1) == 35);
}

TEST_CASE("property: sigma equals brute-force counts of doubly-even self-orthogonal codes, n <= 10, k <= 3") {
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k <= 3 && 2 * k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            auto brute = oracle::count_binary_subspaces(n, k, [](std::uint32_t r) { return __builtin_popcount(r) % 4 == 0; });
            CHECK(Z(std::to_string(brute)) == sigma(n, k));
        }
}

TEST_CASE("property: the self-dual tower recursion holds on brute-force counts") {
    // s(n,k): self-orthogonal [n,k] codes containing 1^n
    for (int n = 4; n <= 10; n += 2) {
        std::vector<Z> s(n / 2 + 1);
        std::uint32_t ones = (1u << n) - 1;
        for (int k = 1; k <= n / 2; ++k) {
            std::uint64_t cnt = 0;
            oracle::count_binary_subspaces(
                n, k, [](std::uint32_t r) { return __builtin_popcount(r) % 2 == 0; },
                [&](const std::vector<std::uint32_t>& rows) {
                    for (auto w : oracle::span_bits(rows))
                        if (w == ones) {
                            ++cnt;
                            return;
                        }
                });
            s[k] = Z(std::to_string(cnt));
        }
        CHECK(s[1] == 1);
        for (int k = 1; k < n / 2; ++k) CHECK(s[k + 1] * ((Z(1) << k) - 1) == s[k] * ((Z(1) << (n - 2 * k)) - 1));
        CHECK(s[n / 2] == total_count(n, "2"));
    }
}

TEST_CASE("group orders") {
    CHECK(group_order(8, "2") == 40320);
    CHECK(group_order(2, "4H") == 36);
    CHECK(group_order(3, "4Z") == 48);
    CHECK_THROWS_AS(group_order(3, "9Q"), Error);
}

TEST_CASE("mass identities") {
    auto m8 = verify_mass(8, "2", {384, 1344});
    CHECK(m8.equal);
    CHECK(m8.lhs == Q(3, 896));
    auto m2 = verify_mass(2, "2", {2});
    CHECK(m2.equal);
    CHECK(m2.rhs == Q(1, 2));
    auto orders = type2_n32_orders();
    CHECK(orders.size() == 85);
    auto m32 = verify_mass(32, "2II", orders);
    CHECK(m32.equal);
    CHECK(m32.rhs == Q(Z("391266122896364123"), Z("532283035423762022400")));
    CHECK_FALSE(verify_mass(8, "2", {384}).equal);
}

TEST_CASE("factored integers") {
    CHECK(parse_factored("2^3*3*5^2") == 600);
    CHECK(parse_factored("1344") == 1344);
    CHECK_THROWS_AS(parse_factored("2^*3"), Error);
}
