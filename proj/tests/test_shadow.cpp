#include <doctest.h>

#include "oracles.hpp"
#include "sd/constructions.hpp"
#include "sd/shadow.hpp"
#include "sd/wenum.hpp"

using namespace sd;

namespace {

const Code& cat(const std::string& n) { return catalog_entry(n).code; }

Code repetition(int n) { return make_code(Alphabet::f2(), n, {Vec(n, 1)}); }

Code i2_power(int m) {
    Code c = cat("i2");
    for (int i = 1; i < m; ++i) c = direct_sum(c, cat("i2"));
    return c;
}

std::set<Vec> as_set(const std::vector<Vec>& v) { return {v.begin(), v.end()}; }

// shadow of a self-dual code from the defining property alone, over the whole space
std::set<Vec> brute_shadow_binary(const Code& c) {
    auto words = all_codewords(c);
    std::set<Vec> s;
    oracle::for_each_vector(2, c.n, [&](const Vec& u) {
        for (const auto& v : words) {
            int meet = 0;
            for (int i = 0; i < c.n; ++i) meet += u[i] & v[i];
            if (meet % 2 != (oracle::hamming(v) / 2) % 2) return;
        }
        s.insert(u);
    });
    return s;
}

}  // namespace

TEST_CASE("doubly-even subcode") {
    CHECK(code_size(doubly_even_subcode(repetition(6))) == 1);
    Code d12p = glue({component("d12")}, {"a"}).code;
    Code c0 = doubly_even_subcode(d12p);
    CHECK(code_size(c0) * 2 == code_size(d12p));
    std::size_t de = 0;
    for (const auto& w : all_codewords(d12p)) de += oracle::hamming(w) % 4 == 0;
    CHECK(Z(de) == code_size(c0));
    CHECK(same_code(doubly_even_subcode(cat("e8")), cat("e8")));
    CHECK_THROWS_AS(doubly_even_subcode(cat("g23")), Error);
}

TEST_CASE("shadow examples") {
    auto s = as_set(shadow_set(repetition(6)));
    std::set<Vec> odd;
    oracle::for_each_vector(2, 6, [&](const Vec& v) {
        if (oracle::hamming(v) % 2) odd.insert(v);
    });
    CHECK(s == odd);

    Code c = i2_power(3);
    Vec t{1, 0, 1, 0, 1, 0};
    std::set<Vec> want;
    for (auto w : all_codewords(c)) {
        for (int i = 0; i < 6; ++i) w[i] ^= t[i];
        want.insert(w);
    }
    CHECK(as_set(shadow_set(c)) == want);

    // shadow of g22: the g24 words that differ on the two deleted coordinates
    std::set<Vec> rest;
    for (const auto& w : all_codewords(cat("g24")))
        if (w[0] != w[1]) rest.insert(Vec(w.begin() + 2, w.end()));
    CHECK(as_set(shadow_set(cat("g22"))) == rest);
    CHECK_THROWS_AS(shadow_set(cat("g23")), Error);
}

TEST_CASE("property: the two shadow routes agree with the brute-force shadow") {
    std::vector<Code> cs{repetition(2), repetition(6), repetition(10), i2_power(4), glue({component("d12")}, {"a"}).code,
                         direct_sum(cat("e8"), cat("i2")), cat("e8")};
    for (const auto& c : cs) {
        auto b = brute_shadow_binary(c);
        CHECK(as_set(shadow_by_cosets(c)) == b);
        CHECK(as_set(shadow_by_parity(c)) == b);
    }
}

TEST_CASE("coset decomposition") {
    Code c = glue({component("d12")}, {"a"}).code;
    auto cd = coset_decomposition(c);
    CHECK_FALSE(cd.type_ii);
    Code c0 = cd.c0;
    CHECK(oracle::hamming(cd.u0) == 0);
    CHECK(contains(c, cd.u2));
    CHECK_FALSE(contains(c0, cd.u2));
    auto s = as_set(shadow_set(c));
    CHECK(s.count(cd.u1));
    CHECK(s.count(cd.u3));
    CHECK(cd.u1 == *s.begin());  // least shadow word
    Vec sum(c.n);
    for (int i = 0; i < c.n; ++i) sum[i] = cd.u1[i] ^ cd.u2[i];
    CHECK(sum == cd.u3);
    CHECK(coset_decomposition(cat("e8")).type_ii);
}

TEST_CASE("property: shadow enumerators equal the transform for self-dual catalog codes in families 2, 4H+, 4Z") {
    for (const auto& e : catalog()) {
        const Code& c = e.code;
        if (e.stub || !has_shadow(c) || code_size(c) > Z(1) << 20 || !is_self_dual(c)) continue;
        CAPTURE(e.name);
        auto s = shadow_set(c);
        CHECK(Z(s.size()) == code_size(c));
        EnumKind k = c.A.kind() == Kind::IntegerRing ? EnumKind::Swe : EnumKind::Hwe;
        std::string fam = c.additive ? "4H+" : c.A.family();
        CHECK(words_enumerator(c.A, c.n, s, k) == shadow_enumerator(enumerator(c, k), fam, k));
        for (const auto& u : s) {
            if (c.additive) CHECK((oracle::hamming(u) - c.n) % 2 == 0);
            else if (c.A.size() == 2) CHECK(((oracle::hamming(u) - c.n / 2) % 4 + 4) % 4 == 0);
            else CHECK(((c.A.norm(u) - c.n) % 8 + 8) % 8 == 0);
        }
    }
}

TEST_CASE("property: the shadow is closed under adding dual codewords") {
    for (auto c : {cat("h5"), cat("i1.F4H+"), glue({component("d12")}, {"a"}).code, cat("o8"), cat("E7+"), cat("D4+a")}) {
        auto s = as_set(shadow_set(c));
        Code d = dual(c);
        for (const auto& u : s)
            for (const auto& g : d.gens) {
                Vec v(c.n);
                for (int i = 0; i < c.n; ++i) v[i] = c.A.add(u[i], g[i]);
                CHECK(s.count(v));
            }
    }
}

TEST_CASE("neighbors") {
    auto [a, b] = neighbors(i2_power(8));
    CHECK(classify_type(a) == CodeType::TypeII);
    CHECK(classify_type(b) == CodeType::TypeII);
    CHECK(a.n == 16);
    CHECK_FALSE(same_code(a, b));
    CHECK(hwe(a) == hwe(b));
    CHECK_THROWS_AS(neighbors(glue({component("d12")}, {"a"}).code), Error);
    CHECK_THROWS_AS(neighbors(cat("e8")), Error);
}
