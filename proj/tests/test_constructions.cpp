#include <doctest.h>

#include "oracles.hpp"
#include "sd/bounds.hpp"
#include "sd/constructions.hpp"
#include "sd/wenum.hpp"

using namespace sd;

namespace {

Code cat(const std::string& n) { return catalog_entry(n).code; }

std::set<Vec> words(const Code& c) {
    auto w = all_codewords(c);
    return {w.begin(), w.end()};
}

// Definition-level subtraction: words agreeing on every column pair, with
// those columns removed.
std::set<Vec> subtract_oracle(const Code& b, const std::vector<int>& cols) {
    std::set<Vec> out;
    std::set<int> used(cols.begin(), cols.end());
    for_each_codeword(b, kDefaultCap, [&](const Vec& v) {
        for (std::size_t j = 0; j < cols.size(); j += 2)
            if (v[cols[j]] != v[cols[j + 1]]) return;
        Vec r;
        for (int k = 0; k < b.n; ++k)
            if (!used.count(k)) r.push_back(v[k]);
        out.insert(r);
    });
    return out;
}

struct Dists {
    int h = 1 << 30, l = 1 << 30, nm = 1 << 30;
};
Dists z4_dists(const Code& c) {
    Dists d;
    for_each_codeword(c, kDefaultCap, [&](const Vec& v) {
        int h = 0, l = 0, nm = 0;
        for (int x : v) {
            h += x != 0;
            l += x == 2 ? 2 : x != 0;
            nm += x == 2 ? 4 : x != 0;
        }
        if (!h) return;
        d.h = std::min(d.h, h);
        d.l = std::min(d.l, l);
        d.nm = std::min(d.nm, nm);
    });
    return d;
}

Code binary(std::vector<std::string> rows) { return make_code("F2", rows); }

}  // namespace

TEST_CASE("catalog entries meet their recorded expectations") {
    int checked = 0;
    for (const auto& e : catalog()) {
        if (e.stub) continue;
        CAPTURE(e.name);
        const Code& c = e.code;
        auto has = [&](const char* k) { return e.expect.count(k) > 0; };
        auto get = [&](const char* k) { return e.expect.at(k); };
        if (has("self_dual")) CHECK(is_self_dual(c) == (get("self_dual") == "1"));
        if (has("size")) CHECK(str(code_size(c)) == get("size"));
        // enumeration work is bounded; the largest entries are covered elsewhere
        if (code_size(c) > Z(1) << 26) continue;
        if (has("hwe")) CHECK(hwe(c) == parse_poly(get("hwe")));
        if (has("swe")) CHECK(swe(c) == parse_poly(get("swe"), swe(c).names()));
        if (has("cwe")) CHECK(cwe(c) == parse_poly(get("cwe"), cwe(c).names()));
        if (has("d")) CHECK(minimal_distance(c, Metric::Hamming) == std::stoi(get("d")));
        if (has("d_hamming")) CHECK(minimal_distance(c, Metric::Hamming) == std::stoi(get("d_hamming")));
        if (has("d_lee")) CHECK(minimal_distance(c, Metric::Lee) == std::stoi(get("d_lee")));
        if (has("d_norm")) CHECK(minimal_distance(c, Metric::Norm) == std::stoi(get("d_norm")));
        if (has("type")) CHECK(classify_type(c) == (get("type") == "II" ? CodeType::TypeII : CodeType::StrictTypeI));
        ++checked;
    }
    CHECK(checked > 40);
}

TEST_CASE("double circulant catalog entries match their generator rows") {
    for (const auto& e : catalog()) {
        if (e.dc_form.empty()) continue;
        CAPTURE(e.name);
        CHECK(same_code(e.code, double_circulant(parse_dc_form(e.dc_form), e.dc_hex, e.code.n)));
    }
}

TEST_CASE("direct sum and tensor extension") {
    Code s = direct_sum(cat("e8"), cat("i2"));
    CHECK(s.n == 10);
    CHECK(is_self_dual(s));
    CHECK(hwe(s) == hwe(cat("e8")) * hwe(cat("i2")));
    CHECK_THROWS_AS(direct_sum(cat("e8"), cat("t4")), Error);

    Code h = tensor_extend(cat("e8"), Alphabet::f4h());
    Code e = tensor_extend(cat("e8"), Alphabet::f4e());
    CHECK(is_self_dual(h));
    CHECK(is_self_dual(e));
    CHECK(minimal_distance(tensor_extend(cat("g24"), Alphabet::f4h()), Metric::Hamming, 1ull << 25) == 8);
    CHECK_THROWS_AS(tensor_extend(cat("t4"), Alphabet::f4h()), Error);
}

TEST_CASE("glue") {
    auto d6 = component("d6");
    auto r = glue({d6, d6, d6}, {"abc", "cab", "bbb"});
    CHECK(r.self_dual);
    CHECK(r.code.n == 18);
    CHECK(minimal_distance(r.code, Metric::Hamming) == 4);

    auto r2 = glue({component("d10"), component("e7"), component("f1")}, {"a0A", "cd0"});
    CHECK(r2.self_dual);
    CHECK(r2.code.n == 18);
    CHECK(minimal_distance(r2.code, Metric::Hamming) == 4);

    auto r3 = glue({component("e8")}, {});
    CHECK(r3.self_dual);
    CHECK(hwe(r3.code) == hwe(cat("e8")));

    auto partial = glue({d6, d6, d6}, {"abc"});
    CHECK_FALSE(partial.self_dual);
    CHECK(is_self_orthogonal(partial.code));

    CHECK_THROWS_AS(glue({d6, d6, d6}, {"abz"}), Error);
    CHECK_THROWS_AS(glue({d6, d6}, {"abc"}), Error);
    CHECK_THROWS_AS(component("q9"), Error);
}

TEST_CASE("subtraction") {
    Code g22 = subtract(cat("g24"), {0, 1});
    CHECK(words(g22) == words(cat("g22")));

    Code e8i2 = direct_sum(cat("e8"), cat("i2"));
    CHECK(words(subtract(e8i2, {8, 9})) == words(cat("e8")));

    CHECK_THROWS_AS(subtract(cat("g24"), {0, 1, 2, 3}), Error);
    CHECK_THROWS_AS(subtract(cat("e7"), {0, 1}), Error);
    CHECK_THROWS_AS(subtract(cat("g24"), {0}), Error);
}

TEST_CASE("property: subtraction agrees with the definition-level oracle") {
    auto d6 = component("d6");
    Code c = glue({d6, d6, d6}, {"abc", "cab", "bbb"}).code;
    for (int block = 0; block < 3; ++block) {
        std::vector<int> cols;
        for (int k = 0; k < 6; ++k) cols.push_back(6 * block + k);
        Code s = subtract(c, cols);
        CHECK(s.n == 12);
        CHECK(is_self_dual(s));
        CHECK(words(s) == subtract_oracle(c, cols));
    }
    // undoing i2 (+) C
    for (const char* name : {"i2", "e8", "g22", "h24+"}) {
        CAPTURE(name);
        Code b = direct_sum(cat("i2"), cat(name));
        CHECK(words(subtract(b, {0, 1})) == words(cat(name)));
    }
    // a weight-2 word on the pair splits the code as i2 (+) C'
    Code g = direct_sum(cat("i2"), cat("g22"));
    Code s = subtract(g, {0, 1});
    CHECK(words(s) == words(cat("g22")));
}

TEST_CASE("Z4 codes from binary pairs") {
    Code e8 = cat("e8");
    Code a = z4_from_binary_pair(e8, e8);
    CHECK(is_self_dual(a));
    CHECK(hwe(residue_codes(a).first) == hwe(e8));

    Code zero = make_code(Alphabet::f2(), 4, {});
    Code full = make_code(Alphabet::f2(), 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    Code twos = z4_from_binary_pair(zero, full);
    CHECK(code_size(twos) == 16);
    for (const auto& w : all_codewords(twos))
        for (int x : w) CHECK((x == 0 || x == 2));

    Code r = binary({"1111"});
    Code p = z4_from_binary_pair(r, dual(r));
    CHECK(code_size(p) == 16);
    CHECK(is_self_orthogonal(p));

    CHECK_THROWS_AS(z4_from_binary_pair(e8, cat("g24")), Error);
    CHECK_THROWS_AS(z4_from_binary_pair(binary({"1100"}), r), Error);
}

TEST_CASE("lifting Type II codes") {
    Code l = lift_to_z4(cat("e8"));
    CHECK(is_self_dual(l));
    for (const auto& w : all_codewords(l)) CHECK(vec_weight(l.A, w, Metric::Norm) % 8 == 0);
    CHECK(hwe(residue_codes(l).first) == hwe(cat("e8")));
    CHECK_THROWS_AS(lift_to_z4(cat("i2")), Error);
    CHECK_THROWS_AS(lift_to_z4(cat("e7")), Error);
    CHECK(classify_type(lift_to_z4(cat("g24"))) == CodeType::TypeII);
}

TEST_CASE("Graeffe lifting") {
    IntPoly g = parse_int_poly("1+x+x^5+x^6+x^7+x^9+x^11");
    IntPoly l = graeffe_lift(g, 23);
    CHECK(l == parse_int_poly("3+x+2x^4+3x^5+3x^6+3x^7+3x^9+2x^10+x^11"));
    IntPoly xn(24, 0);
    xn[0] = 3, xn[23] = 1;
    IntPoly rem = poly_mod(xn, l, 4);
    for (int c : rem) CHECK(c == 0);
    for (std::size_t i = 0; i < l.size(); ++i) CHECK((l[i] - g[i] + 4) % 2 == 0);
    CHECK(graeffe_lift(parse_int_poly("1+x"), 5) == parse_int_poly("3+x"));
    CHECK_THROWS_AS(graeffe_lift(parse_int_poly("1+x+x^3"), 5), Error);

    Code G = cyclic_code(Alphabet::z(4), l, 23, true);
    CHECK(G.n == 24);
    CHECK(is_self_dual(G));
    CHECK(swe(G) == swe(cat("G24")));
}

TEST_CASE("polynomial strings") {
    CHECK(parse_int_poly("1100011") == parse_int_poly("1+x+x^5+x^6"));
    CHECK(parse_int_poly(poly_str({3, 1, 0, 2})) == IntPoly{3, 1, 0, 2});
}

TEST_CASE("shortening Z4 codes") {
    Code o8 = cat("o8");
    for (int i = 0; i < 8; ++i) {
        Code s = shorten_z4(o8, i);
        CHECK(s.n == 7);
        CHECK(is_self_dual(s));
    }
    Code s1 = shorten_z4(cat("i1.Z4"), 0);
    CHECK(s1.n == 0);
    CHECK_THROWS_AS(shorten_z4(cat("e8"), 0), Error);
    CHECK_THROWS_AS(shorten_z4(o8, 8), Error);
}

TEST_CASE("shortening chain from G24") {
    const int expect[5][3] = {{7, 10, 12}, {6, 8, 8}, {5, 8, 8}, {4, 8, 8}, {3, 6, 8}};
    Code c = cat("G24");
    for (int step = 0; step < 5; ++step) {
        c = shorten_z4(c, 0);
        CAPTURE(c.n);
        CHECK(is_self_dual(c));
        Dists d = z4_dists(c);
        CHECK(d.h == expect[step][0]);
        CHECK(d.l == expect[step][1]);
        CHECK(d.nm == expect[step][2]);
    }
}

TEST_CASE("double circulants") {
    Code g = double_circulant(DcForm::Bordered, "B7", 24);
    CHECK(hwe(g) == hwe(cat("g24")));
    Code g22 = double_circulant(DcForm::Pure, "97", 22);
    CHECK(is_self_dual(g22));
    CHECK(minimal_distance(g22, Metric::Hamming) == 6);
    Code d5 = double_circulant(parse_dc_form("D2"), "57EB", 40);
    CHECK(classify_type(d5) == CodeType::TypeII);
    CHECK(minimal_distance(d5, Metric::Hamming) == 8);
    CHECK_FALSE(is_self_dual(double_circulant(DcForm::Pure, "31C4D", 50)));
    CHECK(parse_dc_form("bordered") == DcForm::Bordered);
    CHECK_THROWS_AS(parse_dc_form("D3"), Error);
}

TEST_CASE("tetrad and Klemm codes") {
    for (int m = 2; m <= 6; ++m) {
        CAPTURE(m);
        Code s = z4_tetrad_code('S', m);
        CHECK(s.n == 2 * m);
        CHECK(is_self_dual(s));
        for (char v : {'D', 'O', 'P'}) CHECK(is_self_orthogonal(z4_tetrad_code(v, m)));
    }
    CHECK_THROWS_AS(z4_tetrad_code('X', 3), Error);
    for (int m = 1; m <= 4; ++m) {
        Code k = klemm_code(m);
        CHECK(k.n == 4 * m);
        CHECK(is_self_dual(k));
    }
    auto sf = z4_standard_form(klemm_code(1));
    CHECK(sf.k1 == 1);
    CHECK(sf.k2 == 2);
}

TEST_CASE("odd Golay code differs from g24 in one generator") {
    Code h = cat("h24+");
    CHECK(classify_type(h) == CodeType::StrictTypeI);
    Code v = h;
    for (int k = 0; k < 4; ++k) v.gens.back()[k] ^= 1;
    CHECK(hwe(v) == hwe(cat("g24")));
}

TEST_CASE("catalog lookups") {
    CHECK_THROWS_AS(catalog_entry("nope"), Error);
    CHECK(catalog_entry("M88").stub);
    CHECK_THROWS_AS(catalog_file("missing.txt"), Error);
    CHECK(component_names().size() >= 8);
}
