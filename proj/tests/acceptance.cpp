// Acceptance runner: each criterion runs once against its time limit and
// prints one PASS/FAIL line.  Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "sd/bounds.hpp"
#include "sd/constructions.hpp"
#include "sd/invariants.hpp"
#include "sd/mass.hpp"
#include "sd/shadow.hpp"
#include "sd/wenum.hpp"

using namespace sd;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void expect(bool c, const std::string& what) {
        if (!c) {
            ok = false;
            if (!note.empty()) note += "; ";
            note += what;
        }
    }
};

Code cat(const std::string& n) { return catalog_entry(n).code; }

PolyQ P(const std::string& s, const PolyQ& like) { return parse_poly(s, like.names()); }

Outcome c1() {
    Outcome o;
    auto h = [&](const char* name, const char* want) {
        PolyQ w = hwe(cat(name));
        o.expect(w == P(want, w), std::string("hwe ") + name);
    };
    h("i2", "x^2 + y^2");
    h("e8", "x^8 + 14*x^4*y^4 + y^8");
    h("g24", "x^24 + 759*x^16*y^8 + 2576*x^12*y^12 + 759*x^8*y^16 + y^24");
    h("t4", "x^4 + 8*x*y^3");
    h("g12", "x^12 + 264*x^6*y^6 + 440*x^3*y^9 + 24*y^12");
    h("h6", "x^6 + 45*x^2*y^4 + 18*y^6");
    PolyQ s = swe(cat("h6"));
    o.expect(s == P("x^6 + y^6 + 2*z^6 + 30*x^2*y^2*z^2 + 15*x^2*z^4 + 15*y^2*z^4", s), "swe h6");
    PolyQ c = cwe(cat("h6"));
    o.expect(c == P("x^6 + y^6 + z^6 + t^6 + 15*x^2*y^2*z^2 + 15*x^2*y^2*t^2 + 15*x^2*z^2*t^2 + 15*y^2*z^2*t^2", c), "cwe h6");
    PolyQ so = swe(cat("o8"));
    o.expect(so == P("x^8 + 16*y^8 + z^8 + 14*x^4*z^4 + 112*x^3*y^4*z + 112*x*y^4*z^3", so), "swe o8");
    PolyQ cg = cwe(cat("g12.ones"));
    o.expect(cg == P("x^12 + y^12 + z^12 + 22*x^6*y^6 + 22*y^6*z^6 + 22*z^6*x^6 + 220*x^6*y^3*z^3 + 220*x^3*y^6*z^3 + "
                     "220*x^3*y^3*z^6",
                     cg),
             "cwe g12");
    return o;
}

Outcome c2() {
    Outcome o;
    std::mt19937_64 rng(2024);
    int done = 0;
    for (auto r : {oracle::Ring::F2, oracle::Ring::F3, oracle::Ring::F4H, oracle::Ring::Z4}) {
        for (int t = 0; t < 20; ++t) {
            int n = 3 + int(rng() % 8);
            Code c = oracle::to_code(r, n, oracle::random_self_orthogonal(r, n, 12, rng));
            PolyQ w = hwe(c);
            Z size = code_size(c);
            Z total = 1;
            for (int i = 0; i < n; ++i) total *= oracle::ring_size(r);
            PolyQ d = macwilliams(w, oracle::family(r), EnumKind::Hwe, size);
            PolyQ back = macwilliams(d, oracle::family(r), EnumKind::Hwe, total / size);
            o.expect(back == w, "involution " + oracle::family(r));
            ++done;
        }
    }
    o.note = o.ok ? std::to_string(done) + " codes" : o.note;
    return o;
}

Outcome c3() {
    Outcome o;
    auto m8 = verify_mass(8, "2", {384, 1344});
    o.expect(m8.equal && m8.lhs == Q(3, 896) && total_count(8, "2") == 135 && group_order(8, "2") == 40320, "n=8");
    std::istringstream in(catalog_file("type2_n32_aut.txt"));
    std::vector<Z> orders;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string label, comps, order;
        ls >> label >> comps >> order;
        orders.push_back(parse_factored(order));
    }
    o.expect(orders.size() == 85, "85 orders");
    auto m32 = verify_mass(32, "2II", orders);
    o.expect(m32.equal && m32.rhs == Q(Z("391266122896364123"), Z("532283035423762022400")), "n=32");
    return o;
}

Outcome c4() {
    Outcome o;
    const int want[] = {1, 3, 15, 135};
    std::string counts;
    for (int n = 2; n <= 8; n += 2) {
        auto brute = oracle::count_binary_self_dual(n, false);
        counts += (counts.empty() ? "" : ",") + std::to_string(brute);
        o.expect(Z(std::to_string(brute)) == total_count(n, "2") && brute == std::uint64_t(want[n / 2 - 1]),
                 "n=" + std::to_string(n));
    }
    if (o.ok) o.note = "counts " + counts;
    return o;
}

Outcome c5() {
    Outcome o;
    Cyclo r2 = Cyclo(1) / Cyclo::sqrt_of(2);
    CMat h = CMat::from_rows({{1, 1}, {1, -1}}, r2);
    MatrixGroup g192 = generate_group({h, CMat::diag({1, Cyclo::i()})});
    o.expect(g192.order() == 192, "|G| = 192");
    o.expect(molien(g192, 64) == expand_molien_form({Q(1)}, {8, 24}, 64), "Molien G192");
    MatrixGroup g16 = generate_group({h, CMat::diag({1, -1})});
    o.expect(g16.order() == 16, "|G16|");
    o.expect(molien(g16, 64) == expand_molien_form({Q(1)}, {2, 8}, 64), "Molien G16");
    Cyclo r3 = Cyclo(1) / Cyclo::sqrt_of(3);
    MatrixGroup g48 = generate_group({CMat::from_rows({{1, 2}, {1, -1}}, r3), CMat::diag({1, Cyclo::zeta(3)})});
    o.expect(g48.order() == 48, "|G48|");
    o.expect(molien(g48, 64) == expand_molien_form({Q(1)}, {4, 12}, 64), "Molien G48");
    return o;
}

Outcome c6() {
    Outcome o;
    PolyQ w48 = extremal_enumerator(48, "2II");
    o.expect(w48 == P("x^48 + 17296*x^36*y^12 + 535095*x^32*y^16 + 3995376*x^28*y^20 + 7681680*x^24*y^24 + "
                      "3995376*x^20*y^28 + 535095*x^16*y^32 + 17296*x^12*y^36 + y^48",
                      w48),
             "n=48");
    PolyQ w24 = extremal_enumerator(24, "2II");
    o.expect(w24 == P("x^24 + 759*x^16*y^8 + 2576*x^12*y^12 + 759*x^8*y^16 + y^24", w24), "n=24");
    for (int n = 8; n <= 96; n += 8) {
        int d = 4 * (n / 24) + 4;
        Q lead = extremal_enumerator(n, "2II").coeff({n - d, d});
        o.expect(lead == extremal_leading_count(n), "leading count n=" + std::to_string(n));
    }
    return o;
}

Outcome c7() {
    Outcome o;
    const int dII[] = {4, 4, 8, 8, 8, 12};
    for (int i = 0; i < 6; ++i) o.expect(upper_bound(8 * (i + 1), "2II") == dII[i], "d_II n=" + std::to_string(8 * (i + 1)));
    o.expect(upper_bound(46, "2I") == 10, "n=46");
    o.expect(upper_bound(22, "2I") == 6, "n=22");
    PolyQ t = extremal_enumerator(72, "3");
    bool neg = false;
    for (const auto& [e, c] : t.terms()) neg = neg || sgn(c) < 0;
    o.expect(neg, "ternary 72 negative coefficient");
    return o;
}

Outcome c8() {
    Outcome o;
    Code o8 = cat("o8");
    o.expect(minimal_distance(o8, Metric::Lee) == 6, "o8 Lee");
    o.expect(minimal_distance(o8, Metric::Norm) == 8, "o8 norm");
    o.expect(classify_type(o8) == CodeType::TypeII, "o8 Type II");
    auto g = gray_map(o8);
    o.expect(g.size() == 256, "256 words");
    int dmin = 1 << 30;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            int d = 0;
            for (std::size_t k = 0; k < g[i].size(); ++k) d += g[i][k] != g[j][k];
            dmin = std::min(dmin, d);
        }
    o.expect(dmin == 6, "Gray distance");
    PolyQ w = words_enumerator(Alphabet::f2(), 16, g, EnumKind::Hwe);
    o.expect(macwilliams(w, "2", EnumKind::Hwe, Z(256)) == w, "formal self-duality");
    IntPoly l = graeffe_lift(parse_int_poly("1+x+x^5+x^6+x^7+x^9+x^11"), 23);
    o.expect(l == parse_int_poly("3+x+2x^4+3x^5+3x^6+3x^7+3x^9+2x^10+x^11"), "Graeffe");
    o.expect(minimal_distance(cat("G24"), Metric::Lee) == 12, "G24 Lee");
    return o;
}

Outcome c9() {
    Outcome o;
    const std::uint64_t limit = std::uint64_t(1) << 22;
    int checked = 0;
    std::string skipped;
    for (const auto& e : catalog()) {
        const Code& c = e.code;
        if (e.stub || !has_shadow(c) || !is_self_dual(c)) continue;
        if (code_size(c) > Z(std::to_string(limit))) {
            skipped += (skipped.empty() ? "" : ",") + e.name;
            continue;
        }
        auto words = shadow_set(c, 2 * limit);
        EnumKind k = c.A.kind() == Kind::IntegerRing ? EnumKind::Swe : EnumKind::Hwe;
        std::string fam = c.additive ? "4H+" : c.A.family();
        o.expect(words_enumerator(c.A, c.n, words, k) == shadow_enumerator(enumerator(c, k), fam, k), "transform " + e.name);
        for (const auto& s : words) {
            bool r = c.additive       ? (Alphabet::hamming(s) - c.n) % 2 == 0
                     : c.A.size() == 2 ? ((Alphabet::hamming(s) - c.n / 2) % 4 + 4) % 4 == 0
                                       : ((c.A.norm(s) - c.n) % 8 + 8) % 8 == 0;
            if (!r) {
                o.expect(false, "residue " + e.name);
                break;
            }
        }
        ++checked;
    }
    if (o.ok) o.note = std::to_string(checked) + " codes; above 2^22 words, not enumerated: " + skipped;
    return o;
}

Outcome c10() {
    Outcome o;
    o.expect(gv_distance(24, "2") == 4, "gv 2");
    o.expect(gv_distance(24, "2II") == 4, "gv 2II");
    for (int n = 2; n <= 24; n += 2)
        for (std::string f : {"2", "2II"}) {
            if (f == "2II" && n % 8) continue;
            PolyQ w = average_weight_enumerator(n, f);
            o.expect(w.eval({Q(1), Q(0)}) == 1 && w.eval({Q(0), Q(1)}) == 1 &&
                         w.eval({Q(1), Q(1)}) == Q(Z(1) << (n / 2)),
                     "normalization n=" + std::to_string(n) + " " + f);
        }
    auto a = asymptotic_constants();
    o.expect(std::abs(a.gv_delta - 0.11002786) < 1e-6, "gv constant");
    o.expect(std::abs(a.krasikov_litsyn - 0.166315) < 1e-5, "Krasikov-Litsyn constant");
    return o;
}

Outcome c11() {
    Outcome o;
    auto d6 = component("d6");
    auto a = glue({d6, d6, d6}, {"abc", "cab", "bbb"});
    o.expect(a.self_dual && a.code.n == 18 && minimal_distance(a.code, Metric::Hamming) == 4, "d6^3");
    auto b = glue({component("d10"), component("e7"), component("f1")}, {"a0A", "cd0"});
    o.expect(b.self_dual && b.code.n == 18 && minimal_distance(b.code, Metric::Hamming) == 4, "d10 e7 f1");
    auto w1 = all_codewords(subtract(cat("g24"), {0, 1}));
    auto w2 = all_codewords(cat("g22"));
    o.expect(std::set<Vec>(w1.begin(), w1.end()) == std::set<Vec>(w2.begin(), w2.end()), "g24 - i2 = g22");
    PolyQ dc = hwe(double_circulant(DcForm::Bordered, "B7", 24));
    o.expect(dc == P("x^24 + 759*x^16*y^8 + 2576*x^12*y^12 + 759*x^8*y^16 + y^24", dc), "double circulant");
    Code l = lift_to_z4(cat("e8"));
    bool norms = true;
    for (const auto& w : all_codewords(l)) norms = norms && l.A.norm(w) % 8 == 0;
    o.expect(is_self_dual(l) && norms, "lift of e8");
    return o;
}

Outcome c12() {
    Outcome o;
    auto th = theta_series(hwe(cat("e8")), 8);
    auto words = all_codewords(cat("e8"));
    auto lc = oracle::lattice_counts(8, oracle::Words(words.begin(), words.end()), 8);
    bool eq = th.size() == lc.size();
    for (std::size_t k = 0; eq && k < th.size(); ++k) eq = th[k] == Z(std::to_string(lc[k]));
    o.expect(eq, "theta vs lattice count");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* what;
        double limit;  // seconds
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all = {
        {1, "catalog enumerators", 5, c1},
        {2, "MacWilliams involution", 10, c2},
        {3, "mass identities", 1, c3},
        {4, "brute-force self-dual counts", 60, c4},
        {5, "Molien series", 60, c5},
        {6, "extremal enumerators", 30, c6},
        {7, "upper bounds", 30, c7},
        {8, "Z4 suite", 900, c8},
        {9, "shadow consistency", 60, c9},
        {10, "GV and averages", 5, c10},
        {11, "constructions", 120, c11},
        {12, "theta series", 60, c12},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < c.limit;
        bool pass = o.ok && in_time;
        if (!in_time) o.note += (o.note.empty() ? "" : "; ") + std::string("over time limit");
        failed += !pass;
        std::printf("criterion %2d %s  %-30s %8.2fs / %gs%s%s\n", c.id, pass ? "PASS" : "FAIL", c.what, secs, c.limit,
                    o.note.empty() ? "" : "  ", o.note.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
