#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <string>

#include "selfdual/selfdual.h"

using nlohmann::json;

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
    std::string r = s ? s : "";
    sd_string_free(s);
    return r;
}

struct Handle {
    sd_code* p = nullptr;
    ~Handle() { sd_code_free(p); }
};

json analyze(const sd_code* c) {
    char* out = nullptr;
    REQUIRE(sd_code_analyze(c, 0, &out) == SD_OK);
    return json::parse(take(out));
}

}  // namespace

TEST_CASE("status names") {
    CHECK(std::string(sd_status_name(SD_OK)) == "Ok");
    CHECK(std::string(sd_status_name(SD_ERR_NOT_SELF_DUAL)) == "NotSelfDual");
    CHECK(std::string(sd_status_name(SD_ERR_UNKNOWN_NAME)) == "UnknownName");
    CHECK(std::string(sd_status_name(SD_ERR_BAD_ARGUMENT)) == "BadArgument");
    CHECK(std::string(sd_status_name(999)) == "Unknown");
}

TEST_CASE("parse, format and analyze") {
    Handle h;
    REQUIRE(sd_code_parse("alphabet F2\nlength 8\n11000000\n00110000\n00001100\n00000011\n", &h.p) == SD_OK);
    int n = 0, self_dual = 0;
    CHECK(sd_code_length(h.p, &n) == SD_OK);
    CHECK(n == 8);
    CHECK(sd_code_is_self_dual(h.p, &self_dual) == SD_OK);
    CHECK(self_dual == 1);
    char* size = nullptr;
    CHECK(sd_code_size(h.p, &size) == SD_OK);
    CHECK(take(size) == "16");

    json j = analyze(h.p);
    CHECK(j["self_dual"] == true);
    CHECK(j["d_hamming"] == 2);
    CHECK(j["type"] == "StrictTypeI");
    CHECK(j["shadow"]["agree"] == true);
    CHECK(j["shadow"]["residues_hold"] == true);

    char* text = nullptr;
    REQUIRE(sd_code_format(h.p, &text) == SD_OK);
    Handle again;
    REQUIRE(sd_code_parse(take(text).c_str(), &again.p) == SD_OK);
    CHECK(analyze(again.p) == j);
}

TEST_CASE("catalog access") {
    char* list = nullptr;
    REQUIRE(sd_catalog_list(&list) == SD_OK);
    json l = json::parse(take(list));
    CHECK(l.size() > 50);
    Handle g;
    REQUIRE(sd_code_catalog("g24", &g.p) == SD_OK);
    json j = analyze(g.p);
    CHECK(j["d_hamming"] == 8);
    CHECK(j["type"] == "TypeII");
    CHECK(j["extremal"] == true);

    char* e = nullptr;
    REQUIRE(sd_catalog_entry("o8", &e) == SD_OK);
    json ej = json::parse(take(e));
    CHECK(ej["expect"]["d_lee"] == "6");

    Handle stub;
    CHECK(sd_code_catalog("M88", &stub.p) == SD_ERR_UNKNOWN_NAME);
    CHECK(stub.p == nullptr);
    Handle none;
    CHECK(sd_code_catalog("nope", &none.p) == SD_ERR_UNKNOWN_NAME);
    CHECK(std::strlen(sd_last_error()) > 0);
}

TEST_CASE("error codes") {
    Handle h;
    CHECK(sd_code_parse("alphabet F9\nlength 2\n11\n", &h.p) != SD_OK);
    CHECK(sd_code_parse(nullptr, &h.p) == SD_ERR_BAD_ARGUMENT);
    int n = 0;
    CHECK(sd_code_length(nullptr, &n) == SD_ERR_BAD_ARGUMENT);
    char* out = nullptr;
    CHECK(sd_mass(12, "2II", nullptr, &out) == SD_ERR_LENGTH_NOT_ADMISSIBLE);
    CHECK(out == nullptr);
    CHECK(sd_code_read_file("/nonexistent/file", &h.p) == SD_ERR_IO);
    Handle e7;
    REQUIRE(sd_code_catalog("e7", &e7.p) == SD_OK);
    Handle lifted;
    CHECK(sd_construct_lift(e7.p, &lifted.p) == SD_ERR_NOT_SELF_DUAL);
    Handle big;
    REQUIRE(sd_code_catalog("XQ47", &big.p) == SD_OK);
    CHECK(sd_code_enumerator(big.p, "hwe", 1000, &out) == SD_ERR_TOO_LARGE);
}

TEST_CASE("enumerators and transforms") {
    Handle e8;
    REQUIRE(sd_code_catalog("e8", &e8.p) == SD_OK);
    char* w = nullptr;
    REQUIRE(sd_code_enumerator(e8.p, "hwe", 0, &w) == SD_OK);
    std::string hwe = take(w);
    CHECK(hwe == "x^8 + 14*x^4*y^4 + y^8");
    char* m = nullptr;
    REQUIRE(sd_macwilliams(hwe.c_str(), "2", "hwe", "16", &m) == SD_OK);
    CHECK(take(m) == hwe);
    char* s = nullptr;
    REQUIRE(sd_shadow_transform(hwe.c_str(), "2", "hwe", &s) == SD_OK);
    CHECK(take(s) == hwe);
    char* dist = nullptr;
    REQUIRE(sd_code_weight_distribution(e8.p, "hamming", 0, &dist) == SD_OK);
    json d = json::parse(take(dist));
    CHECK(d["4"] == "14");
    int dmin = 0;
    CHECK(sd_code_min_distance(e8.p, "hamming", 0, &dmin) == SD_OK);
    CHECK(dmin == 4);
    Handle dual;
    REQUIRE(sd_code_dual(e8.p, &dual.p) == SD_OK);
    int sdual = 0;
    CHECK(sd_code_is_self_dual(dual.p, &sdual) == SD_OK);
    CHECK(sdual == 1);
}

TEST_CASE("invariants, bounds and mass") {
    char* out = nullptr;
    REQUIRE(sd_molien("G192", 2, 64, "8,24", &out) == SD_OK);
    json mo = json::parse(take(out));
    CHECK(mo.dump().find("192") != std::string::npos);
    REQUIRE(sd_extremal(48, "2II", &out) == SD_OK);
    json ex = json::parse(take(out));
    CHECK(ex["enumerator"].get<std::string>().find("17296*x^36*y^12") != std::string::npos);
    CHECK(ex["d"] == 12);
    REQUIRE(sd_bounds(46, "2I", &out) == SD_OK);
    CHECK(json::parse(take(out))["upper"] == 10);
    REQUIRE(sd_mass(8, "2", "384\n1344\n", &out) == SD_OK);
    json ma = json::parse(take(out));
    CHECK(ma["total_count"] == "135");
    CHECK(ma["equal"] == true);
    REQUIRE(sd_gleason_decompose("x^8 + 14*x^4*y^4 + y^8", "2II", &out) == SD_OK);
    take(out);
}

TEST_CASE("constructions") {
    Handle g;
    int self_dual = 0;
    REQUIRE(sd_construct_glue("d6,d6,d6", "abc,cab,bbb", &g.p, &self_dual) == SD_OK);
    CHECK(self_dual == 1);
    int d = 0;
    CHECK(sd_code_min_distance(g.p, "hamming", 0, &d) == SD_OK);
    CHECK(d == 4);

    Handle g24, g22;
    REQUIRE(sd_code_catalog("g24", &g24.p) == SD_OK);
    int cols[2] = {0, 1};
    REQUIRE(sd_construct_subtract(g24.p, cols, 2, &g22.p) == SD_OK);
    CHECK(analyze(g22.p)["d_hamming"] == 6);

    Handle e8, l;
    REQUIRE(sd_code_catalog("e8", &e8.p) == SD_OK);
    REQUIRE(sd_construct_lift(e8.p, &l.p) == SD_OK);
    CHECK(analyze(l.p)["self_dual"] == true);

    char* gp = nullptr;
    REQUIRE(sd_construct_graeffe("1+x", 5, &gp) == SD_OK);
    CHECK(take(gp) == "3+x");

    Handle dc;
    REQUIRE(sd_construct_dc("D1", "B7", 24, &dc.p) == SD_OK);
    CHECK(analyze(dc.p)["hwe"] == analyze(g24.p)["hwe"]);

    Handle sum, ext, cyc, sh, pair;
    REQUIRE(sd_construct_direct_sum(e8.p, e8.p, &sum.p) == SD_OK);
    REQUIRE(sd_construct_extend(e8.p, "F4H", &ext.p) == SD_OK);
    CHECK(analyze(ext.p)["self_dual"] == true);
    REQUIRE(sd_construct_cyclic("F2", "1+x+x^3", 7, 1, &cyc.p) == SD_OK);
    CHECK(analyze(cyc.p)["hwe"] == "x^8 + 14*x^4*y^4 + y^8");
    REQUIRE(sd_construct_shorten(l.p, 0, &sh.p) == SD_OK);
    REQUIRE(sd_construct_z4_pair(e8.p, e8.p, &pair.p) == SD_OK);
    int n = 0;
    CHECK(sd_code_length(sh.p, &n) == SD_OK);
    CHECK(n == 7);
}
