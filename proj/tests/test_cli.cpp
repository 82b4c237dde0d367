#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "sd/constructions.hpp"
#include "sd/wenum.hpp"

using nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(SDCODES_BIN) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string temp_file(const std::string& content) {
    char name[] = "/tmp/sdcli_XXXXXX";
    int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    close(fd);
    std::ofstream(name) << content;
    return name;
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

}  // namespace

TEST_CASE("catalog show then analyze round-trips for every entry") {
    int n = 0;
    for (const auto& e : sd::catalog()) {
        if (e.stub) continue;
        CAPTURE(e.name);
        Run show = run("catalog show " + e.name);
        REQUIRE(show.status == 0);
        std::string f = temp_file(show.out);
        Run a = run("analyze " + f + " --format record");
        CHECK(a.status == 0);
        json j = json::parse(a.out);
        CHECK(j["length"] == e.code.n);
        CHECK(j["size"] == sd::code_size(e.code).get_str());
        std::remove(f.c_str());
        ++n;
    }
    CHECK(n > 50);
}

TEST_CASE("wenum record output re-parses to the in-memory enumerator") {
    for (const char* name : {"e8", "g12", "h6", "o8", "h5"}) {
        CAPTURE(name);
        const auto& e = sd::catalog_entry(name);
        std::string f = temp_file(sd::format_code(e.code));
        for (const char* kind : {"hwe", "swe", "cwe"}) {
            if (std::string(kind) != "hwe" && e.code.A.size() == 2) continue;
            if (std::string(kind) == "cwe" && e.code.A.kind() == sd::Kind::IntegerRing) continue;
            CAPTURE(kind);
            Run r = run("wenum " + f + " --kind " + kind + " --format record");
            REQUIRE(r.status == 0);
            json j = json::parse(r.out);
            sd::PolyQ mem = sd::enumerator(e.code, sd::parse_kind(kind));
            CHECK(sd::parse_poly(j[kind].get<std::string>(), mem.names()) == mem);
        }
        std::remove(f.c_str());
    }
}

TEST_CASE("documented examples") {
    Run g = run("catalog show g24");
    std::string f = temp_file(g.out);
    Run a = run("analyze " + f + " --format record");
    REQUIRE(a.status == 0);
    json j = json::parse(a.out);
    CHECK(j["d_hamming"] == 8);
    CHECK(j["type"] == "TypeII");
    CHECK(j["extremal"] == true);
    std::remove(f.c_str());

    Run x = run("extremal --n 48 --family 2II --format record");
    REQUIRE(x.status == 0);
    CHECK(json::parse(x.out)["enumerator"] ==
          "x^48 + 17296*x^36*y^12 + 535095*x^32*y^16 + 3995376*x^28*y^20 + 7681680*x^24*y^24 + 3995376*x^20*y^28 + "
          "535095*x^16*y^32 + 17296*x^12*y^36 + y^48");

    std::string ns = temp_file("alphabet F2\nlength 4\n1100\n0110\n");
    Run b = run("analyze " + ns + " --format record");
    CHECK(b.status == 0);
    CHECK(json::parse(b.out)["self_dual"] == false);
    std::remove(ns.c_str());
}

TEST_CASE("pipes and text output") {
    Run a = run("catalog show e8 | " + std::string(SDCODES_BIN) + " analyze");
    CHECK(a.status == 0);
    CHECK(a.out.find("d_hamming") != std::string::npos);
    Run m = run("mass --n 8 --family 2 --format record");
    CHECK(json::parse(m.out)["mass"] == "3/896");
    Run mw = run("macwilliams \"x^8 + 14*x^4*y^4 + y^8\" --family 2 --format record");
    CHECK(mw.status == 0);
    Run gr = run("construct graeffe 1+x --n 5");
    CHECK(trim(gr.out) == "3+x");
}

TEST_CASE("errors and usage") {
    CHECK(run("frobnicate").status == 2);
    CHECK(run("bounds --n notanumber").status == 2);
    Run u = run("catalog show nope");
    CHECK(u.status == 1);
    CHECK(u.out.find("UnknownName") != std::string::npos);
    CHECK(run("analyze /nonexistent/file").status == 1);
    CHECK(run("catalog show M88").status == 1);
}
