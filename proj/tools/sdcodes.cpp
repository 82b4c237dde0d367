// sdcodes: command-line front end over the selfdual C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "selfdual/selfdual.h"

using json = nlohmann::ordered_json;

namespace {

struct Failure : std::runtime_error {
    int status;
    Failure(int s, const std::string& m) : std::runtime_error(m), status(s) {}
};

void check(int st) {
    if (st != SD_OK) throw Failure(st, std::string(sd_status_name(st)) + ": " + sd_last_error());
}

struct CodeFree {
    void operator()(sd_code* c) const { sd_code_free(c); }
};
using CodePtr = std::unique_ptr<sd_code, CodeFree>;

std::string take(char* s) {
    std::string r = s ? s : "";
    sd_string_free(s);
    return r;
}

std::string read_all(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw Failure(SD_ERR_IO, "Io: cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

CodePtr load(const std::string& path) {
    sd_code* c = nullptr;
    check(sd_code_parse(read_all(path).c_str(), &c));
    return CodePtr(c);
}

std::string fmt = "text";
bool record() { return fmt == "record"; }

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else if (j.is_array()) {
        std::string s;
        for (const auto& x : j) s += (s.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
        out.emplace_back(prefix, s);
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

// text: aligned "key  value" lines; record: one JSON line
void emit(const json& j) {
    if (record()) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.first.size());
    for (const auto& [k, v] : rows) std::cout << k << std::string(w - k.size() + 2, ' ') << v << "\n";
}

void emit_json_text(const std::string& s) { emit(json::parse(s)); }

void emit_code(sd_code* c) {
    char* out = nullptr;
    check(sd_code_format(c, &out));
    std::string text = take(out);
    if (record()) emit(json{{"code", text}});
    else std::cout << text;
}

void emit_value(const std::string& key, const std::string& value) {
    if (record()) emit(json{{key, value}});
    else std::cout << value << "\n";
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string p;
    while (std::getline(ss, p, ',')) {
        if (p.empty()) continue;
        try {
            v.push_back(std::stoi(p));
        } catch (const std::exception&) {
            throw Failure(SD_ERR_BAD_ARGUMENT, "BadArgument: not an integer: " + p);
        }
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-dual code toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --format follow the subcommand
    app.add_option("--format", fmt, "text | record")->check(CLI::IsMember({"text", "record"}));

    std::string file = "-", file2, family, kind = "hwe", metric = "hamming", poly, size, group, denoms, aut_file;
    std::string name, components, glue_words, cols, form = "D1", hex, alphabet;
    int n = -1, terms = 64, q = 4, coord = -1;
    std::uint64_t cap = 0;
    bool extended = false;

    auto add_cap = [&](CLI::App* s) { s->add_option("--cap", cap, "enumeration cap in codewords (0 = 2^28)"); };
    auto add_file = [&](CLI::App* s) { s->add_option("file", file, "code file, - for stdin"); };

    auto* analyze = app.add_subcommand("analyze", "family, self-duality, type, distances, enumerators, shadow, extremality");
    add_file(analyze);
    add_cap(analyze);

    auto* dual = app.add_subcommand("dual", "dual code");
    add_file(dual);

    auto* wenum = app.add_subcommand("wenum", "weight enumerator of a code");
    add_file(wenum);
    wenum->add_option("--kind", kind, "hwe | swe | cwe");
    add_cap(wenum);

    auto* mw = app.add_subcommand("macwilliams", "MacWilliams transform of an enumerator");
    mw->add_option("poly", poly, "enumerator")->required();
    mw->add_option("--family", family)->required();
    mw->add_option("--kind", kind);
    mw->add_option("--size", size, "code size (default: sum of coefficients)");

    auto* shadow = app.add_subcommand("shadow", "shadow of a self-dual code, or the shadow transform of --poly");
    add_file(shadow);
    shadow->add_option("--poly", poly);
    shadow->add_option("--family", family);
    shadow->add_option("--kind", kind);
    shadow->add_option("--cap", cap, "words walked by each shadow route (0 = 2^19)");

    auto* molien = app.add_subcommand("molien", "Molien series of a named group or of generator matrices");
    molien->add_option("group", group, "named group or \"a,b;c,d | ...\"")->required();
    molien->add_option("--q", q);
    molien->add_option("--terms", terms);
    molien->add_option("--denoms", denoms, "e.g. 8,24: match N / prod(1 - t^d)");

    auto* extremal = app.add_subcommand("extremal", "extremal weight enumerator");
    extremal->add_option("--n", n)->required();
    extremal->add_option("--family", family)->required();

    auto* bounds = app.add_subcommand("bounds", "distance bounds");
    bounds->add_option("--n", n)->required();
    bounds->add_option("--family", family)->required();

    auto* mass = app.add_subcommand("mass", "total count and mass formula check");
    mass->add_option("--n", n)->required();
    mass->add_option("--family", family)->required();
    mass->add_option("--aut-file", aut_file, "automorphism group orders, one per line");

    auto* catalog = app.add_subcommand("catalog", "named codes");
    catalog->require_subcommand(1);
    auto* cat_list = catalog->add_subcommand("list");
    auto* cat_show = catalog->add_subcommand("show", "print the code file of an entry");
    cat_show->add_option("name", name)->required();

    auto* mindist = app.add_subcommand("mindist", "minimal distance");
    add_file(mindist);
    mindist->add_option("--metric", metric);
    add_cap(mindist);

    auto* construct = app.add_subcommand("construct", "build codes");
    construct->require_subcommand(1);
    auto* c_glue = construct->add_subcommand("glue");
    c_glue->add_option("--components", components, "e.g. d6,d6,d6")->required();
    c_glue->add_option("--glue", glue_words, "e.g. abc,cab,bbb");
    auto* c_sub = construct->add_subcommand("subtract");
    add_file(c_sub);
    c_sub->add_option("--cols", cols, "paired columns, e.g. 0,1")->required();
    auto* c_lift = construct->add_subcommand("lift", "binary Type II code to a Z4 code");
    add_file(c_lift);
    auto* c_graeffe = construct->add_subcommand("graeffe", "lift a binary divisor of x^n-1 to Z4");
    c_graeffe->add_option("poly", poly)->required();
    c_graeffe->add_option("--n", n)->required();
    auto* c_cyclic = construct->add_subcommand("cyclic");
    c_cyclic->add_option("poly", poly)->required();
    c_cyclic->add_option("--n", n)->required();
    c_cyclic->add_option("--alphabet", alphabet)->required();
    c_cyclic->add_flag("--extended", extended);
    auto* c_dc = construct->add_subcommand("dc", "double circulant");
    c_dc->add_option("hex", hex)->required();
    c_dc->add_option("--form", form, "D1 (bordered) | D2 (pure)");
    c_dc->add_option("--n", n)->required();
    auto* c_gray = construct->add_subcommand("gray", "binary Gray image of a Z4 code");
    add_file(c_gray);
    add_cap(c_gray);
    auto* c_shorten = construct->add_subcommand("shorten", "shorten a Z4 self-dual code");
    add_file(c_shorten);
    c_shorten->add_option("--coord", coord)->required();
    auto* c_sum = construct->add_subcommand("sum", "direct sum");
    c_sum->add_option("a", file)->required();
    c_sum->add_option("b", file2)->required();
    auto* c_extend = construct->add_subcommand("extend", "extend a binary code to F4");
    add_file(c_extend);
    c_extend->add_option("--alphabet", alphabet)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        char* out = nullptr;
        if (*analyze) {
            auto c = load(file);
            check(sd_code_analyze(c.get(), cap, &out));
            emit_json_text(take(out));
        } else if (*dual) {
            auto c = load(file);
            sd_code* d = nullptr;
            check(sd_code_dual(c.get(), &d));
            CodePtr dp(d);
            emit_code(d);
        } else if (*wenum) {
            auto c = load(file);
            check(sd_code_enumerator(c.get(), kind.c_str(), cap, &out));
            emit_value(kind, take(out));
        } else if (*mw) {
            check(sd_macwilliams(poly.c_str(), family.c_str(), kind.c_str(), size.empty() ? nullptr : size.c_str(), &out));
            emit_value(kind, take(out));
        } else if (*shadow) {
            if (!poly.empty()) {
                if (family.empty()) throw Failure(SD_ERR_BAD_ARGUMENT, "BadArgument: --poly needs --family");
                check(sd_shadow_transform(poly.c_str(), family.c_str(), kind.c_str(), &out));
                emit_value("shadow", take(out));
            } else {
                auto c = load(file);
                check(sd_code_shadow(c.get(), cap, &out));
                emit_json_text(take(out));
            }
        } else if (*molien) {
            check(sd_molien(group.c_str(), q, terms, denoms.c_str(), &out));
            emit_json_text(take(out));
        } else if (*extremal) {
            check(sd_extremal(n, family.c_str(), &out));
            emit_json_text(take(out));
        } else if (*bounds) {
            check(sd_bounds(n, family.c_str(), &out));
            emit_json_text(take(out));
        } else if (*mass) {
            std::string orders = aut_file.empty() ? "" : read_all(aut_file);
            check(sd_mass(n, family.c_str(), aut_file.empty() ? nullptr : orders.c_str(), &out));
            emit_json_text(take(out));
        } else if (*catalog) {
            if (*cat_list) {
                check(sd_catalog_list(&out));
                json j = json::parse(take(out));
                if (record()) {
                    emit(j);
                } else {
                    for (const auto& e : j)
                        std::printf("%-12s %-5s %4d  %s%s\n", e["name"].get<std::string>().c_str(),
                                    e["alphabet"].get<std::string>().c_str(), e["length"].get<int>(),
                                    e["stub"].get<bool>() ? "(stub) " : "", e["about"].get<std::string>().c_str());
                }
            } else if (*cat_show) {
                check(sd_catalog_entry(name.c_str(), &out));
                json j = json::parse(take(out));
                if (record()) emit(j);
                else if (j["stub"].get<bool>()) throw Failure(SD_ERR_UNKNOWN_NAME, "UnknownName: " + name + " has no generator data");
                else std::cout << j["code"].get<std::string>();
            }
        } else if (*mindist) {
            auto c = load(file);
            int d = 0;
            check(sd_code_min_distance(c.get(), metric.c_str(), cap, &d));
            emit_value("d_" + metric, std::to_string(d));
        } else if (*construct) {
            sd_code* r = nullptr;
            if (*c_glue) {
                int sdual = 0;
                check(sd_construct_glue(components.c_str(), glue_words.c_str(), &r, &sdual));
                if (!sdual) std::cerr << "note: glued code is not self-dual\n";
            } else if (*c_sub) {
                auto c = load(file);
                auto v = parse_ints(cols);
                check(sd_construct_subtract(c.get(), v.data(), (int)v.size(), &r));
            } else if (*c_lift) {
                auto c = load(file);
                check(sd_construct_lift(c.get(), &r));
            } else if (*c_graeffe) {
                check(sd_construct_graeffe(poly.c_str(), n, &out));
                emit_value("poly", take(out));
                return 0;
            } else if (*c_cyclic) {
                check(sd_construct_cyclic(alphabet.c_str(), poly.c_str(), n, extended ? 1 : 0, &r));
            } else if (*c_dc) {
                check(sd_construct_dc(form.c_str(), hex.c_str(), n, &r));
            } else if (*c_gray) {
                auto c = load(file);
                check(sd_code_gray(c.get(), cap, &out));
                std::string lines = take(out);
                if (record()) {
                    json words = json::array();
                    std::istringstream in(lines);
                    std::string l;
                    while (std::getline(in, l)) words.push_back(l);
                    emit(json{{"words", words}});
                } else {
                    std::cout << lines;
                }
                return 0;
            } else if (*c_shorten) {
                auto c = load(file);
                check(sd_construct_shorten(c.get(), coord, &r));
            } else if (*c_sum) {
                auto a = load(file), b = load(file2);
                check(sd_construct_direct_sum(a.get(), b.get(), &r));
            } else if (*c_extend) {
                auto c = load(file);
                check(sd_construct_extend(c.get(), alphabet.c_str(), &r));
            }
            CodePtr rp(r);
            emit_code(r);
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
