#include "selfdual/selfdual.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sd/bounds.hpp"
#include "sd/constructions.hpp"
#include "sd/invariants.hpp"
#include "sd/mass.hpp"
#include "sd/shadow.hpp"
#include "sd/wenum.hpp"

struct sd_code {
    sd::Code c;
};

using json = nlohmann::ordered_json;
using namespace sd;

static_assert(int(Err::UnknownName) == SD_ERR_UNKNOWN_NAME, "status codes follow sd::Err");

namespace {

thread_local std::string last_error;

struct BadArgument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
int guard(F&& f) {
    try {
        f();
        last_error.clear();
        return SD_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return int(e.code);
    } catch (const BadArgument& e) {
        last_error = e.what();
        return SD_ERR_BAD_ARGUMENT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return SD_ERR_INTERNAL;
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class T>
T* need(T* p, const char* what) {
    if (!p) throw BadArgument(std::string("null ") + what);
    return p;
}

std::string need_str(const char* s, const char* what) { return need(s, what); }

sd_code* wrap(Code c) { return new sd_code{std::move(c)}; }

std::uint64_t cap_or_default(std::uint64_t cap) { return cap ? cap : kDefaultCap; }

// Shadow reports hold every shadow word in memory, and both routes walk a
// space twice the size of the code.
constexpr std::uint64_t kShadowReportCap = std::uint64_t(1) << 18;

// Enumerator kind used for shadow comparisons: hwe for binary and additive, swe otherwise.
EnumKind shadow_kind(const Code& c) { return c.A.kind() == Kind::IntegerRing ? EnumKind::Swe : EnumKind::Hwe; }

// wt/2 mod 4 (binary), n mod 2 (additive F4), n mod 8 (Z4) for every shadow word
bool shadow_residues_hold(const Code& c, const std::vector<Vec>& words) {
    for (const auto& s : words) {
        if (c.additive) {
            if ((Alphabet::hamming(s) - c.n) % 2) return false;
        } else if (c.A.size() == 2) {
            if (((Alphabet::hamming(s) - c.n / 2) % 4 + 4) % 4) return false;
        } else if (c.A.size() == 4) {
            if (((c.A.norm(s) - c.n) % 8 + 8) % 8) return false;
        }
    }
    return true;
}

json shadow_json(const Code& c, std::uint64_t cap) {
    auto words = shadow_set(c, cap);
    EnumKind k = shadow_kind(c);
    PolyQ from_words = words_enumerator(c.A, c.n, words, k);
    std::string fam = c.additive ? "4H+" : c.A.family();
    PolyQ from_transform = shadow_enumerator(enumerator(c, k, cap), fam, k);
    json j;
    j["kind"] = kind_name(k);
    j["size"] = words.size();
    j["enumerator"] = from_words.pretty();
    j["transform"] = from_transform.pretty();
    j["agree"] = from_words == from_transform;
    j["residues_hold"] = shadow_residues_hold(c, words);
    auto dist = [&](Metric m) {
        std::map<int, std::uint64_t> d;
        for (const auto& w : words) ++d[vec_weight(c.A, w, m)];
        json o = json::object();
        for (const auto& [w, cnt] : d) o[std::to_string(w)] = std::to_string(cnt);
        return o;
    };
    j["distribution_hamming"] = dist(Metric::Hamming);
    if (c.A.kind() == Kind::IntegerRing) j["distribution_norm"] = dist(Metric::Norm);
    CosetDecomposition cd = coset_decomposition(c, cap);
    j["type_ii"] = cd.type_ii;
    j["cosets"] = {{"u0", c.A.to_string(cd.u0)}, {"u1", c.A.to_string(cd.u1)},
                   {"u2", c.A.to_string(cd.u2)}, {"u3", c.A.to_string(cd.u3)}};
    return j;
}

std::string type_label(CodeType t) { return type_name(t); }

}  // namespace

extern "C" {

const char* sd_status_name(int status) {
    if (status == SD_OK) return "Ok";
    if (status == SD_ERR_INTERNAL) return "Internal";
    if (status == SD_ERR_BAD_ARGUMENT) return "BadArgument";
    if (status >= int(Err::LengthMismatch) && status <= int(Err::UnknownName)) return err_name(Err(status));
    return "Unknown";
}

const char* sd_last_error(void) { return last_error.c_str(); }

void sd_string_free(char* s) { std::free(s); }

int sd_code_parse(const char* text, sd_code** out) {
    return guard([&] { *need(out, "out") = wrap(parse_code(need_str(text, "text"))); });
}

int sd_code_read_file(const char* path, sd_code** out) {
    return guard([&] { *need(out, "out") = wrap(read_code_file(need_str(path, "path"))); });
}

int sd_code_catalog(const char* name, sd_code** out) {
    return guard([&] {
        const auto& e = catalog_entry(need_str(name, "name"));
        if (e.stub) throw Error(Err::UnknownName, e.name + " is a stub without generator data");
        *need(out, "out") = wrap(e.code);
    });
}

void sd_code_free(sd_code* c) { delete c; }

int sd_code_format(const sd_code* c, char** out) {
    return guard([&] { *need(out, "out") = dup(format_code(need(c, "code")->c)); });
}

int sd_code_length(const sd_code* c, int* out) {
    return guard([&] { *need(out, "out") = need(c, "code")->c.n; });
}

int sd_code_size(const sd_code* c, char** out) {
    return guard([&] { *need(out, "out") = dup(code_size(need(c, "code")->c).get_str()); });
}

int sd_code_is_self_dual(const sd_code* c, int* out) {
    return guard([&] { *need(out, "out") = is_self_dual(need(c, "code")->c) ? 1 : 0; });
}

int sd_code_dual(const sd_code* c, sd_code** out) {
    return guard([&] { *need(out, "out") = wrap(dual(need(c, "code")->c)); });
}

int sd_code_enumerator(const sd_code* c, const char* kind, uint64_t cap, char** out) {
    return guard([&] {
        EnumKind k = parse_kind(need_str(kind, "kind"));
        *need(out, "out") = dup(enumerator(need(c, "code")->c, k, cap_or_default(cap)).pretty());
    });
}

int sd_code_min_distance(const sd_code* c, const char* metric, uint64_t cap, int* out) {
    return guard([&] {
        *need(out, "out") = minimal_distance(need(c, "code")->c, parse_metric(need_str(metric, "metric")), cap_or_default(cap));
    });
}

int sd_code_weight_distribution(const sd_code* c, const char* metric, uint64_t cap, char** out_json) {
    return guard([&] {
        json j = json::object();
        for (const auto& [w, cnt] : weight_distribution(need(c, "code")->c, parse_metric(need_str(metric, "metric")), cap_or_default(cap)))
            j[std::to_string(w)] = cnt.get_str();
        *need(out_json, "out") = dup(j.dump());
    });
}

int sd_code_analyze(const sd_code* handle, uint64_t cap, char** out_json) {
    return guard([&] {
        const Code& c = need(handle, "code")->c;
        cap = cap_or_default(cap);
        json j;
        j["alphabet"] = c.A.token();
        j["family"] = c.additive ? "4H+" : c.A.family();
        j["length"] = c.n;
        Z size = code_size(c);
        j["size"] = size.get_str();
        bool sd = is_self_dual(c);
        j["self_dual"] = sd;
        j["self_orthogonal"] = is_self_orthogonal(c);
        j["type"] = type_label(classify_type(c));
        std::string bf;
        if (sd) {
            try {
                bf = bound_family(c);
                j["bound_family"] = bf;
                j["upper_bound"] = upper_bound(c.n, bf);
            } catch (const Error& e) {
                j["extremal_note"] = e.what();
            }
        }
        if (size > Z(std::to_string(cap))) {
            j["enumeration"] = "skipped: " + size.get_str() + " words, above the cap " + std::to_string(cap);
            *need(out_json, "out") = dup(j.dump());
            return;
        }
        bool z4 = c.A == Alphabet::z(4);
        PolyQ h = hwe(c, cap);
        // minimum over nonzero words of a linear form in the exponents
        auto dmin = [](const PolyQ& p, auto weight) {
            int d = 0;
            for (const auto& [e, k] : p.terms()) {
                int w = weight(e);
                if (w > 0 && (d == 0 || w < d)) d = w;
            }
            return d;
        };
        int dh = dmin(h, [](const Exps& e) { return e[1]; });
        j["d_hamming"] = dh;
        PolyQ s;
        if (c.A.size() > 2) s = swe(c, cap);
        int dn = 0;
        if (z4) {
            j["d_lee"] = dmin(s, [](const Exps& e) { return e[1] + 2 * e[2]; });
            dn = dmin(s, [](const Exps& e) { return e[1] + 4 * e[2]; });
            j["d_norm"] = dn;
        } else if (c.A.kind() == Kind::IntegerRing) {
            j["d_lee"] = minimal_distance(c, Metric::Lee, cap);
            j["d_norm"] = minimal_distance(c, Metric::Norm, cap);
        }
        j["hwe"] = h.pretty();
        if (c.A.size() > 2) j["swe"] = s.pretty();
        if (sd && has_shadow(c)) {
            std::uint64_t scap = std::min<std::uint64_t>(cap, kShadowReportCap);
            if (size <= Z(std::to_string(scap))) j["shadow"] = shadow_json(c, 2 * scap);
            else j["shadow"] = {{"skipped", "shadow words are listed only for codes of at most " + std::to_string(scap) + " words"}};
        }
        if (!bf.empty()) {
            if (z4) j["norm_extremal"] = dn == upper_bound(c.n, bf);
            else if (c.A.kind() != Kind::IntegerRing) j["extremal"] = dh == upper_bound(c.n, bf);
        }
        *need(out_json, "out") = dup(j.dump());
    });
}

int sd_code_shadow(const sd_code* c, uint64_t cap, char** out_json) {
    return guard([&] {
        const Code& code = need(c, "code")->c;
        if (!is_self_dual(code)) throw Error(Err::NotSelfDual, "the shadow is defined for self-dual codes");
        *need(out_json, "out") = dup(shadow_json(code, cap ? cap : 2 * kShadowReportCap).dump());
    });
}

int sd_code_gray(const sd_code* c, uint64_t cap, char** out) {
    return guard([&] {
        std::string s;
        for (const auto& w : gray_map(need(c, "code")->c, cap_or_default(cap))) {
            for (int b : w) s += char('0' + b);
            s += '\n';
        }
        *need(out, "out") = dup(s);
    });
}

int sd_macwilliams(const char* poly, const char* family, const char* kind, const char* size, char** out) {
    return guard([&] {
        PolyQ w = parse_poly(need_str(poly, "poly"));
        EnumKind k = parse_kind(need_str(kind, "kind"));
        Z sz;
        if (size && *size) {
            sz = Z(std::string(size));
        } else {
            Q s = 0;
            for (const auto& [e, cf] : w.terms()) s += cf;
            if (s.get_den() != 1) throw BadArgument("enumerator does not count an integral number of words");
            sz = s.get_num();
        }
        *need(out, "out") = dup(macwilliams(w, need_str(family, "family"), k, sz).pretty());
    });
}

int sd_shadow_transform(const char* poly, const char* family, const char* kind, char** out) {
    return guard([&] {
        PolyQ w = parse_poly(need_str(poly, "poly"));
        *need(out, "out") = dup(shadow_enumerator(w, need_str(family, "family"), parse_kind(need_str(kind, "kind"))).pretty());
    });
}

int sd_molien(const char* group, int q, int terms, const char* denoms, char** out_json) {
    return guard([&] {
        std::string g = need_str(group, "group");
        if (terms < 1) throw BadArgument("terms must be positive");
        MatrixGroup G;
        if (g.find(',') != std::string::npos) {
            std::vector<CMat> gens;
            std::stringstream ss(g);
            std::string part;
            while (std::getline(ss, part, '|')) gens.push_back(parse_matrix(part));
            G = generate_group(gens);
        } else {
            G = named_group(g, q);
        }
        Series s = molien(G, terms - 1);
        json j;
        j["order"] = G.order();
        json co = json::array();
        for (const auto& x : s) co.push_back(str(x));
        j["coefficients"] = co;
        if (denoms && *denoms) {
            std::vector<int> d;
            std::stringstream ss(denoms);
            std::string part;
            while (std::getline(ss, part, ',')) d.push_back(std::stoi(part));
            json num = json::array();
            for (const auto& x : match_molien_form(s, d)) num.push_back(str(x));
            j["denominators"] = d;
            j["numerator"] = num;
        }
        *need(out_json, "out") = dup(j.dump());
    });
}

int sd_extremal(int n, const char* family, char** out_json) {
    return guard([&] {
        std::string f = need_str(family, "family");
        json j;
        j["n"] = n;
        j["family"] = f;
        PolyQ w = extremal_enumerator(n, f);
        j["enumerator"] = w.pretty();
        j["d"] = bound_report(n, f).extremal_d;
        if (f == "2II" && n % 8 == 0) j["leading_count"] = str(extremal_leading_count(n));
        try {
            j["next_coefficient_sign"] = next_coefficient_sign(n, f);
        } catch (const Error&) {
        }
        bool neg = false;
        for (const auto& [e, c] : w.terms()) neg = neg || sgn(c) < 0;
        j["has_negative_coefficient"] = neg;
        *need(out_json, "out") = dup(j.dump());
    });
}

int sd_gleason_decompose(const char* poly, const char* ring, char** out_json) {
    return guard([&] {
        GleasonRing r = named_ring(need_str(ring, "ring"));
        PolyQ w = parse_poly(need_str(poly, "poly"), {"x", "y"});
        auto terms = gleason_decompose(w, r);
        json j;
        j["ring"] = r.name;
        j["expression"] = ring_terms_str(r, terms);
        *need(out_json, "out") = dup(j.dump());
    });
}

int sd_bounds(int n, const char* family, char** out_json) {
    return guard([&] {
        std::string f = need_str(family, "family");
        BoundReport b = bound_report(n, f);
        json j;
        j["n"] = b.n;
        j["family"] = b.family;
        j["metric"] = b.metric;
        j["upper"] = b.upper;
        j["extremal_d"] = b.extremal_d;
        j["epsilon"] = b.epsilon;
        j["meeting_implies_type_ii"] = b.meeting_implies_type_ii;
        if (b.lower_gv >= 0) j["lower_gv"] = b.lower_gv;
        if ((f == "2" || f == "2I") && n % 2 == 0) j["strict_type_i"] = strict_type_i_bound(n);
        auto a = asymptotic_constants();
        j["approx"] = {{"gv_delta", a.gv_delta}, {"krasikov_litsyn", a.krasikov_litsyn}};
        *need(out_json, "out") = dup(j.dump());
    });
}

int sd_mass(int n, const char* family, const char* aut_orders, char** out_json) {
    return guard([&] {
        std::string f = need_str(family, "family");
        Z t = total_count(n, f), g = group_order(n, f);
        json j;
        j["n"] = n;
        j["family"] = f;
        j["total_count"] = t.get_str();
        j["group_order"] = g.get_str();
        Q m(t, g);
        m.canonicalize();
        j["mass"] = str(m);
        if (aut_orders) {
            std::vector<Z> orders;
            std::istringstream in(aut_orders);
            std::string line;
            while (std::getline(in, line)) {
                auto h = line.find('#');
                if (h != std::string::npos) line.resize(h);
                std::istringstream ls(line);
                std::string tok;
                // either a bare order per line or "label components order"
                std::string last;
                while (ls >> tok) last = tok;
                if (!last.empty()) orders.push_back(parse_factored(last));
            }
            MassCheck m = verify_mass(n, f, orders);
            j["codes"] = orders.size();
            j["lhs"] = str(m.lhs);
            j["rhs"] = str(m.rhs);
            j["equal"] = m.equal;
        }
        *need(out_json, "out") = dup(j.dump());
    });
}

int sd_catalog_list(char** out_json) {
    return guard([&] {
        json j = json::array();
        for (const auto& e : catalog())
            j.push_back({{"name", e.name}, {"alphabet", e.code.A.token()}, {"length", e.code.n}, {"stub", e.stub}, {"about", e.about}});
        *need(out_json, "out") = dup(j.dump());
    });
}

int sd_catalog_entry(const char* name, char** out_json) {
    return guard([&] {
        const auto& e = catalog_entry(need_str(name, "name"));
        json j;
        j["name"] = e.name;
        j["about"] = e.about;
        j["stub"] = e.stub;
        if (!e.dc_hex.empty()) j["double_circulant"] = {{"form", e.dc_form}, {"r", e.dc_hex}};
        j["code"] = format_code(e.code);
        json ex = json::object();
        for (const auto& [k, v] : e.expect) ex[k] = v;
        j["expect"] = ex;
        *need(out_json, "out") = dup(j.dump());
    });
}

int sd_construct_glue(const char* components, const char* glue_words, sd_code** out, int* self_dual) {
    return guard([&] {
        std::vector<Component> comps;
        std::stringstream cs(need_str(components, "components"));
        std::string part;
        while (std::getline(cs, part, ',')) comps.push_back(component(part));
        std::vector<std::string> words;
        if (glue_words) {
            std::stringstream gs(glue_words);
            while (std::getline(gs, part, ','))
                if (!part.empty()) words.push_back(part);
        }
        GlueResult r = glue(comps, words);
        if (self_dual) *self_dual = r.self_dual ? 1 : 0;
        *need(out, "out") = wrap(r.code);
    });
}

int sd_construct_subtract(const sd_code* c, const int* cols, int ncols, sd_code** out) {
    return guard([&] {
        if (ncols < 0 || (ncols && !cols)) throw BadArgument("bad column list");
        std::vector<int> v(cols, cols + ncols);
        *need(out, "out") = wrap(subtract(need(c, "code")->c, v));
    });
}

int sd_construct_lift(const sd_code* c, sd_code** out) {
    return guard([&] { *need(out, "out") = wrap(lift_to_z4(need(c, "code")->c)); });
}

int sd_construct_z4_pair(const sd_code* a, const sd_code* b, sd_code** out) {
    return guard([&] { *need(out, "out") = wrap(z4_from_binary_pair(need(a, "code")->c, need(b, "code")->c)); });
}

int sd_construct_graeffe(const char* poly, int n, char** out) {
    return guard([&] { *need(out, "out") = dup(poly_str(graeffe_lift(parse_int_poly(need_str(poly, "poly")), n))); });
}

int sd_construct_cyclic(const char* alphabet, const char* poly, int n, int extended, sd_code** out) {
    return guard([&] {
        Alphabet A = Alphabet::from_token(need_str(alphabet, "alphabet"));
        *need(out, "out") = wrap(cyclic_code(A, parse_int_poly(need_str(poly, "poly")), n, extended != 0));
    });
}

int sd_construct_dc(const char* form, const char* hex, int n, sd_code** out) {
    return guard([&] {
        *need(out, "out") = wrap(double_circulant(parse_dc_form(need_str(form, "form")), need_str(hex, "hex"), n));
    });
}

int sd_construct_shorten(const sd_code* c, int coord, sd_code** out) {
    return guard([&] { *need(out, "out") = wrap(shorten_z4(need(c, "code")->c, coord)); });
}

int sd_construct_direct_sum(const sd_code* a, const sd_code* b, sd_code** out) {
    return guard([&] { *need(out, "out") = wrap(direct_sum(need(a, "code")->c, need(b, "code")->c)); });
}

int sd_construct_extend(const sd_code* c, const char* alphabet, sd_code** out) {
    return guard([&] {
        *need(out, "out") = wrap(tensor_extend(need(c, "code")->c, Alphabet::from_token(need_str(alphabet, "alphabet"))));
    });
}

}  // extern "C"
