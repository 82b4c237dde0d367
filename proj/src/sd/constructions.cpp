#include "sd/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace sd {

namespace detail {
// generated from data/catalog at configure time
const std::vector<std::pair<const char*, const char*>>& embedded_catalog_files();
}  // namespace detail

Code direct_sum(const Code& a, const Code& b) {
    if (a.A != b.A || a.additive != b.additive) throw Error(Err::AlphabetMismatch, "direct sum needs one alphabet");
    std::vector<Vec> g;
    for (const auto& r : a.gens) {
        Vec v(a.n + b.n, 0);
        std::copy(r.begin(), r.end(), v.begin());
        g.push_back(v);
    }
    for (const auto& r : b.gens) {
        Vec v(a.n + b.n, 0);
        std::copy(r.begin(), r.end(), v.begin() + a.n);
        g.push_back(v);
    }
    return make_code(a.A, a.n + b.n, g, a.additive);
}

Code tensor_extend(const Code& c, const Alphabet& target) {
    if (c.A != Alphabet::f2()) throw Error(Err::AlphabetMismatch, "only binary codes are extended");
    if (target.kind() != Kind::F4 && target != Alphabet::f2())
        throw Error(Err::AlphabetMismatch, "target " + target.token() + " does not contain F2");
    // symbol 1 is the unit in every alphabet
    if (target.form() != Form::TraceHermitian) return make_code(target, c.n, c.gens);
    std::vector<Vec> g;
    for (const auto& r : c.gens) {
        g.push_back(r);
        Vec w(r.size());
        for (std::size_t j = 0; j < r.size(); ++j) w[j] = target.mul(2, r[j]);
        g.push_back(w);
    }
    return make_code(target, c.n, g, true);
}

// ---------------------------------------------------------------- catalog files

const std::string& catalog_file(const std::string& name) {
    static const std::map<std::string, std::string> files = [] {
        std::map<std::string, std::string> m;
        for (const auto& [k, v] : detail::embedded_catalog_files()) m[k] = v;
        return m;
    }();
    auto it = files.find(name);
    if (it == files.end()) throw Error(Err::UnknownName, "no catalog file " + name);
    return it->second;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Blocks "<kw> name ... end" with '#' comments removed.
struct Block {
    std::string name;
    std::vector<std::string> lines;
};

std::vector<Block> blocks(const std::string& text, const std::string& kw) {
    std::vector<Block> out;
    std::istringstream in(text);
    std::string line;
    Block* cur = nullptr;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        line = trim(line);
        if (line.empty()) continue;
        if (!cur) {
            if (line.rfind(kw + " ", 0) != 0) throw Error(Err::Parse, "catalog: expected '" + kw + "', got '" + line + "'");
            out.push_back({trim(line.substr(kw.size())), {}});
            cur = &out.back();
        } else if (line == "end") {
            cur = nullptr;
        } else {
            cur->lines.push_back(line);
        }
    }
    if (cur) throw Error(Err::Parse, "catalog: block " + cur->name + " not closed");
    return out;
}

std::pair<std::string, std::string> key_value(const std::string& line) {
    auto sp = line.find(' ');
    if (sp == std::string::npos) return {line, ""};
    return {line.substr(0, sp), trim(line.substr(sp + 1))};
}

bool is_row(const std::string& line) {
    return line.find(' ') == std::string::npos && std::all_of(line.begin(), line.end(), [](char ch) {
               return std::isdigit((unsigned char)ch) || ch == 'w' || ch == 'W';
           });
}

const std::map<std::string, Component>& components() {
    static const std::map<std::string, Component> table = [] {
        std::map<std::string, Component> m;
        for (const auto& b : blocks(catalog_file("components.txt"), "component")) {
            Component c;
            c.name = b.name;
            int n = -1;
            std::vector<Vec> rows;
            Alphabet A = Alphabet::f2();
            for (const auto& l : b.lines) {
                if (is_row(l)) {
                    rows.push_back(A.parse_vec(l));
                    continue;
                }
                auto [k, v] = key_value(l);
                if (k == "length") {
                    n = std::stoi(v);
                } else if (k == "glue") {
                    auto [lab, w] = key_value(v);
                    if (lab.size() != 1) throw Error(Err::Parse, "glue labels are single characters");
                    c.glue.push_back({lab[0], A.parse_vec(w)});
                }
            }
            c.code = make_code(A, n, rows);
            m[c.name] = c;
        }
        return m;
    }();
    return table;
}

}  // namespace

// ---------------------------------------------------------------- gluing

const Vec* Component::find(char label) const {
    for (const auto& g : glue)
        if (g.label == label) return &g.word;
    return nullptr;
}

Component component(const std::string& name) {
    if (name.size() > 1 && name[0] == 'f' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
        int n = std::stoi(name.substr(1));
        if (n < 1 || n > 26) throw Error(Err::UnknownName, "free component length must be 1..26");
        Component c;
        c.name = name;
        c.code = make_code(Alphabet::f2(), n, {});
        for (int i = 0; i < n; ++i) {
            Vec e(n, 0);
            e[i] = 1;
            c.glue.push_back({char('A' + i), e});
        }
        return c;
    }
    const auto& t = components();
    auto it = t.find(name);
    if (it == t.end()) throw Error(Err::UnknownName, "no component " + name);
    return it->second;
}

std::vector<std::string> component_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : components()) out.push_back(k);
    out.push_back("f<n>");
    return out;
}

GlueResult glue(const std::vector<Component>& comps, const std::vector<std::string>& glue_words) {
    if (comps.empty()) throw Error(Err::PreconditionFailed, "no components");
    const Alphabet& A = comps[0].code.A;
    std::vector<int> off;
    int n = 0;
    for (const auto& c : comps) {
        if (c.code.A != A) throw Error(Err::AlphabetMismatch, "components over different alphabets");
        off.push_back(n);
        n += c.code.n;
    }
    std::vector<Vec> g;
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (const auto& r : comps[i].code.gens) {
            Vec v(n, 0);
            std::copy(r.begin(), r.end(), v.begin() + off[i]);
            g.push_back(v);
        }
    for (const auto& w : glue_words) {
        if (w.size() != comps.size())
            throw Error(Err::BadGlueLabel, "glue word '" + w + "' needs one label per component");
        Vec v(n, 0);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (w[i] == '0') continue;
            const Vec* e = comps[i].find(w[i]);
            if (!e) throw Error(Err::BadGlueLabel, std::string("component ") + comps[i].name + " has no glue '" + w[i] + "'");
            std::copy(e->begin(), e->end(), v.begin() + off[i]);
        }
        g.push_back(v);
    }
    GlueResult r;
    r.code = reduced(make_code(A, n, g));
    r.self_dual = is_self_dual(r.code);
    return r;
}

// ---------------------------------------------------------------- subtraction

Code subtract(const Code& b, const std::vector<int>& cols) {
    if (b.A != Alphabet::f2()) throw Error(Err::UnsupportedAlphabet, "subtraction is for binary codes");
    if (cols.empty() || cols.size() % 2) throw Error(Err::PreconditionFailed, "need an even, nonzero number of columns");
    std::vector<char> used(b.n, 0);
    for (int c : cols) {
        if (c < 0 || c >= b.n || used[c]) throw Error(Err::PreconditionFailed, "bad column list");
        used[c] = 1;
    }
    if (!is_self_dual(b)) throw Error(Err::NotSelfDual, "subtraction needs a self-dual parent");
    int m = (int)cols.size() / 2;
    for (int j = 0; j + 1 < m; ++j) {
        Vec t(b.n, 0);
        for (int k = 0; k < 4; ++k) t[cols[2 * j + k]] = 1;
        if (!contains(b, t)) throw Error(Err::NoD2mAtColumns, "tetrad on pairs " + std::to_string(j) + "," + std::to_string(j + 1) + " is not in the code");
    }
    // words whose two entries agree on every pair
    auto rows = field_rref(b.gens, b.A);
    for (int j = 0; j < m; ++j) {
        int c0 = cols[2 * j], c1 = cols[2 * j + 1];
        auto bad = [&](const Vec& v) { return v[c0] != v[c1]; };
        auto it = std::find_if(rows.begin(), rows.end(), bad);
        if (it == rows.end()) continue;
        Vec p = *it;
        rows.erase(it);
        for (auto& r : rows)
            if (bad(r))
                for (int k = 0; k < b.n; ++k) r[k] ^= p[k];
    }
    std::vector<Vec> g;
    for (const auto& r : rows) {
        Vec v;
        for (int k = 0; k < b.n; ++k)
            if (!used[k]) v.push_back(r[k]);
        g.push_back(v);
    }
    Code out = make_code(b.A, b.n - 2 * m, field_rref(g, b.A));
    if (!is_self_dual(out)) throw Error(Err::NoD2mAtColumns, "columns do not carry a subtractable copy of i2^m");
    return out;
}

// ---------------------------------------------------------------- Z4

Code z4_from_binary_pair(const Code& a, const Code& b) {
    Alphabet f2 = Alphabet::f2(), z4 = Alphabet::z(4);
    if (a.A != f2 || b.A != f2) throw Error(Err::UnsupportedAlphabet, "binary residue and torsion codes expected");
    if (a.n != b.n) throw Error(Err::LengthMismatch, "residue and torsion lengths differ");
    int n = a.n;
    for (const auto& r : a.gens)
        if (!contains(b, r)) throw Error(Err::NotNested, "residue code is not inside the torsion code");
    std::vector<int> piv;
    auto ar = field_rref(a.gens, f2, &piv);
    std::vector<Vec> ext;
    for (auto r : field_rref(b.gens, f2)) {
        for (std::size_t i = 0; i < ar.size(); ++i)
            if (r[piv[i]])
                for (int k = 0; k < n; ++k) r[k] ^= ar[i][k];
        if (std::any_of(r.begin(), r.end(), [](int x) { return x; })) ext.push_back(r);
    }
    ext = field_rref(ext, f2);
    // Fix the pairwise inner products of the lifted rows to 0 mod 4 through the pivot entries.
    std::vector<Vec> lifted = ar;
    for (std::size_t j = 0; j < lifted.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (z4.ip(lifted[i], lifted[j]) == 2) lifted[j][piv[i]] = (lifted[j][piv[i]] + 2) % 4;
    for (auto r : ext) {
        for (int& x : r) x *= 2;
        lifted.push_back(r);
    }
    return make_code(z4, n, lifted);
}

Code lift_to_z4(const Code& c) {
    Alphabet f2 = Alphabet::f2(), z4 = Alphabet::z(4);
    if (c.A != f2) throw Error(Err::UnsupportedAlphabet, "lift_to_z4 takes a binary code");
    CodeType t = classify_type(c);
    if (t == CodeType::NotSelfDual) throw Error(Err::NotSelfDual, "lift_to_z4 needs a self-dual code");
    if (t != CodeType::TypeII) throw Error(Err::NotTypeII, "a weight not divisible by 4 blocks the lift");
    std::vector<int> piv;
    auto R = field_rref(c.gens, f2, &piv);
    int n = c.n, k = (int)R.size(), r = n - k;
    std::vector<int> perm = piv;
    for (int j = 0; j < n; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) perm.push_back(j);
    // A is k x r; k == r here
    std::vector<Vec> A(k, Vec(r));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < r; ++j) A[i][j] = R[i][perm[k + j]];
    auto gram = [&](const std::vector<Vec>& X, int i, int j) {
        long s = 0;
        for (int l = 0; l < r; ++l) s += long(X[i][l]) * X[j][l];
        return s;
    };
    // (a): Ahat = B + 2 M' A with M' the strict upper half of (B B^t + I)/2
    std::vector<Vec> H = A;
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < r; ++l) {
            int s = 0;
            for (int j = i + 1; j < k; ++j) {
                long e = gram(A, i, j);
                if ((e / 2) % 2) s ^= A[j][l];
            }
            H[i][l] = (A[i][l] + 2 * s) % 4;
        }
    // (b): pair up rows whose (norm + 1)/4 is odd
    std::vector<int> odd;
    for (int i = 0; i < k; ++i) {
        long d = gram(H, i, i) + 1;
        if (d % 4) throw Error(Err::PreconditionFailed, "lift step (a) failed");
        if ((d / 4) % 2) odd.push_back(i);
    }
    if (odd.size() % 2) throw Error(Err::PreconditionFailed, "odd trace in lift step (b)");
    std::vector<Vec> H2 = H;
    for (std::size_t p = 0; p < odd.size(); p += 2) {
        int i = odd[p], j = odd[p + 1];
        for (int l = 0; l < r; ++l) {
            H2[i][l] = ((H[i][l] - 2 * H[j][l]) % 4 + 4) % 4;
            H2[j][l] = ((H[j][l] - 2 * H[i][l]) % 4 + 4) % 4;
        }
    }
    std::vector<Vec> g;
    for (int i = 0; i < k; ++i) {
        Vec v(n, 0);
        v[perm[i]] = 1;
        for (int l = 0; l < r; ++l) v[perm[k + l]] = H2[i][l];
        g.push_back(v);
    }
    Code out = make_code(z4, n, g);
    if (!is_self_dual(out)) throw Error(Err::PreconditionFailed, "lift is not self-dual");
    for (const auto& v : g)
        if (z4.norm(v) % 8) throw Error(Err::PreconditionFailed, "lift has a generator norm not divisible by 8");
    return out;
}

namespace {

int mod(long a, int m) { return int(((a % m) + m) % m); }

void trim_poly(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int unit_inverse(int a, int m) {
    for (int x = 1; x < m; ++x)
        if (mod(long(a) * x, m) == 1) return x;
    return -1;
}

IntPoly mul(const IntPoly& a, const IntPoly& b, int m) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = mod(c[i + j] + long(a[i]) * b[j], m);
    trim_poly(c);
    return c;
}

IntPoly xn_minus_1(int n, int m) {
    IntPoly p(n + 1, 0);
    p[0] = m - 1;
    p[n] = 1;
    return p;
}

}  // namespace

IntPoly poly_mod(IntPoly a, IntPoly b, int m) {
    for (int& x : a) x = mod(x, m);
    for (int& x : b) x = mod(x, m);
    trim_poly(a);
    trim_poly(b);
    if (b.empty()) throw Error(Err::PreconditionFailed, "division by zero polynomial");
    int inv = unit_inverse(b.back(), m);
    if (inv < 0) throw Error(Err::PreconditionFailed, "divisor has a non-unit leading coefficient");
    while (a.size() >= b.size()) {
        int f = mod(long(a.back()) * inv, m);
        std::size_t s = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[s + j] = mod(a[s + j] - long(f) * b[j], m);
        trim_poly(a);
    }
    return a;
}

std::string poly_str(const IntPoly& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p[i]) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || p[i] != 1) s += std::to_string(p[i]);
        if (i > 0) {
            if (p[i] != 1) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

IntPoly parse_int_poly(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) s += ch;
    if (s.empty()) throw Error(Err::Parse, "empty polynomial");
    if (std::all_of(s.begin(), s.end(), ::isdigit)) {
        IntPoly p;
        for (char ch : s) p.push_back(ch - '0');
        return p;
    }
    IntPoly p;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
        long coef = 1;
        bool have = false;
        std::size_t st = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i > st) {
            coef = std::stol(s.substr(st, i - st));
            have = true;
        }
        if (i < s.size() && s[i] == '*') ++i;
        int e = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                st = i;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
                if (i == st) throw Error(Err::Parse, "bad exponent in " + text);
                e = std::stoi(s.substr(st, i - st));
            }
        } else if (!have) {
            throw Error(Err::Parse, "bad term in " + text);
        }
        if ((int)p.size() <= e) p.resize(e + 1, 0);
        p[e] += int(sign * coef);
        if (i < s.size() && s[i] != '+' && s[i] != '-') throw Error(Err::Parse, "unexpected '" + std::string(1, s[i]) + "' in " + text);
    }
    return p;
}

IntPoly graeffe_lift(const IntPoly& g2in, int n) {
    IntPoly g2;
    for (int x : g2in) g2.push_back(mod(x, 2));
    trim_poly(g2);
    if (g2.empty() || n < 1) throw Error(Err::PreconditionFailed, "nonzero polynomial and n >= 1 needed");
    if (!poly_mod(xn_minus_1(n, 2), g2, 2).empty()) throw Error(Err::NotADivisor, "g2 does not divide x^n - 1 over F2");
    IntPoly e(g2.size(), 0), d(g2.size(), 0);
    for (std::size_t i = 0; i < g2.size(); ++i) (i % 2 ? d : e)[i] = g2[i];
    trim_poly(e);
    trim_poly(d);
    IntPoly e2 = mul(e, e, 4), d2 = mul(d, d, 4);
    IntPoly sq(std::max(e2.size(), d2.size()), 0);
    for (std::size_t i = 0; i < sq.size(); ++i)
        sq[i] = mod((i < e2.size() ? e2[i] : 0) - (i < d2.size() ? d2[i] : 0), 4);
    IntPoly g((sq.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < sq.size(); ++i) {
        if (i % 2 && sq[i]) throw Error(Err::PreconditionFailed, "odd power in e^2 - d^2");
        if (i % 2 == 0) g[i / 2] = sq[i];
    }
    IntPoly neg = g;
    for (int& x : neg) x = mod(-x, 4);
    IntPoly best;
    for (const IntPoly* c : {&g, &neg}) {
        if (c->empty() || c->back() % 2 == 0) continue;
        if (!poly_mod(xn_minus_1(n, 4), *c, 4).empty()) continue;
        if (best.empty() || c->back() == 1) best = *c;
    }
    if (best.empty()) throw Error(Err::NotADivisor, "neither sign of the lift divides x^n - 1 mod 4");
    if (best.back() != 1)
        for (int& x : best) x = mod(3L * x, 4);
    return best;
}

Code cyclic_code(const Alphabet& A, const IntPoly& gin, int n, bool extended) {
    if (A.kind() == Kind::F4) throw Error(Err::UnsupportedAlphabet, "cyclic_code works over F_p and Z_m");
    IntPoly g;
    for (int x : gin) g.push_back(mod(x, A.size()));
    trim_poly(g);
    int deg = (int)g.size() - 1;
    if (deg < 0 || deg > n) throw Error(Err::PreconditionFailed, "generator degree out of range");
    std::vector<Vec> rows;
    for (int s = 0; s + deg < n; ++s) {
        Vec v(n, 0);
        for (int i = 0; i <= deg; ++i) v[s + i] = g[i];
        if (extended) {
            long sum = 0;
            for (int x : v) sum += x;
            v.insert(v.begin(), mod(-sum, A.size()));
        }
        rows.push_back(v);
    }
    return make_code(A, n + (extended ? 1 : 0), rows);
}

Code shorten_z4(const Code& c, int coord) {
    Alphabet z4 = Alphabet::z(4);
    if (c.A != z4) throw Error(Err::UnsupportedAlphabet, "shorten_z4 takes a Z4 code");
    if (coord < 0 || coord >= c.n) throw Error(Err::PreconditionFailed, "coordinate out of range");
    if (!is_self_dual(c)) throw Error(Err::NotSelfDual, "shortening needs a self-dual code");
    std::vector<Vec> g = c.gens;
    auto unit = std::find_if(g.begin(), g.end(), [&](const Vec& v) { return v[coord] % 2 == 1; });
    std::vector<Vec> out;
    auto scaled = [](Vec v, int f) {
        for (int& x : v) x = mod(long(x) * f, 4);
        return v;
    };
    auto minus = [](Vec a, const Vec& b, int f) {
        for (std::size_t j = 0; j < a.size(); ++j) a[j] = mod(a[j] - long(f) * b[j], 4);
        return a;
    };
    if (unit != g.end()) {
        Vec p = scaled(*unit, (*unit)[coord]);  // 1 and 3 are their own inverses
        for (auto it = g.begin(); it != g.end(); ++it)
            if (it != unit) out.push_back(minus(*it, p, (*it)[coord]));
        out.push_back(scaled(p, 2));
    } else {
        auto two = std::find_if(g.begin(), g.end(), [&](const Vec& v) { return v[coord] == 2; });
        if (two == g.end()) throw Error(Err::NotSelfDual, "coordinate is identically zero");
        Vec p = *two;
        for (auto it = g.begin(); it != g.end(); ++it)
            if (it != two) out.push_back((*it)[coord] == 2 ? minus(*it, p, 1) : *it);
        out.push_back(scaled(p, 2));
    }
    for (auto& v : out) v.erase(v.begin() + coord);
    Code s = reduced(make_code(z4, c.n - 1, out));
    if (!is_self_dual(s)) throw Error(Err::PreconditionFailed, "shortened code is not self-dual");
    return s;
}

// ---------------------------------------------------------------- double circulants

DcForm parse_dc_form(const std::string& s) {
    if (s == "D1" || s == "bordered") return DcForm::Bordered;
    if (s == "D2" || s == "pure") return DcForm::Pure;
    throw Error(Err::Parse, "double circulant form is D1 (bordered) or D2 (pure), got " + s);
}

Code double_circulant(DcForm form, const std::string& hex, int n) {
    if (n < 2 || n % 2) throw Error(Err::PreconditionFailed, "double circulant length must be even");
    if (form == DcForm::Bordered && n % 4) throw Error(Err::PreconditionFailed, "bordered form needs 4 | n");
    int k = n / 2, s = form == DcForm::Bordered ? k - 1 : k;
    std::vector<int> bits;
    for (char ch : hex) {
        int v;
        if (std::isdigit((unsigned char)ch)) v = ch - '0';
        else if (std::isxdigit((unsigned char)ch)) v = std::tolower(ch) - 'a' + 10;
        else throw Error(Err::Parse, "bad hex digit in " + hex);
        for (int b = 3; b >= 0; --b) bits.push_back((v >> b) & 1);
    }
    auto first = std::find(bits.begin(), bits.end(), 1);
    bits.erase(bits.begin(), first);
    if ((int)bits.size() > s) throw Error(Err::PreconditionFailed, "first row " + hex + " is longer than the circulant");
    Vec r(s - bits.size(), 0);
    r.insert(r.end(), bits.begin(), bits.end());
    std::vector<Vec> g;
    for (int i = 0; i < k; ++i) {
        Vec v(n, 0);
        v[i] = 1;
        if (form == DcForm::Pure) {
            for (int j = 0; j < s; ++j) v[k + j] = r[mod(j - i, s)];
        } else if (i == 0) {
            for (int j = 1; j < k; ++j) v[k + j] = 1;
        } else {
            v[k] = 1;
            for (int j = 0; j < s; ++j) v[k + 1 + j] = r[mod(j - (i - 1), s)];
        }
        g.push_back(v);
    }
    return make_code(Alphabet::f2(), n, g);
}

// ---------------------------------------------------------------- tetrad codes

Code z4_tetrad_code(char variant, int m) {
    if (m < 2) throw Error(Err::PreconditionFailed, "tetrad codes need m >= 2");
    int n = 2 * m;
    std::vector<Vec> g;
    for (int j = 0; j + 1 < m; ++j) {
        Vec v(n, 0);
        v[2 * j] = v[2 * j + 1] = v[2 * j + 2] = 1;
        v[2 * j + 3] = 3;
        g.push_back(v);
    }
    Vec alt(n, 0), v2(n, 0);
    for (int j = 0; j < n; j += 2) alt[j] = 2;
    v2[n - 2] = v2[n - 1] = 2;
    switch (variant) {
        case 'D': break;
        case 'O': g.push_back(alt); break;
        case 'P': g.push_back(v2); break;
        case 'S': g.push_back(alt); g.push_back(v2); break;
        default: throw Error(Err::PreconditionFailed, std::string("unknown tetrad code variant ") + variant);
    }
    return make_code(Alphabet::z(4), n, g);
}

Code klemm_code(int m) {
    if (m < 1) throw Error(Err::PreconditionFailed, "m >= 1");
    int n = 4 * m;
    std::vector<Vec> g{Vec(n, 1)};
    for (int i = 1; i + 1 < n; ++i) {
        Vec v(n, 0);
        v[i] = v[n - 1] = 2;
        g.push_back(v);
    }
    return make_code(Alphabet::z(4), n, g);
}

// ---------------------------------------------------------------- catalog

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (const auto& b : blocks(catalog_file("codes.txt"), "code")) {
            CatalogEntry e;
            e.name = b.name;
            std::string alpha = "F2";
            int n = -1, additive = -1;
            std::vector<std::string> rows;
            for (const auto& l : b.lines) {
                if (is_row(l)) {
                    rows.push_back(l);
                    continue;
                }
                auto [k, v] = key_value(l);
                if (k == "about") e.about = v;
                else if (k == "alphabet") alpha = v;
                else if (k == "length") n = std::stoi(v);
                else if (k == "additive") additive = std::stoi(v);
                else if (k == "stub") e.stub = true;
                else if (k == "dc") {
                    auto [f, h] = key_value(v);
                    e.dc_form = f;
                    e.dc_hex = h;
                } else e.expect[k] = v;
            }
            Alphabet A = Alphabet::from_token(alpha);
            bool add = additive < 0 ? A.form() == Form::TraceHermitian : additive != 0;
            if (!e.dc_hex.empty()) {
                e.code = double_circulant(parse_dc_form(e.dc_form), e.dc_hex, n);
            } else {
                std::vector<Vec> g;
                for (const auto& r : rows) g.push_back(A.parse_vec(r));
                e.code = make_code(A, n, g, add);
            }
            out.push_back(std::move(e));
        }
        return out;
    }();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw Error(Err::UnknownName, "no catalog entry " + name);
}

}  // namespace sd
