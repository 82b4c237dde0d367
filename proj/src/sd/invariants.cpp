#include "sd/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <unordered_set>

#include "sd/alphabet.hpp"
#include "sd/wenum.hpp"

namespace sd {

// ---------------------------------------------------------------- matrices

CMat CMat::identity(int d) {
    CMat m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = Cyclo(1);
    return m;
}

CMat CMat::diag(const std::vector<Cyclo>& d) {
    CMat m((int)d.size());
    for (int i = 0; i < m.dim; ++i) m.at(i, i) = d[i];
    return m;
}

CMat CMat::from_rows(const std::vector<std::vector<Cyclo>>& rows, const Cyclo& s) {
    CMat m((int)rows.size());
    for (int i = 0; i < m.dim; ++i) {
        if ((int)rows[i].size() != m.dim) throw Error(Err::LengthMismatch, "matrix is not square");
        for (int j = 0; j < m.dim; ++j) m.at(i, j) = s * rows[i][j];
    }
    return m;
}

Cyclo CMat::trace() const {
    Cyclo t;
    for (int i = 0; i < dim; ++i) t += at(i, i);
    return t;
}

int CMat::conductor() const {
    long N = 1;
    for (const auto& x : a) N = lcm_int(N, x.conductor());
    return (int)N;
}

CMat CMat::lift(int N) const {
    CMat m = *this;
    for (auto& x : m.a)
        if (x.conductor() != N) x = x.lift(N);
    return m;
}

std::string CMat::str() const {
    std::string s;
    for (int i = 0; i < dim; ++i) {
        if (i) s += "; ";
        for (int j = 0; j < dim; ++j) s += (j ? ", " : "") + at(i, j).str();
    }
    return s;
}

CMat operator*(const CMat& x, const CMat& y) {
    if (x.dim != y.dim) throw Error(Err::LengthMismatch, "matrix dimensions differ");
    CMat r(x.dim);
    for (int i = 0; i < x.dim; ++i)
        for (int k = 0; k < x.dim; ++k) {
            const Cyclo& v = x.at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < x.dim; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

bool operator==(const CMat& x, const CMat& y) {
    if (x.dim != y.dim) return false;
    for (std::size_t k = 0; k < x.a.size(); ++k)
        if (x.a[k] != y.a[k]) return false;
    return true;
}

namespace {

struct MatHash {
    std::size_t operator()(const CMat& m) const {
        std::size_t h = 0;
        for (const auto& x : m.a) h = h * 1000003 ^ x.hash();
        return h;
    }
};

}  // namespace

MatrixGroup generate_group(const std::vector<CMat>& gens, std::size_t cap) {
    if (gens.empty()) throw Error(Err::PreconditionFailed, "no generators");
    MatrixGroup G;
    G.dim = gens[0].dim;
    long N = 1;
    for (const auto& g : gens) {
        if (g.dim != G.dim) throw Error(Err::LengthMismatch, "generators of different dimensions");
        N = lcm_int(N, g.conductor());
    }
    G.conductor = (int)N;
    for (const auto& g : gens) G.gens.push_back(g.lift(G.conductor));

    std::unordered_set<CMat, MatHash> seen;
    std::deque<CMat> work;
    CMat id = CMat::identity(G.dim).lift(G.conductor);
    seen.insert(id);
    G.elements.push_back(id);
    work.push_back(id);
    while (!work.empty()) {
        CMat cur = work.front();
        work.pop_front();
        for (const auto& g : G.gens) {
            CMat p = (cur * g).lift(G.conductor);
            if (seen.count(p)) continue;
            if (seen.size() >= cap)
                throw Error(Err::CapExceeded, "group closure exceeds " + std::to_string(cap) + " elements");
            seen.insert(p);
            G.elements.push_back(p);
            work.push_back(std::move(p));
        }
    }
    return G;
}

MatrixGroup named_group(const std::string& name, int q) {
    Cyclo one(1), zero(0);
    auto r2 = Cyclo::sqrt_of(2).inv();
    if (name == "G2q" || name == "G2") {
        return generate_group({CMat::from_rows({{one, Cyclo(long(q - 1))}, {one, -one}}, Cyclo::sqrt_of(q).inv())});
    }
    if (name == "G4") return generate_group({CMat::diag({-one, -one})});
    if (name == "G16")
        return generate_group({CMat::from_rows({{one, one}, {one, -one}}, r2), CMat::diag({one, -one})});
    if (name == "G192")
        return generate_group({CMat::from_rows({{one, one}, {one, -one}}, r2), CMat::diag({one, Cyclo::i()})});
    if (name == "G48")
        return generate_group({CMat::from_rows({{one, Cyclo(2)}, {one, -one}}, Cyclo::sqrt_of(3).inv()),
                               CMat::diag({one, Cyclo::zeta(3)})});
    if (name == "D12")
        return generate_group({CMat::from_rows({{one, Cyclo(3)}, {one, -one}}, Cyclo(Q(1, 2))), CMat::diag({one, -one})});
    if (name == "G120") {
        auto z = [](int k) { return Cyclo::zeta(5, k); };
        Cyclo a = z(1) + z(4), b = z(2) + z(3);
        CMat M = CMat::from_rows({{one, Cyclo(2), Cyclo(2)}, {one, a, b}, {one, b, a}}, Cyclo::sqrt_of(5).inv());
        CMat D = CMat::diag({one, z(1), z(4)});
        CMat P = CMat::from_rows({{one, zero, zero}, {zero, zero, one}, {zero, one, zero}});
        return generate_group({M, D, P});
    }
    throw Error(Err::PreconditionFailed, "unknown group " + name);
}

std::vector<std::string> named_group_names() { return {"G2q", "G4", "G16", "G192", "G48", "D12", "G120"}; }

// ---------------------------------------------------------------- Molien

namespace {

// det(I - l A) as coefficients 1, b_1, ..., b_m (Faddeev-LeVerrier)
std::vector<Cyclo> det_i_minus(const CMat& A) {
    int m = A.dim;
    std::vector<Cyclo> c(m + 1);  // charpoly t^m + c[m-1] t^(m-1) + ... + c[0]
    c[m] = Cyclo(1);
    CMat M(m);
    for (int k = 1; k <= m; ++k) {
        CMat AM = A * M;
        for (int i = 0; i < m; ++i) AM.at(i, i) += c[m - k + 1];
        M = AM;
        c[m - k] = -(A * M).trace() * Cyclo(Q(1, k));
    }
    std::vector<Cyclo> b(m + 1);
    for (int k = 0; k <= m; ++k) b[k] = c[m - k];
    return b;
}

std::string key_of(const std::vector<Cyclo>& v) {
    std::string s;
    for (const auto& x : v) s += x.str() + "|";
    return s;
}

}  // namespace

Series molien(const MatrixGroup& g, int K) {
    if (K < 0) throw Error(Err::PreconditionFailed, "negative truncation");
    // elements sharing det(I - lA) contribute the same series
    std::map<std::string, std::pair<std::vector<Cyclo>, long>> classes;
    for (const auto& A : g.elements) {
        auto b = det_i_minus(A);
        auto& e = classes[key_of(b)];
        if (e.second == 0) e.first = b;
        ++e.second;
    }
    std::vector<Cyclo> total(K + 1);
    for (const auto& [k, e] : classes) {
        const auto& b = e.first;
        std::vector<Cyclo> r(K + 1);
        r[0] = Cyclo(1);
        for (int d = 1; d <= K; ++d) {
            Cyclo s;
            for (int j = 1; j <= d && j < (int)b.size(); ++j)
                if (!b[j].is_zero()) s -= b[j] * r[d - j];
            r[d] = s;
        }
        for (int d = 0; d <= K; ++d) total[d] += Cyclo(e.second) * r[d];
    }
    Series out(K + 1);
    Q inv_order = Q(1) / Q((long)g.order());
    for (int d = 0; d <= K; ++d) {
        Q v = total[d].rational() * inv_order;
        if (sgn(v) < 0 || v.get_den() != 1)
            throw Error(Err::NonRationalResult, "Molien coefficient " + str(v) + " is not a nonnegative integer");
        out[d] = v;
    }
    return out;
}

Series expand_molien_form(const Series& num, const std::vector<int>& denoms, int K) {
    Series s(K + 1, Q(0));
    for (std::size_t i = 0; i < num.size() && (int)i <= K; ++i) s[i] = num[i];
    for (int d : denoms) {
        if (d <= 0) throw Error(Err::PreconditionFailed, "denominator degree must be positive");
        for (int k = d; k <= K; ++k) s[k] += s[k - d];
    }
    return s;
}

Series match_molien_form(const Series& s, const std::vector<int>& denoms) {
    int top = 0;
    for (int d : denoms) top = std::max(top, d);
    if ((int)s.size() < 2 * top) throw Error(Err::PreconditionFailed, "series too short for candidate degrees");
    Series r = s;
    for (int d : denoms)
        for (int k = (int)r.size() - 1; k >= d; --k) r[k] -= r[k - d];
    // the numerator must terminate well before the truncation point
    int last = -1;
    for (int k = 0; k < (int)r.size(); ++k) {
        if (sgn(r[k]) < 0) throw Error(Err::NoMatch, "negative numerator coefficient at degree " + std::to_string(k));
        if (!is_zero(r[k])) last = k;
    }
    if (last >= (int)r.size() - top) throw Error(Err::NoMatch, "numerator does not terminate within the truncation");
    r.resize(last + 1);
    return r;
}

// ---------------------------------------------------------------- averaging

PolyC act(const PolyC& f, const CMat& A) {
    int m = A.dim;
    if (f.nvars() != m) throw Error(Err::LengthMismatch, "polynomial and matrix dimensions differ");
    std::vector<PolyC> img;
    for (int i = 0; i < m; ++i) {
        PolyC p(m, f.names());
        for (int j = 0; j < m; ++j) p += PolyC::monomial([&] { Exps e(m, 0); e[j] = 1; return e; }(), A.at(i, j), f.names());
        img.push_back(p);
    }
    return f.substitute(img);
}

namespace {

PolyC canon(const PolyC& f, int N) {
    return f.map_coeffs<Cyclo>([&](const Cyclo& c) { return N % c.conductor() == 0 ? c.lift(N) : c; });
}

bool poly_eq(const PolyC& a, const PolyC& b) { return (a - b).is_zero_poly(); }

}  // namespace

PolyC average(const PolyC& f, const MatrixGroup& g) {
    PolyC s(f.nvars(), f.names());
    for (const auto& A : g.elements) s += act(f, A);
    return Cyclo(Q(1) / Q((long)g.order())) * s;
}

bool is_invariant(const PolyC& f, const MatrixGroup& g) {
    for (const auto& A : g.gens)
        if (!poly_eq(canon(act(f, A), g.conductor), canon(f, g.conductor))) return false;
    return true;
}

// ---------------------------------------------------------------- parsing

namespace {

struct CycloParser {
    const std::string& s;
    std::size_t p = 0;

    void ws() {
        while (p < s.size() && std::isspace((unsigned char)s[p])) ++p;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw Error(Err::Parse, "cannot parse '" + s + "': " + what + " at offset " + std::to_string(p));
    }
    long number() {
        std::size_t b = p;
        while (p < s.size() && std::isdigit((unsigned char)s[p])) ++p;
        if (b == p) fail("expected number");
        return std::stol(s.substr(b, p - b));
    }
    Cyclo atom() {
        ws();
        if (p >= s.size()) fail("unexpected end");
        char c = s[p];
        if (c == '(') {
            ++p;
            Cyclo v = expr();
            ws();
            if (p >= s.size() || s[p] != ')') fail("expected )");
            ++p;
            return v;
        }
        if (c == '-') {
            ++p;
            return -atom();
        }
        if (c == '+') {
            ++p;
            return atom();
        }
        if (std::isdigit((unsigned char)c)) return Cyclo(number());
        if (s.compare(p, 4, "sqrt") == 0) {
            p += 4;
            ws();
            if (p < s.size() && s[p] == '(') {
                ++p;
                ws();
                long q = number();
                ws();
                if (p >= s.size() || s[p] != ')') fail("expected )");
                ++p;
                return Cyclo::sqrt_of((int)q);
            }
            return Cyclo::sqrt_of((int)number());
        }
        if (c == 'i') {
            ++p;
            return Cyclo::i();
        }
        if (c == 'w') {
            ++p;
            return Cyclo::zeta(3);
        }
        if (c == 'z') {
            ++p;
            return Cyclo::zeta((int)number());
        }
        fail("unknown symbol");
    }
    Cyclo term() {
        Cyclo v = atom();
        for (;;) {
            ws();
            if (p < s.size() && s[p] == '*') {
                ++p;
                v = v * atom();
            } else if (p < s.size() && s[p] == '/') {
                ++p;
                Cyclo d = atom();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }
    Cyclo expr() {
        Cyclo v = term();
        for (;;) {
            ws();
            if (p < s.size() && s[p] == '+') {
                ++p;
                v = v + term();
            } else if (p < s.size() && s[p] == '-') {
                ++p;
                v = v - term();
            } else {
                return v;
            }
        }
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Cyclo parse_cyclo(const std::string& text) {
    CycloParser P{text};
    Cyclo v = P.expr();
    P.ws();
    if (P.p != text.size()) P.fail("trailing input");
    return v;
}

CMat parse_matrix(const std::string& text) {
    std::string t = text;
    // an optional leading "scalar:" multiplies every entry
    Cyclo scale(1);
    auto colon = t.find(':');
    if (colon != std::string::npos) {
        scale = parse_cyclo(t.substr(0, colon));
        t = t.substr(colon + 1);
    }
    std::vector<std::vector<Cyclo>> rows;
    for (const auto& r : split(t, ';')) {
        std::vector<Cyclo> row;
        for (const auto& e : split(r, ',')) row.push_back(parse_cyclo(e));
        rows.push_back(row);
    }
    return CMat::from_rows(rows, scale);
}

// ---------------------------------------------------------------- rings

namespace {

PolyQ P(const std::string& s) { return parse_poly(s, {"x", "y"}); }

}  // namespace

GleasonRing named_ring(const std::string& name) {
    GleasonRing r;
    r.name = name;
    PolyQ one = PolyQ::constant(2, Q(1), {"x", "y"});
    r.secondary = {one};
    r.secondary_names = {"1"};
    PolyQ phi2 = P("x^2 + y^2"), theta8 = P("x^2*y^2") * P("x^2 - y^2").pow(2);
    PolyQ phi8 = P("x^8 + 14*x^4*y^4 + y^8"), phi24 = P("x^4*y^4") * P("x^4 - y^4").pow(4);
    if (name == "2I") {
        r.primary = {phi2, theta8};
        r.primary_names = {"phi2", "theta8"};
        r.group = "G16";
        r.phi_num = {1};
        r.phi_den = {2, 8};
    } else if (name == "2II") {
        r.primary = {phi8, phi24};
        r.primary_names = {"phi8", "phi24'"};
        r.group = "G192";
        r.phi_num = {1};
        r.phi_den = {8, 24};
    } else if (name == "3") {
        r.primary = {P("x^4 + 8*x*y^3"), P("y^3") * P("x^3 - y^3").pow(3)};
        r.primary_names = {"g4", "g12"};
        r.group = "G48";
        r.phi_num = {1};
        r.phi_den = {4, 12};
    } else if (name == "4H") {
        r.primary = {P("x^2 + 3*y^2"), P("y^2") * P("x^2 - y^2").pow(2)};
        r.primary_names = {"h2", "h6"};
        r.group = "D12";
        r.phi_num = {1};
        r.phi_den = {2, 6};
    } else if (name == "4H+") {
        r.primary = {P("x + y"), P("y*x - y^2")};
        r.primary_names = {"x+y", "y(x-y)"};
        r.group = "G2q";
        r.phi_num = {1};
        r.phi_den = {1, 2};
    } else if (name == "4Z") {
        r.primary = {P("x + y"), P("y*x - y^2") * P("x^2 + x*y + 2*y^2")};
        r.primary_names = {"x+y", "y(x-y)(x^2+xy+2y^2)"};
        r.secondary.push_back(P("y^4") * P("x - y").pow(4));
        r.secondary_names.push_back("y^4(x-y)^4");
        r.phi_num = {1, 0, 0, 0, 0, 0, 0, 0, 1};
        r.phi_den = {1, 4};
    } else if (name == "2I.shadow") {
        r.primary = {P("x*y"), P("x^4 - y^4").pow(2)};
        r.primary_names = {"xy", "(x^4-y^4)^2"};
        r.phi_num = {1};
        r.phi_den = {2, 8};
    } else if (name == "SO" || name == "SO.8m-1" || name == "SO.8m+1") {
        PolyQ p1 = P("x"), p7 = P("x^7 + 7*x^3*y^4");
        PolyQ p17 = P("x^17 + 17*x^13*y^4 + 187*x^9*y^8 + 51*x^5*y^12");
        PolyQ p23 = P("x^23 + 506*x^15*y^8 + 1288*x^11*y^12 + 253*x^7*y^16");
        if (name == "SO") {
            r.primary = {phi2, theta8};
            r.primary_names = {"phi2", "theta8"};
            r.secondary = {p1, p7};
            r.secondary_names = {"p1", "p7"};
            r.phi_num = {0, 1, 0, 0, 0, 0, 0, 1};
            r.phi_den = {2, 8};
        } else {
            r.primary = {phi8, phi24};
            r.primary_names = {"phi8", "phi24'"};
            if (name == "SO.8m-1") {
                r.secondary = {p7, p23};
                r.secondary_names = {"p7", "p23"};
                r.phi_num = Series(24, Q(0));
                r.phi_num[7] = r.phi_num[23] = 1;
            } else {
                r.secondary = {p1, p17};
                r.secondary_names = {"p1", "p17"};
                r.phi_num = Series(18, Q(0));
                r.phi_num[1] = r.phi_num[17] = 1;
            }
            r.phi_den = {8, 24};
        }
    } else {
        throw Error(Err::UnsupportedFamily, "no ring named " + name);
    }
    return r;
}

std::vector<std::string> named_ring_names() {
    return {"2I", "2II", "3", "4H", "4H+", "4Z", "2I.shadow", "SO", "SO.8m-1", "SO.8m+1"};
}

namespace {

int hdeg(const PolyQ& p) {
    int d = p.degree();
    if (d < 0) throw Error(Err::PreconditionFailed, "ring basis element is not homogeneous");
    return d;
}

void exps_with_sum(const std::vector<int>& deg, int target, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(deg.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == deg.size()) {
            if (left % deg[i] == 0) {
                cur[i] = left / deg[i];
                out.push_back(cur);
            }
            return;
        }
        for (int a = left / deg[i]; a >= 0; --a) {
            cur[i] = a;
            rec(i + 1, left - a * deg[i]);
        }
    };
    if (target >= 0) rec(0, target);
}

PolyQ basis_product(const GleasonRing& r, const RingTerm& t) {
    PolyQ p = r.secondary[t.secondary];
    for (std::size_t i = 0; i < t.exps.size(); ++i) p *= r.primary[i].pow(t.exps[i]);
    return p;
}

// Solves A c = b over Q with A square; returns empty on singular A.
std::vector<Q> solve_q(std::vector<std::vector<Q>> A, std::vector<Q> b) {
    int n = (int)A.size();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!is_zero(A[r][c])) {
                piv = r;
                break;
            }
        if (piv < 0) return {};
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (int r = 0; r < n; ++r) {
            if (r == c || is_zero(A[r][c])) continue;
            Q f = A[r][c] / A[c][c];
            for (int k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    for (int c = 0; c < n; ++c) b[c] /= A[c][c];
    return b;
}

}  // namespace

std::vector<RingTerm> gleason_decompose(const PolyQ& w, const GleasonRing& r) {
    int n = w.degree();
    if (w.is_zero_poly()) return {};
    if (n < 0) throw Error(Err::DegreeMismatch, "enumerator is not homogeneous");
    if (w.nvars() != r.primary[0].nvars()) throw Error(Err::LengthMismatch, "variable count differs from the ring");
    std::vector<int> pdeg;
    for (const auto& p : r.primary) pdeg.push_back(hdeg(p));
    std::vector<RingTerm> terms;
    for (std::size_t s = 0; s < r.secondary.size(); ++s) {
        std::vector<std::vector<int>> ex;
        exps_with_sum(pdeg, n - hdeg(r.secondary[s]), ex);
        for (auto& e : ex) terms.push_back({(int)s, e, Q(0)});
    }
    if (terms.empty()) throw Error(Err::DegreeMismatch, "ring " + r.name + " has nothing in degree " + std::to_string(n));
    std::vector<PolyQ> basis;
    for (const auto& t : terms) basis.push_back(basis_product(r, t));

    // evaluation points (1, t, t^(n+1), ...) until the square system is regular
    int k = (int)terms.size(), nv = w.nvars();
    auto point = [&](long t) {
        std::vector<Q> pt(nv);
        pt[0] = 1;
        Z v = t;
        for (int i = 1; i < nv; ++i) {
            pt[i] = Q(v);
            v = v * ipow(t, n + 1);
        }
        return pt;
    };
    std::vector<std::vector<Q>> rows;
    std::vector<Q> rhs;
    std::vector<Q> sol;
    long t = 0;
    int limit = k + n + 8;
    while (sol.empty()) {
        if (t > limit) throw Error(Err::PreconditionFailed, "ring basis is linearly dependent in degree " + std::to_string(n));
        auto pt = point(t++);
        std::vector<Q> row;
        for (const auto& b : basis) row.push_back(b.eval(pt));
        rows.push_back(row);
        rhs.push_back(w.eval(pt));
        if ((int)rows.size() < k) continue;
        // keep a maximal independent subset of rows
        std::vector<std::vector<Q>> A;
        std::vector<Q> bb;
        std::vector<std::vector<Q>> echelon;
        for (std::size_t i = 0; i < rows.size() && (int)A.size() < k; ++i) {
            std::vector<Q> v = rows[i];
            for (const auto& e : echelon) {
                int lead = 0;
                while (is_zero(e[lead])) ++lead;
                if (!is_zero(v[lead])) {
                    Q f = v[lead] / e[lead];
                    for (int j = 0; j < k; ++j) v[j] -= f * e[j];
                }
            }
            bool nz = false;
            for (const auto& x : v) nz = nz || !is_zero(x);
            if (!nz) continue;
            // reduce existing rows by v's leading column to keep them in echelon form
            int lead = 0;
            while (is_zero(v[lead])) ++lead;
            for (auto& e : echelon)
                if (!is_zero(e[lead])) {
                    Q f = e[lead] / v[lead];
                    for (int j = 0; j < k; ++j) e[j] -= f * v[j];
                }
            echelon.push_back(v);
            A.push_back(rows[i]);
            bb.push_back(rhs[i]);
        }
        if ((int)A.size() == k) sol = solve_q(A, bb);
    }
    for (int i = 0; i < k; ++i) terms[i].coeff = sol[i];
    PolyQ residual = w;
    for (int i = 0; i < k; ++i) residual -= sol[i] * basis[i];
    if (!residual.is_zero_poly()) throw Error(Err::NotInRing, "polynomial is not in ring " + r.name);
    std::vector<RingTerm> out;
    for (auto& t2 : terms)
        if (!is_zero(t2.coeff)) out.push_back(t2);
    return out;
}

PolyQ ring_element(const GleasonRing& r, const std::vector<RingTerm>& terms) {
    PolyQ s(r.primary[0].nvars(), r.primary[0].names());
    for (const auto& t : terms) s += t.coeff * basis_product(r, t);
    return s;
}

std::string ring_terms_str(const GleasonRing& r, const std::vector<RingTerm>& terms) {
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty()) s += " + ";
        s += str(t.coeff);
        if (r.secondary_names[t.secondary] != "1") s += "*" + r.secondary_names[t.secondary];
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (t.exps[i]) s += "*" + r.primary_names[i] + "^" + std::to_string(t.exps[i]);
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- extremal

namespace {

struct ExtremalSetup {
    GleasonRing ring;
    int d1, d2, step, D;
};

ExtremalSetup setup(int n, const std::string& family) {
    if (family != "2II" && family != "2I" && family != "3" && family != "4H")
        throw Error(Err::UnsupportedFamily, "no extremal enumerator for family " + family);
    ExtremalSetup s{named_ring(family), 0, 0, 0, 0};
    s.d1 = hdeg(s.ring.primary[0]);
    s.d2 = hdeg(s.ring.primary[1]);
    if (n <= 0 || n % s.d1) throw Error(Err::DegreeMismatch, "length " + std::to_string(n) + " not admissible for " + family);
    // lowest power of y in g(1, y)
    s.step = n + 1;
    for (const auto& [e, c] : s.ring.primary[1].terms()) s.step = std::min(s.step, e[1]);
    s.D = n / s.d2 + 1;
    return s;
}

Series at_x1(const PolyQ& p, int len) {
    Series s(len, Q(0));
    for (const auto& [e, c] : p.terms())
        if (e[1] < len) s[e[1]] += c;
    return s;
}

PolyQ from_ring_coeffs(const ExtremalSetup& s, int n, const std::vector<Q>& c) {
    PolyQ w(2, {"x", "y"});
    for (int b = 0; b < (int)c.size(); ++b) {
        if (is_zero(c[b])) continue;
        w += c[b] * (s.ring.primary[0].pow((n - b * s.d2) / s.d1) * s.ring.primary[1].pow(b));
    }
    return w;
}

}  // namespace

std::vector<Q> extremal_ring_coeffs(int n, const std::string& family) {
    ExtremalSetup s = setup(n, family);
    int len = n + 1;
    Series f1 = at_x1(s.ring.primary[0], len), g1 = at_x1(s.ring.primary[1], len);
    std::vector<Series> B;
    for (int b = 0; b < s.D; ++b)
        B.push_back(series_mul(series_pow(f1, (n - b * s.d2) / s.d1, len), series_pow(g1, b, len), len));
    std::vector<Q> c(s.D, Q(0));
    for (int j = 0; j < s.D; ++j) {
        int k = s.step * j;
        Q v = j == 0 ? Q(1) : Q(0);
        for (int b = 0; b < j; ++b) v -= c[b] * B[b][k];
        if (is_zero(B[j][k])) throw Error(Err::SingularG, "ring basis is not triangular");
        c[j] = v / B[j][k];
    }
    return c;
}

PolyQ extremal_enumerator(int n, const std::string& family) {
    ExtremalSetup s = setup(n, family);
    std::vector<Q> c;
    if (family == "2I") {
        for (int i = 0; i < s.D; ++i) c.push_back(extremal_c(n, i));
    } else {
        c = extremal_ring_coeffs(n, family);
    }
    return from_ring_coeffs(s, n, c);
}

Q extremal_leading_count(int n) {
    if (n <= 0 || n % 8) throw Error(Err::DegreeMismatch, "leading count needs 8 | n");
    long mu = n / 24;
    Q N(n);
    switch (n % 24) {
        case 0:
            return Q(binom(n, 5) * binom(5 * mu - 2, mu - 1)) / Q(binom(4 * mu + 4, 5));
        case 8:
            return Q(1, 4) * N * (N - 1) * (N - 2) * (N - 4) * Q(factorial(5 * mu)) /
                   Q(factorial(mu) * factorial(4 * mu + 4));
        default:
            return Q(3, 2) * N * (N - 2) * Q(factorial(5 * mu + 2)) / Q(factorial(mu) * factorial(4 * mu + 4));
    }
}

Q burmann_lagrange(const Series& f, const Series& g, int i, int j) {
    if (i < 0 || j < 0) throw Error(Err::PreconditionFailed, "negative index");
    if (g.size() < 2 || !is_zero(g[0]) || is_zero(g[1])) throw Error(Err::SingularG, "need g(0) = 0 and g'(0) != 0");
    if (i == 0) return j == 0 && !f.empty() ? f[0] : Q(0);
    std::size_t len = i;
    // x / g(x)
    Series gs(g.begin() + 1, g.end());
    Series h = series_pow(gs, -i, len);
    // j x^(j-1) f + x^j f'
    Series F(len, Q(0));
    for (std::size_t k = 0; k < f.size(); ++k) {
        // term f_k x^(k+j) contributes (k+j) f_k x^(k+j-1)
        long e = (long)k + j - 1;
        if (e >= 0 && e < (long)len) F[e] += Q(long(k) + j) * f[k];
    }
    Series prod = series_mul(F, h, len);
    return prod[i - 1] / Q(i);
}

Q extremal_c(int n, int i) {
    if (n <= 0 || n % 2) throw Error(Err::DegreeMismatch, "2I needs even n");
    std::size_t len = std::max(i, 1) + 2;
    Series onep = {1, 1}, onem = {1, -1};
    Series f = series_pow(onep, -(n / 2), len);
    Series g = series_mul(Series{0, 1}, series_mul(series_pow(onem, 2, len), series_pow(onep, -4, len), len), len);
    return burmann_lagrange(f, g, i, 0);
}

int next_coefficient_sign(int n, const std::string& family) {
    int c, mu;
    if (family == "2I") c = 2, mu = n / 8;
    else if (family == "2II") c = 4, mu = n / 24;
    else if (family == "3") c = 3, mu = n / 12;
    else if (family == "4H") c = 2, mu = n / 6;
    else throw Error(Err::UnsupportedFamily, "no next coefficient for family " + family);
    PolyQ w = extremal_enumerator(n, family);
    int k = c * (mu + 2);
    if (k > n) return 0;
    return sgn(w.coeff({n - k, k}));
}

bool shadow_integral(const PolyQ& w) {
    Q size = 0;
    for (const auto& [e, c] : w.terms()) size += c;
    if (is_zero(size)) return false;
    PolyQ s = apply_sub(w, shadow_sub(Alphabet::f2(), EnumKind::Hwe), 1 / size);
    for (const auto& [e, c] : s.terms())
        if (sgn(c) < 0 || c.get_den() != 1) return false;
    return true;
}

}  // namespace sd
