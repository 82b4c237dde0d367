#include "sd/code.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>

namespace sd {

Code make_code(const Alphabet& A, int n, std::vector<Vec> gens, bool additive) {
    if (n < 0) throw Error(Err::LengthMismatch, "negative length");
    if (additive && A.form() != Form::TraceHermitian)
        throw Error(Err::UnsupportedAlphabet, "additive codes live over F4H+");
    if (!additive && A.form() == Form::TraceHermitian)
        throw Error(Err::UnsupportedAlphabet, "F4H+ codes are additive");
    for (const auto& g : gens) {
        if ((int)g.size() != n) throw Error(Err::LengthMismatch, "generator of length " + std::to_string(g.size()) + ", expected " + std::to_string(n));
        for (int a : g)
            if (a < 0 || a >= A.size()) throw Error(Err::Parse, "symbol out of range");
    }
    return Code{A, n, std::move(gens), additive};
}

Code make_code(const std::string& token, const std::vector<std::string>& rows, bool additive) {
    Alphabet A = Alphabet::from_token(token);
    std::vector<Vec> g;
    for (const auto& r : rows) g.push_back(A.parse_vec(r));
    int n = g.empty() ? 0 : (int)g[0].size();
    return make_code(A, n, g, additive || A.form() == Form::TraceHermitian);
}

Code additive_f4_code(int n, std::vector<Vec> gens) { return make_code(Alphabet::f4plus(), n, std::move(gens), true); }

Code parse_code(const std::string& text) {
    std::istringstream in(text);
    std::string line, tok;
    std::string alpha;
    int n = -1, additive = -1;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        if (!(ls >> tok)) continue;
        if (tok == "alphabet") {
            ls >> alpha;
        } else if (tok == "length") {
            ls >> n;
        } else if (tok == "additive") {
            ls >> additive;
        } else {
            std::string row = tok, more;
            while (ls >> more) row += more;
            rows.push_back(row);
        }
    }
    if (alpha.empty() || n < 0) throw Error(Err::Parse, "code file needs 'alphabet' and 'length' lines");
    Alphabet A = Alphabet::from_token(alpha);
    if (additive < 0) additive = A.form() == Form::TraceHermitian;
    std::vector<Vec> g;
    for (const auto& r : rows) g.push_back(A.parse_vec(r));
    return make_code(A, n, std::move(g), additive != 0);
}

std::string format_code(const Code& c) {
    std::string s = "alphabet " + c.A.token() + "\nlength " + std::to_string(c.n) + "\nadditive " + (c.additive ? "1" : "0") + "\n";
    for (const auto& g : c.gens) s += c.A.to_string(g) + "\n";
    return s;
}

Code read_code_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Err::Io, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_code(ss.str());
}

// ---------------------------------------------------------------- fields

std::vector<Vec> field_rref(std::vector<Vec> rows, const Alphabet& A, std::vector<int>* pivots) {
    int n = rows.empty() ? 0 : (int)rows[0].size();
    std::size_t r = 0;
    std::vector<int> piv;
    for (int col = 0; col < n && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        int inv = A.inv(rows[r][col]);
        for (int& x : rows[r]) x = A.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            int f = A.neg(rows[i][col]);
            for (int j = 0; j < n; ++j)
                if (rows[r][j]) rows[i][j] = A.add(rows[i][j], A.mul(f, rows[r][j]));
        }
        piv.push_back(col);
        ++r;
    }
    rows.resize(r);
    if (pivots) *pivots = piv;
    return rows;
}

std::vector<Vec> field_nullspace(const std::vector<Vec>& rows, int n, const Alphabet& A) {
    std::vector<int> piv;
    auto R = field_rref(rows, A, &piv);
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<Vec> out;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        Vec u(n, 0);
        u[f] = 1;
        for (std::size_t r = 0; r < R.size(); ++r) u[piv[r]] = A.neg(R[r][f]);
        out.push_back(u);
    }
    return out;
}

namespace {

// F4 symbol index <-> two bits (1 -> bit 0, w -> bit 1); XOR matches F4 addition.
std::vector<Vec> to_bits(const std::vector<Vec>& rows) {
    std::vector<Vec> out;
    for (const auto& r : rows) {
        Vec b(2 * r.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            b[2 * i] = r[i] & 1;
            b[2 * i + 1] = r[i] >> 1;
        }
        out.push_back(b);
    }
    return out;
}

Vec from_bits(const Vec& b) {
    Vec r(b.size() / 2);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[2 * i] | (b[2 * i + 1] << 1);
    return r;
}

long mod(long a, long m) {
    a %= m;
    return a < 0 ? a + m : a;
}

// s*a + t*b = g, preferring s = 1 when a | b so a settled pivot stays put
long ext_gcd(long a, long b, long& s, long& t) {
    if (a != 0 && b % a == 0) {
        s = 1;
        t = 0;
        return a;
    }
    long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b) {
        long q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    s = s0;
    t = t0;
    return a;
}

}  // namespace

SmithForm smith_mod(const std::vector<Vec>& G, int n, int m) {
    int k = (int)G.size();
    std::vector<std::vector<long>> M(k, std::vector<long>(n));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = mod(G[i][j], m);
    SmithForm sf;
    sf.V.assign(n, std::vector<long>(n, 0));
    sf.Vinv = sf.V;
    for (int i = 0; i < n; ++i) sf.V[i][i] = sf.Vinv[i][i] = 1;
    sf.U.assign(k, std::vector<long>(k, 0));
    for (int i = 0; i < k; ++i) sf.U[i][i] = 1;

    auto col_op = [&](int t, int j, long s, long r, long u, long v) {
        // [col t, col j] <- [col t, col j] * [[s, u], [r, v]], det 1
        for (auto* mat : {&M, &sf.V}) {
            for (auto& row : *mat) {
                long a = row[t], b = row[j];
                row[t] = mod(s * a + r * b, m);
                row[j] = mod(u * a + v * b, m);
            }
        }
        // inverse acts on rows t, j of Vinv: [[v, -u], [-r, s]]
        auto& A = sf.Vinv[t];
        auto& B = sf.Vinv[j];
        for (int c = 0; c < n; ++c) {
            long a = A[c], b = B[c];
            A[c] = mod(v * a - u * b, m);
            B[c] = mod(-r * a + s * b, m);
        }
    };

    int lim = std::min(k, n);
    for (int t = 0; t < lim; ++t) {
        int pr = -1, pc = -1;
        for (int i = t; i < k && pr < 0; ++i)
            for (int j = t; j < n; ++j)
                if (M[i][j]) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(M[t], M[pr]);
        std::swap(sf.U[t], sf.U[pr]);
        if (pc != t) col_op(t, pc, 0, 1, -1, 0);  // swap with a sign, det 1
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < k; ++i) {
                long a = M[t][t], b = M[i][t];
                if (!b) continue;
                long s, r;
                long g = ext_gcd(a, b, s, r);
                long p = a / g, q = b / g;
                for (int c = 0; c < n; ++c) {
                    long x = M[t][c], y = M[i][c];
                    M[t][c] = mod(s * x + r * y, m);
                    M[i][c] = mod(-q * x + p * y, m);
                }
                for (int c = 0; c < k; ++c) {
                    long x = sf.U[t][c], y = sf.U[i][c];
                    sf.U[t][c] = mod(s * x + r * y, m);
                    sf.U[i][c] = mod(-q * x + p * y, m);
                }
            }
            for (int j = t + 1; j < n; ++j) {
                long a = M[t][t], b = M[t][j];
                if (!b) continue;
                long s, r;
                long g = ext_gcd(a, b, s, r);
                col_op(t, j, s, r, -b / g, a / g);
                dirty = true;
            }
            for (int i = t + 1; i < k && !dirty; ++i)
                if (M[i][t]) dirty = true;
        }
    }
    for (int t = 0; t < lim; ++t) sf.d.push_back(M[t][t]);
    return sf;
}

bool solve_mod(const std::vector<Vec>& F, int n, const Vec& t, int m, Vec& u) {
    int k = (int)F.size();
    auto sf = smith_mod(F, n, m);
    // D w = U t with w = V^{-1} u
    std::vector<long> rhs(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) rhs[i] = mod(rhs[i] + sf.U[i][j] * t[j], m);
    std::vector<long> w(n, 0);
    for (int i = 0; i < k; ++i) {
        long d = i < (int)sf.d.size() ? sf.d[i] : 0;
        long g = std::gcd(d, (long)m);
        if (rhs[i] % g) return false;
        if (d == 0) continue;
        long mg = m / g, s, r;
        ext_gcd(mod(d / g, mg), mg, s, r);
        w[i] = mod((rhs[i] / g) * s, mg);
    }
    u.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        long v = 0;
        for (int j = 0; j < n; ++j) v = mod(v + sf.V[i][j] * w[j], m);
        u[i] = int(v);
    }
    return true;
}

std::vector<BasisRow> enum_basis(const Code& c) {
    const Alphabet& A = c.A;
    std::vector<BasisRow> out;
    if (c.additive) {
        Alphabet f2 = Alphabet::f2();
        for (const auto& b : field_rref(to_bits(c.gens), f2)) out.push_back({from_bits(b), 2});
        return out;
    }
    if (A.is_field()) {
        for (const auto& r : field_rref(c.gens, A)) {
            if (A.kind() == Kind::F4) {
                Vec wr(c.n);
                for (int j = 0; j < c.n; ++j) wr[j] = A.mul(2, r[j]);
                out.push_back({r, 2});
                out.push_back({wr, 2});
            } else {
                out.push_back({r, A.size()});
            }
        }
        return out;
    }
    int m = A.size();
    auto sf = smith_mod(c.gens, c.n, m);
    for (std::size_t i = 0; i < sf.d.size(); ++i) {
        long g = std::gcd(sf.d[i], (long)m);
        int order = int(m / g);
        if (order == 1) continue;
        Vec r(c.n);
        for (int j = 0; j < c.n; ++j) r[j] = int(mod(sf.d[i] * sf.Vinv[i][j], m));
        out.push_back({r, order});
    }
    return out;
}

Z code_size(const Code& c) {
    Z s = 1;
    for (const auto& b : enum_basis(c)) s *= b.order;
    return s;
}

Code reduced(const Code& c) {
    std::vector<Vec> g;
    auto basis = enum_basis(c);
    if (!c.additive && c.A.kind() == Kind::F4) {
        for (std::size_t i = 0; i < basis.size(); i += 2) g.push_back(basis[i].row);
    } else {
        for (auto& b : basis) g.push_back(b.row);
    }
    return make_code(c.A, c.n, g, c.additive);
}

void check_cap(const Code& c, std::uint64_t cap) {
    Z s = code_size(c);
    if (s > Z(std::to_string(cap))) throw Error(Err::TooLarge, "code has " + s.get_str() + " words, above the cap " + std::to_string(cap));
}

Code dual(const Code& c) {
    const Alphabet& A = c.A;
    if (c.additive) {
        // functional u -> sum tr(u_i conj(v_i)) written on the bits of u
        std::vector<Vec> rows;
        for (const auto& v : c.gens) {
            Vec f(2 * c.n);
            for (int i = 0; i < c.n; ++i) {
                int vb = A.conj(v[i]);
                f[2 * i] = Alphabet::f4_trace(A.mul(1, vb));
                f[2 * i + 1] = Alphabet::f4_trace(A.mul(2, vb));
            }
            rows.push_back(f);
        }
        std::vector<Vec> g;
        for (const auto& b : field_nullspace(rows, 2 * c.n, Alphabet::f2())) g.push_back(from_bits(b));
        return make_code(A, c.n, g, true);
    }
    if (A.is_field()) {
        std::vector<Vec> rows = c.gens;
        if (A.frobenius())
            for (auto& r : rows)
                for (int& x : r) x = A.conj(x);
        return make_code(A, c.n, field_nullspace(rows, c.n, A));
    }
    int m = A.size();
    auto sf = smith_mod(c.gens, c.n, m);
    std::vector<Vec> g;
    for (int i = 0; i < c.n; ++i) {
        long f = i < (int)sf.d.size() ? m / std::gcd(sf.d[i], (long)m) : 1;
        if (f == m) continue;
        Vec u(c.n);
        for (int j = 0; j < c.n; ++j) u[j] = int(mod(f * sf.V[j][i], m));
        g.push_back(u);
    }
    return make_code(A, c.n, g);
}

bool contains(const Code& c, const Vec& v) {
    if ((int)v.size() != c.n) throw Error(Err::LengthMismatch, "vector length differs from code length");
    Code d = dual(c);
    for (const auto& h : d.gens)
        if (c.A.ip(v, h) != 0) return false;
    return true;
}

bool same_code(const Code& a, const Code& b) {
    if (a.A != b.A || a.n != b.n || a.additive != b.additive) return false;
    if (code_size(a) != code_size(b)) return false;
    Code d = dual(b);
    for (const auto& g : a.gens)
        for (const auto& h : d.gens)
            if (a.A.ip(g, h) != 0) return false;
    return true;
}

bool is_self_orthogonal(const Code& c) {
    for (std::size_t i = 0; i < c.gens.size(); ++i)
        for (std::size_t j = i; j < c.gens.size(); ++j)
            if (c.A.ip(c.gens[i], c.gens[j]) != 0) return false;
    return true;
}

bool is_self_dual(const Code& c) {
    if (!is_self_orthogonal(c)) return false;
    Z s = code_size(c);
    Z full = ipow(c.A.size(), c.n);
    return s * s == full;
}

const char* type_name(CodeType t) {
    switch (t) {
    case CodeType::TypeII: return "TypeII";
    case CodeType::StrictTypeI: return "StrictTypeI";
    case CodeType::NotSelfDual: return "NotSelfDual";
    case CodeType::NotApplicable: return "NotApplicable";
    }
    return "?";
}

CodeType classify_type(const Code& c) {
    if (!is_self_dual(c)) return CodeType::NotSelfDual;
    const Alphabet& A = c.A;
    // generator checks suffice for self-orthogonal codes by polarization
    if (A.kind() == Kind::PrimeField && A.size() == 2) {
        for (const auto& g : c.gens)
            if (Alphabet::hamming(g) % 4) return CodeType::StrictTypeI;
        return CodeType::TypeII;
    }
    if (A.kind() == Kind::IntegerRing && A.size() % 2 == 0) {
        for (const auto& g : c.gens)
            if (A.norm(g) % (2 * A.size())) return CodeType::StrictTypeI;
        return CodeType::TypeII;
    }
    if (c.additive) {
        for (const auto& g : c.gens)
            if (Alphabet::hamming(g) % 2) return CodeType::StrictTypeI;
        return CodeType::TypeII;
    }
    return CodeType::NotApplicable;
}

// ---------------------------------------------------------------- Z4

Z4StandardForm z4_standard_form(const Code& c) {
    if (c.A != Alphabet::z(4)) throw Error(Err::UnsupportedAlphabet, "standard form is for Z4 codes");
    int n = c.n;
    std::vector<Vec> M = c.gens;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (auto& r : M) std::swap(r[a], r[b]);
        std::swap(perm[a], perm[b]);
    };
    int k1 = 0;
    for (;;) {
        int pr = -1, pc = -1;
        for (int i = k1; i < (int)M.size() && pr < 0; ++i)
            for (int j = k1; j < n; ++j)
                if (M[i][j] % 2) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(M[k1], M[pr]);
        swap_cols(k1, pc);
        if (M[k1][k1] == 3)
            for (int& x : M[k1]) x = (4 - x) % 4;
        for (int i = 0; i < (int)M.size(); ++i) {
            if (i == k1 || M[i][k1] == 0) continue;
            int f = M[i][k1];
            for (int j = 0; j < n; ++j) M[i][j] = ((M[i][j] - f * M[k1][j]) % 4 + 4) % 4;
        }
        ++k1;
    }
    // remaining rows are even; halve and reduce over F2
    std::vector<Vec> H;
    for (int i = k1; i < (int)M.size(); ++i) {
        Vec h(n);
        for (int j = 0; j < n; ++j) h[j] = M[i][j] / 2;
        H.push_back(h);
    }
    M.resize(k1);
    int k2 = 0;
    for (int col = k1; col < n && k2 < (int)H.size(); ++col) {
        int pr = -1, pc = -1;
        for (int i = k2; i < (int)H.size() && pr < 0; ++i)
            for (int j = k1 + k2; j < n; ++j)
                if (H[i][j]) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(H[k2], H[pr]);
        int t = k1 + k2;
        if (pc != t) {
            for (auto& r : H) std::swap(r[t], r[pc]);
            swap_cols(t, pc);
        }
        for (int i = 0; i < (int)H.size(); ++i)
            if (i != k2 && H[i][t])
                for (int j = 0; j < n; ++j) H[i][j] ^= H[k2][j];
        ++k2;
    }
    H.resize(k2);
    // clear X to binary with twice the second block
    for (auto& r : M)
        for (int a = 0; a < k2; ++a)
            if (r[k1 + a] >= 2)
                for (int j = 0; j < n; ++j) r[j] = (r[j] + 2 * H[a][j]) % 4;

    Z4StandardForm sf;
    sf.n = n;
    sf.k1 = k1;
    sf.k2 = k2;
    sf.perm = perm;
    int rest = n - k1 - k2;
    for (auto& r : M) {
        sf.X.emplace_back(r.begin() + k1, r.begin() + k1 + k2);
        Vec y1(rest), y2(rest);
        for (int j = 0; j < rest; ++j) {
            y1[j] = r[k1 + k2 + j] % 2;
            y2[j] = r[k1 + k2 + j] / 2;
        }
        sf.Y1.push_back(y1);
        sf.Y2.push_back(y2);
    }
    for (auto& h : H) sf.Z.emplace_back(h.begin() + k1 + k2, h.end());
    return sf;
}

Code Z4StandardForm::assemble() const {
    std::vector<Vec> g;
    int rest = n - k1 - k2;
    auto place = [&](const Vec& std_row) {
        Vec r(n);
        for (int j = 0; j < n; ++j) r[perm[j]] = std_row[j];
        g.push_back(r);
    };
    for (int i = 0; i < k1; ++i) {
        Vec r(n, 0);
        r[i] = 1;
        for (int a = 0; a < k2; ++a) r[k1 + a] = X[i][a];
        for (int j = 0; j < rest; ++j) r[k1 + k2 + j] = Y1[i][j] + 2 * Y2[i][j];
        place(r);
    }
    for (int i = 0; i < k2; ++i) {
        Vec r(n, 0);
        r[k1 + i] = 2;
        for (int j = 0; j < rest; ++j) r[k1 + k2 + j] = 2 * Z[i][j];
        place(r);
    }
    return make_code(Alphabet::z(4), n, g);
}

Code z4_dual_closed_form(const Code& c) {
    auto sf = z4_standard_form(c);
    int n = c.n, k1 = sf.k1, k2 = sf.k2, rest = n - k1 - k2;
    std::vector<Vec> g;
    auto place = [&](const Vec& std_row) {
        Vec r(n);
        for (int j = 0; j < n; ++j) r[sf.perm[j]] = ((std_row[j] % 4) + 4) % 4;
        g.push_back(r);
    };
    // [(-Y1 + 2Y2)^T - Z^T X^T, Z^T, I] and [2X^T, 2I, 0]
    for (int j = 0; j < rest; ++j) {
        Vec r(n, 0);
        for (int i = 0; i < k1; ++i) {
            int v = -sf.Y1[i][j] + 2 * sf.Y2[i][j];
            for (int a = 0; a < k2; ++a) v -= sf.Z[a][j] * sf.X[i][a];
            r[i] = v;
        }
        for (int a = 0; a < k2; ++a) r[k1 + a] = sf.Z[a][j];
        r[k1 + k2 + j] = 1;
        place(r);
    }
    for (int a = 0; a < k2; ++a) {
        Vec r(n, 0);
        for (int i = 0; i < k1; ++i) r[i] = 2 * sf.X[i][a];
        r[k1 + a] = 2;
        place(r);
    }
    return make_code(Alphabet::z(4), n, g);
}

std::pair<Code, Code> residue_codes(const Code& c) {
    auto sf = z4_standard_form(c);
    int n = c.n, k1 = sf.k1, k2 = sf.k2, rest = n - k1 - k2;
    std::vector<Vec> g1, g2;
    auto place = [&](const Vec& std_row) {
        Vec r(n);
        for (int j = 0; j < n; ++j) r[sf.perm[j]] = std_row[j];
        return r;
    };
    for (int i = 0; i < k1; ++i) {
        Vec r(n, 0);
        r[i] = 1;
        for (int a = 0; a < k2; ++a) r[k1 + a] = sf.X[i][a];
        for (int j = 0; j < rest; ++j) r[k1 + k2 + j] = sf.Y1[i][j];
        g1.push_back(place(r));
    }
    g2 = g1;
    for (int a = 0; a < k2; ++a) {
        Vec r(n, 0);
        r[k1 + a] = 1;
        for (int j = 0; j < rest; ++j) r[k1 + k2 + j] = sf.Z[a][j];
        g2.push_back(place(r));
    }
    return {make_code(Alphabet::f2(), n, g1), make_code(Alphabet::f2(), n, g2)};
}

std::vector<Vec> gray_map(const Code& c, std::uint64_t cap) {
    if (c.A != Alphabet::z(4)) throw Error(Err::UnsupportedAlphabet, "Gray map needs a Z4 code");
    static const int bits[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    std::vector<Vec> out;
    for_each_codeword(c, cap, [&](const Vec& w) {
        Vec b(2 * c.n);
        for (int j = 0; j < c.n; ++j) {
            b[2 * j] = bits[w[j]][0];
            b[2 * j + 1] = bits[w[j]][1];
        }
        out.push_back(std::move(b));
    });
    return out;
}

// ---------------------------------------------------------------- distributions

const char* metric_name(Metric m) {
    switch (m) {
    case Metric::Hamming: return "hamming";
    case Metric::Lee: return "lee";
    case Metric::Norm: return "norm";
    }
    return "?";
}

Metric parse_metric(const std::string& s) {
    if (s == "hamming") return Metric::Hamming;
    if (s == "lee") return Metric::Lee;
    if (s == "norm") return Metric::Norm;
    throw Error(Err::Parse, "unknown metric " + s);
}

int vec_weight(const Alphabet& A, const Vec& v, Metric m) {
    switch (m) {
    case Metric::Hamming: return Alphabet::hamming(v);
    case Metric::Lee: return A.lee(v);
    case Metric::Norm: return A.norm(v);
    }
    return 0;
}

namespace {

bool binary_fast(const Code& c) { return c.A == Alphabet::f2() && c.n <= 64; }

std::vector<std::uint64_t> packed_basis(const Code& c) {
    std::vector<std::uint64_t> b;
    for (const auto& r : enum_basis(c)) {
        std::uint64_t w = 0;
        for (int j = 0; j < c.n; ++j)
            if (r.row[j]) w |= std::uint64_t(1) << j;
        b.push_back(w);
    }
    return b;
}

}  // namespace

std::map<int, Z> weight_distribution(const Code& c, Metric m, std::uint64_t cap) {
    if (m != Metric::Hamming && c.A.kind() == Kind::F4)
        throw Error(Err::UnsupportedAlphabet, "Lee weight and norm are not defined over F4");
    std::vector<std::uint64_t> counts;
    auto bump = [&](int w) {
        if ((int)counts.size() <= w) counts.resize(w + 1, 0);
        ++counts[w];
    };
    if (binary_fast(c)) {
        check_cap(c, cap);
        auto b = packed_basis(c);
        std::uint64_t w = 0, total = std::uint64_t(1) << b.size();
        bump(0);
        for (std::uint64_t i = 1; i < total; ++i) {
            w ^= b[std::countr_zero(i)];
            bump(std::popcount(w));
        }
    } else if (m == Metric::Hamming) {
        for_each_codeword(c, cap, [&](const Vec& v) { bump(Alphabet::hamming(v)); });
    } else {
        std::vector<int> tab(c.A.size());
        for (int a = 0; a < c.A.size(); ++a) tab[a] = m == Metric::Lee ? c.A.lee(a) : c.A.norm(a);
        for_each_codeword(c, cap, [&](const Vec& v) {
            int s = 0;
            for (int a : v) s += tab[a];
            bump(s);
        });
    }
    std::map<int, Z> out;
    for (std::size_t w = 0; w < counts.size(); ++w)
        if (counts[w]) out[(int)w] = Z(std::to_string(counts[w]));
    return out;
}

int minimal_distance(const Code& c, Metric m, std::uint64_t cap) {
    auto d = weight_distribution(c, m, cap);
    for (const auto& [w, cnt] : d)
        if (w > 0) return w;
    return 0;
}

std::vector<Vec> all_codewords(const Code& c, std::uint64_t cap) {
    std::vector<Vec> out;
    for_each_codeword(c, cap, [&](const Vec& v) { out.push_back(v); });
    return out;
}

}  // namespace sd
