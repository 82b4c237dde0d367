#include "sd/shadow.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>

namespace sd {

bool has_shadow(const Code& c) {
    const Alphabet& A = c.A;
    if (c.additive) return true;
    if (A.kind() == Kind::PrimeField && A.size() == 2) return true;
    return A.kind() == Kind::IntegerRing && A.size() % 2 == 0;
}

namespace {

void require_shadow_family(const Code& c) {
    if (!has_shadow(c)) throw Error(Err::UnsupportedFamily, "no shadow for family " + c.A.family());
}

// parity functional on a self-orthogonal code, valued in Z/2
int parity_bit(const Code& c, const Vec& v) {
    if (c.additive) return Alphabet::hamming(v) % 2;
    if (c.A.size() == 2) return (Alphabet::hamming(v) / 2) % 2;
    return (c.A.norm(v) / c.A.size()) % 2;
}

int value_modulus(const Code& c) { return c.additive ? 2 : c.A.size(); }

Vec add_vec(const Alphabet& A, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = A.add(a[i], b[i]);
    return r;
}

// rows of the linear map u -> ((u, g_1), ..., (u, g_k)) on the coordinates used by solve_mod
std::vector<Vec> functional_rows(const Code& c, const std::vector<Vec>& gens) {
    std::vector<Vec> rows;
    for (const auto& g : gens) {
        if (c.additive) {
            Vec f(2 * c.n);
            for (int i = 0; i < c.n; ++i) {
                int gb = c.A.conj(g[i]);
                f[2 * i] = Alphabet::f4_trace(c.A.mul(1, gb));
                f[2 * i + 1] = Alphabet::f4_trace(c.A.mul(2, gb));
            }
            rows.push_back(f);
        } else {
            rows.push_back(g);
        }
    }
    return rows;
}

// Words packed one byte per symbol; sorting indices over the flat buffer is
// far cheaper than sorting millions of separately allocated vectors.
class WordBuffer {
public:
    explicit WordBuffer(int n) : n_(n) {}
    void push(const Vec& v) {
        for (int x : v) data_.push_back(static_cast<unsigned char>(x));
        ++count_;
    }
    std::vector<Vec> sorted() const {
        std::size_t m = count_;
        std::vector<std::uint32_t> idx(m);
        for (std::size_t i = 0; i < m; ++i) idx[i] = std::uint32_t(i);
        const unsigned char* d = data_.data();
        std::size_t n = n_;
        std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) { return std::memcmp(d + a * n, d + b * n, n) < 0; });
        std::vector<Vec> out;
        out.reserve(m);
        for (auto i : idx) out.emplace_back(d + i * n, d + (i + 1) * n);
        return out;
    }

private:
    int n_;
    std::size_t count_ = 0;
    std::vector<unsigned char> data_;
};

}  // namespace

int parity_target(const Code& c, const Vec& v) {
    if (c.additive) return Alphabet::hamming(v) % 2;
    if (c.A.size() == 2) return (Alphabet::hamming(v) / 2) % 2;
    return (c.A.norm(v) / 2) % c.A.size();
}

bool is_parity_vector(const Code& c, const Vec& u) {
    for (const auto& g : c.gens)
        if (c.A.ip(u, g) != parity_target(c, g)) return false;
    return true;
}

Code doubly_even_subcode(const Code& c) {
    require_shadow_family(c);
    if (!is_self_orthogonal(c)) throw Error(Err::NotSelfOrthogonal, "parity subcode needs a self-orthogonal code");
    auto basis = enum_basis(c);
    int p = -1;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (parity_bit(c, basis[i].row)) {
            p = (int)i;
            break;
        }
    if (p < 0) return c;
    std::vector<Vec> g;
    const Alphabet& A = c.A;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Vec& r = basis[i].row;
        if ((int)i == p || parity_bit(c, r)) {
            Vec twice = add_vec(A, r, r);
            if (Alphabet::hamming(twice)) g.push_back(twice);
            if ((int)i != p) g.push_back(add_vec(A, r, basis[p].row));
        } else {
            g.push_back(r);
        }
    }
    return make_code(A, c.n, g, c.additive);
}

std::vector<Vec> shadow_by_cosets(const Code& c, std::uint64_t cap) {
    require_shadow_family(c);
    Code c0 = doubly_even_subcode(c);
    WordBuffer out(c.n);
    bool same = code_size(c0) == code_size(c);
    if (same) {
        // C-perp itself
        for_each_codeword(dual(c), cap, [&](const Vec& u) { out.push(u); });
    } else {
        // C0 has index 2 in C, so one generator outside C0 separates C0-perp from C-perp
        const Vec* odd = nullptr;
        for (const auto& g : c.gens)
            if (!odd && !contains(c0, g)) odd = &g;
        for_each_codeword(dual(c0), cap, [&](const Vec& u) {
            if (c.A.ip(u, *odd) != 0) out.push(u);
        });
    }
    return out.sorted();
}

std::vector<Vec> shadow_by_parity(const Code& c, std::uint64_t cap) {
    require_shadow_family(c);
    if (!is_self_orthogonal(c)) throw Error(Err::NotSelfOrthogonal, "shadow needs a self-orthogonal code");
    int m = value_modulus(c);
    Vec t;
    for (const auto& g : c.gens) t.push_back(parity_target(c, g));
    auto rows = functional_rows(c, c.gens);
    int width = c.additive ? 2 * c.n : c.n;
    Vec p;
    if (!solve_mod(rows, width, t, m, p)) throw Error(Err::PreconditionFailed, "no parity vector exists");
    if (c.additive) {
        Vec q(c.n);
        for (int i = 0; i < c.n; ++i) q[i] = p[2 * i] | (p[2 * i + 1] << 1);
        p = q;
    }
    if (!is_parity_vector(c, p)) throw Error(Err::PreconditionFailed, "solved parity vector fails the parity condition");
    WordBuffer out(c.n);
    for_each_codeword(dual(c), cap, [&](const Vec& u) { out.push(add_vec(c.A, p, u)); });
    return out.sorted();
}

std::vector<Vec> shadow_set(const Code& c, std::uint64_t cap) {
    auto a = shadow_by_cosets(c, cap);
    auto b = shadow_by_parity(c, cap);
    if (a != b) throw Error(Err::PreconditionFailed, "shadow routes disagree");
    return a;
}

CosetDecomposition coset_decomposition(const Code& c, std::uint64_t cap) {
    if (!is_self_dual(c)) throw Error(Err::NotSelfDual, "coset decomposition needs a self-dual code");
    CosetDecomposition d;
    d.c0 = doubly_even_subcode(c);
    d.u0 = d.u1 = d.u2 = d.u3 = Vec(c.n, 0);
    if (code_size(d.c0) == code_size(c)) {
        d.type_ii = true;
        return d;
    }
    bool found = false;
    for_each_codeword(c, cap, [&](const Vec& v) {
        if (parity_bit(c, v) && (!found || v < d.u2)) {
            d.u2 = v;
            found = true;
        }
    });
    auto s = shadow_by_parity(c, cap);
    d.u1 = s.front();
    d.u3 = add_vec(c.A, d.u1, d.u2);
    return d;
}

std::pair<Code, Code> neighbors(const Code& c, std::uint64_t cap) {
    if (!(c.A == Alphabet::f2())) throw Error(Err::PreconditionFailed, "neighbors are built for binary codes");
    if (c.n % 8) throw Error(Err::PreconditionFailed, "neighbors need 8 | n");
    if (classify_type(c) != CodeType::StrictTypeI) throw Error(Err::PreconditionFailed, "neighbors need a singly-even self-dual code");
    auto d = coset_decomposition(c, cap);
    auto build = [&](const Vec& u) {
        auto g = d.c0.gens;
        g.push_back(u);
        Code r = make_code(c.A, c.n, g);
        if (classify_type(r) != CodeType::TypeII) throw Error(Err::PreconditionFailed, "neighbor is not Type II");
        return r;
    };
    return {build(d.u1), build(d.u3)};
}

}  // namespace sd
