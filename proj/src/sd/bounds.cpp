#include "sd/bounds.hpp"

#include <cctype>
#include <cmath>
#include <functional>

namespace sd {

namespace {

// q of a qH / qE label, 0 if the label is not of that shape
int q_of(const std::string& f, char kind) {
    if (f.size() < 2 || f.back() != kind) return 0;
    std::string num = f.substr(0, f.size() - 1);
    for (char ch : num)
        if (!std::isdigit((unsigned char)ch)) return 0;
    return std::stoi(num);
}

}  // namespace

BoundReport bound_report(int n, const std::string& family) {
    if (n <= 0) throw Error(Err::PreconditionFailed, "length must be positive");
    BoundReport r;
    r.n = n;
    r.family = family;
    if (family == "2" || family == "2I") {
        if (n == 2 || n == 4 || n == 6) r.epsilon = -2;
        else if (n % 24 == 22) r.epsilon = 2;
        r.upper = 4 * (n / 24) + 4 + r.epsilon;
        r.meeting_implies_type_ii = n % 24 == 0;
        if (n % 2 == 0) r.lower_gv = gv_distance(n, "2");
    } else if (family == "2II") {
        r.upper = 4 * (n / 24) + 4;
        if (n % 8 == 0) r.lower_gv = gv_distance(n, "2II");
    } else if (family == "3") {
        r.upper = 3 * (n / 12) + 3;
    } else if (family == "4H" || family == "4H+II") {
        r.upper = 2 * (n / 6) + 2;
    } else if (family == "4H+" || family == "4H+I") {
        if (n == 1) r.epsilon = -1;
        else if (n % 6 == 5) r.epsilon = 1;
        r.upper = 2 * (n / 6) + 2 + r.epsilon;
    } else if (family == "4E" || q_of(family, 'E') || q_of(family, 'H')) {
        r.upper = n / 2 + 1;
    } else if (family == "4Z" || family == "4Z-norm" || family == "4ZI") {
        r.metric = "norm";
        if (n % 24 == 23) r.epsilon = 4;
        r.upper = 8 * (n / 24) + 8 + r.epsilon;
    } else if (family == "4ZII") {
        r.metric = "norm";
        r.upper = 8 * (n / 24) + 8;
    } else {
        throw Error(Err::UnsupportedFamily, "no bound for family " + family);
    }
    r.extremal_d = r.upper;
    return r;
}

int upper_bound(int n, const std::string& family) { return bound_report(n, family).upper; }

int strict_type_i_bound(int n) {
    if (n <= 0 || n % 2) throw Error(Err::PreconditionFailed, "binary self-dual codes need even length");
    int b = upper_bound(n, "2I");
    if (n % 24 == 0) b -= 2;
    // 2[n/8]+2 is met by a Type I code only at these lengths
    int w = 2 * (n / 8) + 2;
    if (!(n == 2 || n == 4 || n == 6 || n == 12 || n == 14 || n == 22)) w -= 2;
    return std::min(b, w);
}

int gv_distance(int n, const std::string& family) {
    int step;
    Z rhs;
    if (family == "2" || family == "2I") {
        if (n <= 0 || n % 2) throw Error(Err::PreconditionFailed, "family 2 needs even n");
        step = 2;
        rhs = ipow(2, n / 2 - 1) + 1;
    } else if (family == "2II") {
        if (n <= 0 || n % 8) throw Error(Err::PreconditionFailed, "family 2II needs 8 | n");
        step = 4;
        rhs = ipow(2, n / 2 - 2) + 1;
    } else {
        throw Error(Err::UnsupportedFamily, "no GV bound for family " + family);
    }
    // sum over 0 < i < d with step | i; the sum is constant past n, so d is capped at n
    Z sum = 0;
    int best = 1;
    for (int d = 1; d <= n; ++d) {
        if (d - 1 > 0 && (d - 1) % step == 0) sum += binom(n, d - 1);
        if (sum < rhs) best = d;
        else break;
    }
    return best;
}

PolyQ average_weight_enumerator(int n, const std::string& family) {
    int step;
    Q scale;
    if (family == "2" || family == "2I") {
        if (n <= 0 || n % 2) throw Error(Err::PreconditionFailed, "family 2 needs even n");
        step = 2;
        scale = Q(1) / Q(ipow(2, n / 2 - 1) + 1);
    } else if (family == "2II") {
        if (n <= 0 || n % 8) throw Error(Err::PreconditionFailed, "family 2II needs 8 | n");
        step = 4;
        scale = Q(1) / Q(ipow(2, n / 2 - 2) + 1);
    } else {
        throw Error(Err::UnsupportedFamily, "no average enumerator for family " + family);
    }
    PolyQ w(2, {"x", "y"});
    w.add_term({n, 0}, Q(1));
    w.add_term({0, n}, Q(1));
    for (int i = step; i < n; i += step) w.add_term({n - i, i}, scale * Q(binom(n, i)));
    return w;
}

double binary_entropy(double x) {
    if (x <= 0 || x >= 1) return 0;
    return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        double mid = (lo + hi) / 2, fm = f(mid);
        if ((fm < 0) == (flo < 0)) lo = mid, flo = fm;
        else hi = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace

AsymptoticConstants asymptotic_constants() {
    AsymptoticConstants a;
    a.gv_delta = bisect([](double x) { return binary_entropy(x) - 0.5; }, 1e-9, 0.5);
    a.krasikov_litsyn = bisect(
        [](double x) { return (((8 * x - 24) * x + 40) * x - 30) * x * x + 10 * x - 1; }, 0.0, 0.5);
    return a;
}

std::string bound_family(const Code& c) {
    const Alphabet& A = c.A;
    bool two = classify_type(c) == CodeType::TypeII;
    if (c.additive) return two ? "4H+II" : "4H+I";
    if (A.kind() == Kind::PrimeField && A.size() == 2) return two ? "2II" : "2I";
    if (A.kind() == Kind::PrimeField && A.size() == 3) return "3";
    if (A.kind() == Kind::F4) return A.form() == Form::Hermitian ? "4H" : "4E";
    if (A.kind() == Kind::PrimeField) return std::to_string(A.size()) + "E";
    if (A.kind() == Kind::IntegerRing && A.size() == 4) return two ? "4ZII" : "4Z";
    throw Error(Err::UnsupportedFamily, "no extremality notion for " + A.token());
}

bool is_extremal(const Code& c, std::uint64_t cap) {
    if (!is_self_dual(c)) throw Error(Err::NotSelfDual, "extremality is defined for self-dual codes");
    std::string f = bound_family(c);
    if (c.A.kind() == Kind::IntegerRing)
        throw Error(Err::UnsupportedFamily, "codes over Z4 have only norm-extremality");
    return minimal_distance(c, Metric::Hamming, cap) == upper_bound(c.n, f);
}

bool is_norm_extremal(const Code& c, std::uint64_t cap) {
    if (!(c.A.kind() == Kind::IntegerRing && c.A.size() == 4))
        throw Error(Err::UnsupportedAlphabet, "norm-extremality is defined over Z4");
    if (!is_self_dual(c)) throw Error(Err::NotSelfDual, "extremality is defined for self-dual codes");
    return minimal_distance(c, Metric::Norm, cap) == upper_bound(c.n, bound_family(c));
}

}  // namespace sd
