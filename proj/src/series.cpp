#include "fishburn/series.hpp"

#include <stdexcept>

#include "fishburn/checked.hpp"

namespace fishburn {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;  // exact: r is C(n-k+i, i) after each step
    }
    return r;
}

std::int64_t fib_ext(long n) {
    if (n < -2) return 0;
    std::int64_t a = 1, b = 0;  // F_{-2}, F_{-1}
    if (n == -2) return a;
    if (n == -1) return b;
    for (long i = 0; i <= n; ++i) {
        const std::int64_t c = checked_add(a, b);
        a = b;
        b = c;
    }
    return b;
}

std::int64_t pell(int n) {
    if (n < 0) throw std::invalid_argument("pell requires n >= 0");
    std::int64_t a = 0, b = 1;
    if (n == 0) return a;
    for (int i = 2; i <= n; ++i) {
        const std::int64_t c = checked_add(checked_mul(2, b), a);
        a = b;
        b = c;
    }
    return b;
}

std::int64_t catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan requires n >= 0");
    return binomial(2L * n, n) / (n + 1);
}

SparsePoly qbinom(int m, int k) {
    if (k < 0 || k > m) return SparsePoly();
    // Pascal recurrence [m,k] = q^k [m-1,k] + [m-1,k-1], row by row.
    std::vector<SparsePoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = SparsePoly::constant(1);
    for (int i = 1; i <= m; ++i) {
        const int top = std::min(i, k);
        for (int j = top; j >= 1; --j) {
            SparsePoly val = row[static_cast<std::size_t>(j)].shifted(1, j, 0, 0);
            val += row[static_cast<std::size_t>(j) - 1];
            row[static_cast<std::size_t>(j)] = std::move(val);
        }
    }
    return row[static_cast<std::size_t>(k)];
}

XPoly xp_constant(std::int64_t c) {
    XPoly p{SparsePoly::constant(c)};
    xp_trim(p);
    return p;
}

XPoly xp_monomial(const SparsePoly& c, int deg) {
    XPoly p(static_cast<std::size_t>(deg) + 1);
    p[static_cast<std::size_t>(deg)] = c;
    xp_trim(p);
    return p;
}

void xp_trim(XPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

XPoly xp_add(const XPoly& a, const XPoly& b) {
    XPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    xp_trim(out);
    return out;
}

XPoly xp_sub(const XPoly& a, const XPoly& b) {
    XPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
    }
    xp_trim(out);
    return out;
}

XPoly xp_mul(const XPoly& a, const XPoly& b) {
    if (a.empty() || b.empty()) return {};
    XPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    xp_trim(out);
    return out;
}

XPoly xp_pow(const XPoly& a, int e) {
    if (e < 0) throw std::invalid_argument("negative power");
    XPoly out = xp_constant(1);
    for (int i = 0; i < e; ++i) out = xp_mul(out, a);
    return out;
}

bool xp_equal(const XPoly& a, const XPoly& b) {
    XPoly ta = a, tb = b;
    xp_trim(ta);
    xp_trim(tb);
    return ta == tb;
}

RationalGF rgf_normalized(RationalGF g) {
    xp_trim(g.num);
    xp_trim(g.den);
    if (g.den.empty()) throw std::invalid_argument("zero denominator");
    const SparsePoly& c0 = g.den[0];
    if (c0 == SparsePoly::constant(1)) return g;
    if (c0 == SparsePoly::constant(-1)) {
        for (auto& c : g.num) c = SparsePoly() - c;
        for (auto& c : g.den) c = SparsePoly() - c;
        return g;
    }
    throw std::invalid_argument("denominator constant term must normalize to 1");
}

RationalGF rgf_add(const RationalGF& a, const RationalGF& b) {
    return RationalGF{xp_add(xp_mul(a.num, b.den), xp_mul(b.num, a.den)),
                      xp_mul(a.den, b.den)};
}

RationalGF rgf_mul(const RationalGF& a, const RationalGF& b) {
    return RationalGF{xp_mul(a.num, b.num), xp_mul(a.den, b.den)};
}

bool rgf_equal(const RationalGF& a, const RationalGF& b) {
    return xp_equal(xp_mul(a.num, b.den), xp_mul(b.num, a.den));
}

TruncatedSeries expand_rational(const RationalGF& g, int order) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    const RationalGF n = rgf_normalized(g);
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) {
        SparsePoly c;
        if (i < static_cast<int>(n.num.size())) c = n.num[static_cast<std::size_t>(i)];
        for (int j = 1; j <= i && j < static_cast<int>(n.den.size()); ++j)
            c -= n.den[static_cast<std::size_t>(j)] * out.coeffs[static_cast<std::size_t>(i - j)];
        out.coeffs[static_cast<std::size_t>(i)] = std::move(c);
    }
    return out;
}

namespace {

// Dense truncated polynomials in a single variable t, degree <= N.
using TPoly = std::vector<std::int64_t>;

TPoly tp_mul(const TPoly& a, const TPoly& b, int N) {
    TPoly out(static_cast<std::size_t>(N) + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(N); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    }
    return out;
}

}  // namespace

std::vector<std::int64_t> fishburn_series(int N) {
    if (N < 0) throw std::invalid_argument("order must be >= 0");
    const std::size_t sz = static_cast<std::size_t>(N) + 1;
    TPoly total(sz, 0);
    total[0] = 1;
    // one_minus[j] = 1 - (1-t)^j truncated
    TPoly one_minus_t(sz, 0);
    one_minus_t[0] = 1;
    if (N >= 1) one_minus_t[1] = -1;
    TPoly pow_omt(sz, 0);  // (1-t)^m, updated incrementally
    pow_omt[0] = 1;
    TPoly product(sz, 0);  // prod_{j=1}^m (1 - (1-t)^j)
    product[0] = 1;
    for (int m = 1; m <= N; ++m) {
        pow_omt = tp_mul(pow_omt, one_minus_t, N);
        TPoly factor(sz, 0);
        factor[0] = 1 - pow_omt[0];
        for (std::size_t i = 1; i < sz; ++i) factor[i] = checked_sub(0, pow_omt[i]);
        product = tp_mul(product, factor, N);
        for (std::size_t i = 0; i < sz; ++i) total[i] = checked_add(total[i], product[i]);
    }
    return total;
}

std::vector<std::int64_t> invert_transform(const std::vector<std::int64_t>& f_ind, int N) {
    if (!f_ind.empty() && f_ind[0] != 0)
        throw std::invalid_argument("INVERT transform requires zero constant term");
    std::vector<std::int64_t> f(static_cast<std::size_t>(N) + 1, 0);
    f[0] = 1;
    for (int n = 1; n <= N; ++n) {
        std::int64_t sum = 0;
        for (int k = 1; k <= n && k < static_cast<int>(f_ind.size()); ++k)
            sum = checked_add(sum, checked_mul(f_ind[static_cast<std::size_t>(k)],
                                               f[static_cast<std::size_t>(n - k)]));
        f[static_cast<std::size_t>(n)] = sum;
    }
    return f;
}

std::vector<std::int64_t> invert_transform_inverse(const std::vector<std::int64_t>& f, int N) {
    if (f.empty() || f[0] != 1)
        throw std::invalid_argument("inverse INVERT transform requires F(0) = 1");
    // reciprocal of f, then 1 - it
    std::vector<std::int64_t> recip(static_cast<std::size_t>(N) + 1, 0);
    recip[0] = 1;
    for (int n = 1; n <= N; ++n) {
        std::int64_t sum = 0;
        for (int k = 1; k <= n && k < static_cast<int>(f.size()); ++k)
            sum = checked_add(sum, checked_mul(f[static_cast<std::size_t>(k)],
                                               recip[static_cast<std::size_t>(n - k)]));
        recip[static_cast<std::size_t>(n)] = checked_sub(0, sum);
    }
    std::vector<std::int64_t> out(static_cast<std::size_t>(N) + 1, 0);
    for (int n = 1; n <= N; ++n)
        out[static_cast<std::size_t>(n)] = checked_sub(0, recip[static_cast<std::size_t>(n)]);
    return out;
}

}  // namespace fishburn
