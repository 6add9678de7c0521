#pragma once

#include <cstdint>
#include <vector>

#include "fishburn/poly.hpp"

namespace fishburn {

// -- integer sequences used throughout ---------------------------------------

// C(n,k) with the counting convention: zero whenever k < 0, n < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// Fibonacci numbers indexed so that F_0 = F_1 = 1, extended downward with
// F_{-2} = 1, F_{-1} = 0 and F_n = 0 for n < -2.
std::int64_t fib_ext(long n);

// Pell numbers: P_0 = 0, P_1 = 1, P_n = 2 P_{n-1} + P_{n-2}.
std::int64_t pell(int n);

// Catalan numbers via the closed form C(2n,n)/(n+1).
std::int64_t catalan(int n);

// Gaussian binomial: the inversion generating function over binary words of
// length m with k ones, as a polynomial in q.
SparsePoly qbinom(int m, int k);

// -- polynomials in x over SparsePoly ----------------------------------------

// Index j holds the coefficient of x^j.  Trailing zero coefficients are
// trimmed by the helpers so equality is well defined.
using XPoly = std::vector<SparsePoly>;

XPoly xp_constant(std::int64_t c);
XPoly xp_monomial(const SparsePoly& c, int deg);
XPoly xp_add(const XPoly& a, const XPoly& b);
XPoly xp_sub(const XPoly& a, const XPoly& b);
XPoly xp_mul(const XPoly& a, const XPoly& b);
XPoly xp_pow(const XPoly& a, int e);
void xp_trim(XPoly& a);
bool xp_equal(const XPoly& a, const XPoly& b);

struct TruncatedSeries {
    int order = 0;                // highest retained power of x
    std::vector<SparsePoly> coeffs;  // size order+1

    explicit TruncatedSeries(int order_in)
        : order(order_in), coeffs(static_cast<std::size_t>(order_in) + 1) {}
    const SparsePoly& at(int n) const { return coeffs[static_cast<std::size_t>(n)]; }
};

// A rational generating function num/den in x with SparsePoly coefficients.
// The denominator's x^0 coefficient must normalize to the constant 1.
struct RationalGF {
    XPoly num;
    XPoly den;
};

RationalGF rgf_normalized(RationalGF g);
RationalGF rgf_add(const RationalGF& a, const RationalGF& b);
RationalGF rgf_mul(const RationalGF& a, const RationalGF& b);
// Equality as rational functions, decided by cross-multiplication of exact
// polynomials -- no sampling, no tolerance.
bool rgf_equal(const RationalGF& a, const RationalGF& b);

// The unique series with den * series = num (mod x^{order+1}), computed by
// the linear recurrence the denominator induces.
TruncatedSeries expand_rational(const RationalGF& g, int order);

// Coefficients of t^0..t^N of 1 + sum_{m>=1} prod_{j=1}^m (1-(1-t)^j).
// Each product is divisible by t^m, so the outer sum may stop at m = N.
std::vector<std::int64_t> fishburn_series(int N);

// F(x) = 1/(1 - Find(x)) to order N; `f_ind` must have zero constant term.
std::vector<std::int64_t> invert_transform(const std::vector<std::int64_t>& f_ind, int N);
// Find(x) = 1 - 1/F(x); requires F(0) = 1.
std::vector<std::int64_t> invert_transform_inverse(const std::vector<std::int64_t>& f, int N);

}  // namespace fishburn
