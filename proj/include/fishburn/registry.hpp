#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fishburn/poly.hpp"
#include "fishburn/series.hpp"

namespace fishburn {

// -- named rational generating functions -------------------------------------
//
// Registry of the displayed rational generating functions.  Entries whose id
// ends in "(k)" take the pattern-length parameter k.
//
//   Bn_beta(k)        binary words avoiding one length-k word
//   An012_beta(k)     ascent sequences avoiding 012 and a binary ascent
//                     sequence of length k containing a 1
//   An012_binary(k)   ascent sequences avoiding 012 and a binary word of
//                     length k starting with 1 and containing a 0
//   S231_123(k)       |S_n(231,123,sigma)| for non-monotone sigma, |sigma|=k
//   F1423_1 ... F1423_3, T_1423    label series for F_n(321,1423) in (q,t)
//   F3124_1a, F3124_1b, F3124_k(k), T_3124   label series for F_n(321,3124) in t
//   F321_4123         |F_n(321,4123)|

RationalGF named_gf(const std::string& name, int k = -1);
std::vector<std::string> named_gf_ids();

// -- named closed forms -------------------------------------------------------

using ClosedFormValue = std::variant<std::int64_t, SparsePoly>;

// Evaluate a registered closed form; throws on unknown names (listing the
// registry) and on out-of-domain n (citing the stated domain).
ClosedFormValue closed_form(const std::string& name, std::int64_t n, std::int64_t k = -1);
std::vector<std::string> closed_form_ids();

// Typed accessors used by the verification harness.
SparsePoly cf_f123_qtr(int n);              // n >= 2, statistics (inv, ltrmax, afterone)
SparsePoly cf_f123_qr(int n);               // n >= 2, statistics (inv, afterone)
std::int64_t cf_bn_beta_count(int n, int k);            // n >= 0, k >= 1
std::int64_t cf_an012_beta_count(int n, int k);         // n >= 1, k >= 2
std::int64_t cf_an012_binary_count(int n, int k);       // n >= 1, k >= 2
std::int64_t cf_fn123_sigma_count(int n, int k);        // n >= 1, k >= 2
std::int64_t cf_fn123_restrictive_count(int n, int k);  // n >= 1, k >= 3

std::int64_t cf_t1423_count_1(int n);    // n >= 2: F_n - n + 1
std::int64_t cf_t1423_count_2b(int n);   // n >= 3: n - 3
std::int64_t cf_t1423_count_2c(int n);   // n >= 3: 1
std::int64_t cf_t1423_count_2d(int n);   // n >= 0: F_{n+1} - n - 1
std::int64_t cf_t1423_count_3(int n);    // n >= 2: 1
std::int64_t cf_t1423_total(int n);      // n >= 0: F_{n+2} - n - 1
SparsePoly cf_t1423_poly_2b(int n);      // n >= 3: q^{n-1} t^2 (t^{n-3}-1)/(t-1)
SparsePoly cf_t1423_poly_2c(int n);      // n >= 3: q^{n-1} t
SparsePoly cf_t1423_poly_3(int n);       // n >= 2: t^n

std::int64_t cf_t3124_count_1a(int n);        // n >= 0: F_{n-2}
std::int64_t cf_t3124_count_1b(int n);        // n >= 0: F_{n+1} - n - 1
std::int64_t cf_t3124_count_k(int n, int k);  // n >= 0, k >= 2: F_{n-k-1}

SparsePoly cf_t2143_t1(int n);                  // n >= 1: t (t+1)^{n-1}
std::int64_t cf_t2143_ltrmax_count(int n, int k);  // n,k >= 1: C(n-1,k-1)
std::int64_t cf_t2143_total(int n);             // n >= 1: 2^{n-1}
std::int64_t cf_binom2_plus_1(int n);           // n >= 0: C(n,2) + 1

std::int64_t cf_threepairs(int n);      // n >= 1: (n-1) 2^{n-2} + 1
std::int64_t cf_otherpairs(int n);      // n >= 1: F_{2n-2}
std::int64_t cf_binom13(int n);         // n >= 1: 2 C(n,3) + n
std::int64_t cf_grassmann(int n);       // n >= 1: 2^n - n
std::int64_t cf_quad(int n);            // n >= 1: (n+2)(n^2-2n+3)/6
std::int64_t cf_pell3(int n);           // n >= 1: (P_n + P_{n-1} + 1)/2
std::int64_t cf_catconv(int n);         // n >= 1: sum_k C(n-1,k-1) Cat(n-k)
std::int64_t cf_baxter_pudwell(int n);  // n >= 1: 3*2^{n-1} - C(n+1,2) - 1
std::int64_t cf_final_quadratic(int n); // n >= 2: n^2 - 3n + 4
std::int64_t cf_final_1324(int n);      // n >= 3: (3n^2 - 13n + 20)/2
std::int64_t cf_fn_plus_2(int n);       // n >= 4: F_n + 2
std::int64_t cf_fib_next_minus_1(int n);// n >= 1: F_{n+1} - 1
std::int64_t cf_final_14253(int n);     // n >= 1: 2^n - C(n,2) - 1

}  // namespace fishburn
