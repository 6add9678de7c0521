#include "fishburn/registry.hpp"

#include <map>
#include <stdexcept>

#include "fishburn/checked.hpp"

namespace fishburn {

namespace {

SparsePoly c1() { return SparsePoly::constant(1); }
SparsePoly ci(std::int64_t v) { return SparsePoly::constant(v); }
SparsePoly q(int e = 1) { return SparsePoly::term(1, e, 0, 0); }
SparsePoly t(int e = 1) { return SparsePoly::term(1, 0, e, 0); }
SparsePoly qt(std::int64_t c, int eq, int et) { return SparsePoly::term(c, eq, et, 0); }

XPoly one_minus_x_pow(int k) { return xp_pow(XPoly{c1(), ci(-1)}, k); }

void require_k(const std::string& name, int k, int k_min) {
    if (k < k_min)
        throw std::invalid_argument(name + " requires k >= " + std::to_string(k_min));
}

RationalGF gf_bn_beta(int k) {
    require_k("Bn_beta", k, 1);
    // ((1-x)^k - x^k) / ((1-2x)(1-x)^k)
    const XPoly omx_k = one_minus_x_pow(k);
    return {xp_sub(omx_k, xp_monomial(c1(), k)),
            xp_mul(XPoly{c1(), ci(-2)}, omx_k)};
}

RationalGF gf_an012_beta(int k) {
    require_k("An012_beta", k, 2);
    // 1 + (x(1-x)^{k-1} - x^k) / ((1-2x)(1-x)^{k-1})
    const XPoly omx = one_minus_x_pow(k - 1);
    const RationalGF frac{xp_sub(xp_mul(XPoly{SparsePoly(), c1()}, omx), xp_monomial(c1(), k)),
                          xp_mul(XPoly{c1(), ci(-2)}, omx)};
    return rgf_add(RationalGF{xp_constant(1), xp_constant(1)}, frac);
}

RationalGF gf_an012_binary(int k) {
    require_k("An012_binary", k, 2);
    // 1 + (x(1-x)^k - x^{k+1}) / ((1-2x)(1-x)^k)
    const XPoly omx = one_minus_x_pow(k);
    const RationalGF frac{xp_sub(xp_mul(XPoly{SparsePoly(), c1()}, omx), xp_monomial(c1(), k + 1)),
                          xp_mul(XPoly{c1(), ci(-2)}, omx)};
    return rgf_add(RationalGF{xp_constant(1), xp_constant(1)}, frac);
}

RationalGF gf_s231_123(int k) {
    require_k("S231_123", k, 3);
    // (1 - 2x + 2x^2 - x^k) / (1-x)^3
    XPoly num(static_cast<std::size_t>(k) + 1);
    num[0] = c1();
    num[1] = ci(-2);
    num[2] += ci(2);
    num[static_cast<std::size_t>(k)] += ci(-1);
    xp_trim(num);
    return {num, one_minus_x_pow(3)};
}

// 1 - tx - qtx^2, the kernel of the (2d)/(1) recurrences
XPoly core_1423() { return XPoly{c1(), ci(0) - t(), ci(0) - qt(1, 1, 1)}; }

RationalGF gf_f1423_2b() {
    // q^3 t^2 x^4 / ((1-qx)(1-qtx)): both insertions that produce a (2b)
    // child add an inversion and a left-to-right maximum, so
    // [2b]_n = q^{n-1}(t^2 + ... + t^{n-2}).
    return {xp_monomial(qt(1, 3, 2), 4),
            xp_mul(XPoly{c1(), ci(0) - q()}, XPoly{c1(), ci(0) - qt(1, 1, 1)})};
}

RationalGF gf_f1423_2c() {
    return {xp_monomial(qt(1, 2, 1), 3), XPoly{c1(), ci(0) - q()}};
}

RationalGF gf_f1423_3() {
    return {xp_monomial(t(2), 2), XPoly{c1(), ci(0) - t()}};
}

RationalGF gf_f1423_2d() {
    // [2d] (1 - tx - qtx^2) = q t^2 x^3 + tx([2b] + [2c]) + q t x^2 [3]
    RationalGF num{xp_monomial(qt(1, 1, 2), 3), xp_constant(1)};
    const RationalGF tx{xp_monomial(t(), 1), xp_constant(1)};
    const RationalGF qtx2{xp_monomial(qt(1, 1, 1), 2), xp_constant(1)};
    num = rgf_add(num, rgf_mul(tx, rgf_add(gf_f1423_2b(), gf_f1423_2c())));
    num = rgf_add(num, rgf_mul(qtx2, gf_f1423_3()));
    return {num.num, xp_mul(num.den, core_1423())};
}

RationalGF gf_f1423_1() {
    // [1] = qx([2a] + [2d] + [3]) with [2a] = tx
    const RationalGF qx{xp_monomial(q(), 1), xp_constant(1)};
    RationalGF inner{xp_monomial(t(), 1), xp_constant(1)};
    inner = rgf_add(inner, gf_f1423_2d());
    inner = rgf_add(inner, gf_f1423_3());
    return rgf_mul(qx, inner);
}

RationalGF gf_t_1423() {
    // 1 + [2a] + [1] + [2b] + [2c] + [2d] + [3]
    RationalGF total{xp_add(xp_constant(1), xp_monomial(t(), 1)), xp_constant(1)};
    total = rgf_add(total, gf_f1423_1());
    total = rgf_add(total, gf_f1423_2b());
    total = rgf_add(total, gf_f1423_2c());
    total = rgf_add(total, gf_f1423_2d());
    total = rgf_add(total, gf_f1423_3());
    return total;
}

XPoly den_3124_core() { return XPoly{c1(), ci(0) - t(), ci(0) - t()}; }  // 1 - tx - tx^2

RationalGF gf_f3124_1a() {
    return {XPoly{c1(), ci(0) - t()}, den_3124_core()};
}

RationalGF gf_f3124_k(int k) {
    require_k("F3124_k", k, 2);
    // t^{k-1} x^{k-1} (1 - tx) / (1 - tx - tx^2)
    return {xp_mul(xp_monomial(t(k - 1), k - 1), XPoly{c1(), ci(0) - t()}), den_3124_core()};
}

XPoly den_3124_full() {
    return xp_mul(xp_mul(den_3124_core(), XPoly{c1(), ci(0) - t()}), XPoly{c1(), ci(-1)});
}

RationalGF gf_f3124_1b() {
    return {xp_monomial(t(1), 3), den_3124_full()};
}

RationalGF gf_t_3124() {
    // (1 - (t+1)x + tx^2 + tx^3) / ((1-tx-tx^2)(1-tx)(1-x))
    XPoly num(4);
    num[0] = c1();
    num[1] = ci(-1) - t();
    num[2] = t();
    num[3] = t();
    return {num, den_3124_full()};
}

RationalGF gf_f321_4123() {
    // (1 - x - x^2) / ((1-x)(1 - x - 2x^2 - x^3))
    return {XPoly{c1(), ci(-1), ci(-1)},
            xp_mul(XPoly{c1(), ci(-1)}, XPoly{c1(), ci(-1), ci(-2), ci(-1)})};
}

}  // namespace

RationalGF named_gf(const std::string& name, int k) {
    if (name == "Bn_beta") return gf_bn_beta(k);
    if (name == "An012_beta") return gf_an012_beta(k);
    if (name == "An012_binary") return gf_an012_binary(k);
    if (name == "S231_123") return gf_s231_123(k);
    if (name == "F1423_1") return gf_f1423_1();
    if (name == "F1423_2b") return gf_f1423_2b();
    if (name == "F1423_2c") return gf_f1423_2c();
    if (name == "F1423_2d") return gf_f1423_2d();
    if (name == "F1423_3") return gf_f1423_3();
    if (name == "T_1423") return gf_t_1423();
    if (name == "F3124_1a") return gf_f3124_1a();
    if (name == "F3124_1b") return gf_f3124_1b();
    if (name == "F3124_k") return gf_f3124_k(k);
    if (name == "T_3124") return gf_t_3124();
    if (name == "F321_4123") return gf_f321_4123();
    std::string known;
    for (const auto& id : named_gf_ids()) known += (known.empty() ? "" : ", ") + id;
    throw std::invalid_argument("unknown generating function '" + name + "'; registry: " + known);
}

std::vector<std::string> named_gf_ids() {
    return {"Bn_beta",  "An012_beta", "An012_binary", "S231_123", "F1423_1",
            "F1423_2b", "F1423_2c",   "F1423_2d",     "F1423_3",  "T_1423",
            "F3124_1a", "F3124_1b",   "F3124_k",      "T_3124",   "F321_4123"};
}

// -- closed forms --------------------------------------------------------------

namespace {

void require_n(const std::string& name, std::int64_t n, std::int64_t n_min) {
    if (n < n_min)
        throw std::invalid_argument(name + " is stated for n >= " + std::to_string(n_min));
}

std::int64_t pow2(int e) { return checked_pow(2, e); }

}  // namespace

SparsePoly cf_f123_qtr(int n) {
    require_n("F123_qtr", n, 2);
    SparsePoly out;
    const std::int64_t nc2 = binomial(n, 2);
    for (int s = 0; s <= n - 2; ++s) {
        const auto e = static_cast<int>(static_cast<std::int64_t>(s) * s + s -
                                        static_cast<std::int64_t>(n) * s + nc2);
        out += qbinom(n - 2, s).shifted(1, e, 1, s);
    }
    for (int s = 1; s <= n - 1; ++s) {
        const auto e = static_cast<int>(static_cast<std::int64_t>(s) * s -
                                        static_cast<std::int64_t>(n) * s + nc2);
        out += qbinom(n - 2, s - 1).shifted(1, e, 2, s);
    }
    return out;
}

SparsePoly cf_f123_qr(int n) {
    require_n("F123_qr", n, 2);
    SparsePoly out;
    const std::int64_t nc2 = binomial(n, 2);
    for (int s = 0; s <= n - 1; ++s) {
        const auto e = static_cast<int>(static_cast<std::int64_t>(s) * s -
                                        static_cast<std::int64_t>(n) * s + nc2);
        out += qbinom(n - 1, s).shifted(1, e, 0, s);
    }
    return out;
}

std::int64_t cf_bn_beta_count(int n, int k) {
    require_n("Bn_beta_count", n, 0);
    require_k("Bn_beta_count", k, 1);
    std::int64_t sum = 0;
    for (int j = 0; j <= k - 1; ++j) sum = checked_add(sum, binomial(n, j));
    return sum;
}

std::int64_t cf_an012_beta_count(int n, int k) {
    require_n("An012_beta_count", n, 1);
    require_k("An012_beta_count", k, 2);
    std::int64_t sum = 0;
    for (int j = 0; j <= k - 2; ++j) sum = checked_add(sum, binomial(n - 1, j));
    return sum;
}

std::int64_t cf_an012_binary_count(int n, int k) {
    require_n("An012_binary_count", n, 1);
    require_k("An012_binary_count", k, 2);
    std::int64_t sum = 0;
    for (int j = 0; j <= k - 1; ++j) sum = checked_add(sum, binomial(n - 1, j));
    return sum;
}

std::int64_t cf_fn123_sigma_count(int n, int k) {
    require_n("Fn123_sigma_count", n, 1);
    require_k("Fn123_sigma_count", k, 2);
    std::int64_t sum = 0;
    for (int j = 0; j <= k - 2; ++j) sum = checked_add(sum, binomial(n - 1, j));
    return sum;
}

std::int64_t cf_fn123_restrictive_count(int n, int k) {
    require_n("Fn123_restrictive_count", n, 1);
    require_k("Fn123_restrictive_count", k, 3);
    std::int64_t sum = 0;
    for (int j = 0; j <= k - 1; ++j) sum = checked_add(sum, binomial(n - 1, j));
    return sum;
}

std::int64_t cf_t1423_count_1(int n) {
    require_n("T1423_count_1", n, 2);
    return checked_sub(fib_ext(n), n - 1);
}

std::int64_t cf_t1423_count_2b(int n) {
    require_n("T1423_count_2b", n, 3);
    return n - 3;
}

std::int64_t cf_t1423_count_2c(int n) {
    require_n("T1423_count_2c", n, 3);
    return 1;
}

std::int64_t cf_t1423_count_2d(int n) {
    require_n("T1423_count_2d", n, 0);
    return checked_sub(fib_ext(n + 1), n + 1);
}

std::int64_t cf_t1423_count_3(int n) {
    require_n("T1423_count_3", n, 2);
    return 1;
}

std::int64_t cf_t1423_total(int n) {
    require_n("T1423_total", n, 0);
    return checked_sub(fib_ext(n + 2), n + 1);
}

SparsePoly cf_t1423_poly_2b(int n) {
    require_n("T1423_poly_2b", n, 3);
    // q^{n-1} t^2 (t^{n-3}-1)/(t-1), expanded as the geometric sum
    // q^{n-1} (t^2 + t^3 + ... + t^{n-2}); zero at n = 3.
    SparsePoly out;
    for (int i = 2; i <= n - 2; ++i) out.add_term(1, n - 1, i, 0);
    return out;
}

SparsePoly cf_t1423_poly_2c(int n) {
    require_n("T1423_poly_2c", n, 3);
    return SparsePoly::term(1, n - 1, 1, 0);
}

SparsePoly cf_t1423_poly_3(int n) {
    require_n("T1423_poly_3", n, 2);
    return SparsePoly::term(1, 0, n, 0);
}

std::int64_t cf_t3124_count_1a(int n) {
    require_n("T3124_count_1a", n, 0);
    return fib_ext(n - 2);
}

std::int64_t cf_t3124_count_1b(int n) {
    require_n("T3124_count_1b", n, 0);
    return checked_sub(fib_ext(n + 1), n + 1);
}

std::int64_t cf_t3124_count_k(int n, int k) {
    require_n("T3124_count_k", n, 0);
    require_k("T3124_count_k", k, 2);
    return fib_ext(n - k - 1);
}

SparsePoly cf_t2143_t1(int n) {
    require_n("T2143_t1", n, 1);
    const SparsePoly t_plus_1 = SparsePoly::var_t() + SparsePoly::constant(1);
    return t_plus_1.pow(n - 1).shifted(1, 0, 1, 0);
}

std::int64_t cf_t2143_ltrmax_count(int n, int k) {
    require_n("T2143_ltrmax_count", n, 1);
    return binomial(n - 1, k - 1);
}

std::int64_t cf_t2143_total(int n) {
    require_n("T2143_total", n, 1);
    return pow2(n - 1);
}

std::int64_t cf_binom2_plus_1(int n) {
    require_n("binom2_plus_1", n, 0);
    return checked_add(binomial(n, 2), 1);
}

std::int64_t cf_threepairs(int n) {
    require_n("threepairs", n, 1);
    if (n == 1) return 1;
    return checked_add(checked_mul(n - 1, pow2(n - 2)), 1);
}

std::int64_t cf_otherpairs(int n) {
    require_n("otherpairs", n, 1);
    return fib_ext(2L * n - 2);
}

std::int64_t cf_binom13(int n) {
    require_n("binom13", n, 1);
    return checked_add(checked_mul(2, binomial(n, 3)), n);
}

std::int64_t cf_grassmann(int n) {
    require_n("grassmann", n, 1);
    return checked_sub(pow2(n), n);
}

std::int64_t cf_quad(int n) {
    require_n("quad", n, 1);
    const std::int64_t prod =
        checked_mul(n + 2, checked_add(checked_mul(n, n - 2), 3));
    if (prod % 6 != 0) throw std::logic_error("quad closed form not divisible by 6");
    return prod / 6;
}

std::int64_t cf_pell3(int n) {
    require_n("pell3", n, 1);
    return checked_add(checked_add(pell(n), pell(n - 1)), 1) / 2;
}

std::int64_t cf_catconv(int n) {
    require_n("catconv", n, 1);
    std::int64_t sum = 0;
    for (int k = 1; k <= n; ++k)
        sum = checked_add(sum, checked_mul(binomial(n - 1, k - 1), catalan(n - k)));
    return sum;
}

std::int64_t cf_baxter_pudwell(int n) {
    require_n("baxter_pudwell", n, 1);
    return checked_sub(checked_mul(3, pow2(n - 1)), checked_add(binomial(n + 1, 2), 1));
}

std::int64_t cf_final_quadratic(int n) {
    require_n("final_quadratic", n, 2);
    return checked_add(checked_mul(n, n - 3), 4);
}

std::int64_t cf_final_1324(int n) {
    require_n("final_1324", n, 3);
    const std::int64_t v = checked_add(checked_sub(checked_mul(3L * n, n), 13L * n), 20);
    return v / 2;
}

std::int64_t cf_fn_plus_2(int n) {
    require_n("fn_plus_2", n, 4);
    return checked_add(fib_ext(n), 2);
}

std::int64_t cf_fib_next_minus_1(int n) {
    require_n("fib_next_minus_1", n, 1);
    return checked_sub(fib_ext(n + 1), 1);
}

std::int64_t cf_final_14253(int n) {
    require_n("final_14253", n, 1);
    return checked_sub(pow2(n), checked_add(binomial(n, 2), 1));
}

namespace {

int as_int(const std::string& name, std::int64_t v, const char* what) {
    if (v < -1000000 || v > 1000000)
        throw std::invalid_argument(name + ": implausible " + what);
    return static_cast<int>(v);
}

}  // namespace

ClosedFormValue closed_form(const std::string& name, std::int64_t n_in, std::int64_t k_in) {
    const int n = as_int(name, n_in, "n");
    const int k = k_in == -1 ? -1 : as_int(name, k_in, "k");
    using CF = ClosedFormValue;
    if (name == "F123_qtr") return CF{cf_f123_qtr(n)};
    if (name == "F123_qr") return CF{cf_f123_qr(n)};
    if (name == "Bn_beta_count") return CF{cf_bn_beta_count(n, k)};
    if (name == "An012_beta_count") return CF{cf_an012_beta_count(n, k)};
    if (name == "An012_binary_count") return CF{cf_an012_binary_count(n, k)};
    if (name == "Fn123_sigma_count") return CF{cf_fn123_sigma_count(n, k)};
    if (name == "Fn123_restrictive_count") return CF{cf_fn123_restrictive_count(n, k)};
    if (name == "T1423_count_1") return CF{cf_t1423_count_1(n)};
    if (name == "T1423_count_2b") return CF{cf_t1423_count_2b(n)};
    if (name == "T1423_count_2c") return CF{cf_t1423_count_2c(n)};
    if (name == "T1423_count_2d") return CF{cf_t1423_count_2d(n)};
    if (name == "T1423_count_3") return CF{cf_t1423_count_3(n)};
    if (name == "T1423_total") return CF{cf_t1423_total(n)};
    if (name == "T1423_poly_2b") return CF{cf_t1423_poly_2b(n)};
    if (name == "T1423_poly_2c") return CF{cf_t1423_poly_2c(n)};
    if (name == "T1423_poly_3") return CF{cf_t1423_poly_3(n)};
    if (name == "T3124_count_1a") return CF{cf_t3124_count_1a(n)};
    if (name == "T3124_count_1b") return CF{cf_t3124_count_1b(n)};
    if (name == "T3124_count_k") return CF{cf_t3124_count_k(n, k)};
    if (name == "T3124_total") return CF{cf_t1423_total(n)};  // same closed form
    if (name == "T2143_t1") return CF{cf_t2143_t1(n)};
    if (name == "T2143_ltrmax_count") return CF{cf_t2143_ltrmax_count(n, k)};
    if (name == "T2143_total") return CF{cf_t2143_total(n)};
    if (name == "binom2_plus_1") return CF{cf_binom2_plus_1(n)};
    if (name == "threepairs") return CF{cf_threepairs(n)};
    if (name == "otherpairs") return CF{cf_otherpairs(n)};
    if (name == "binom13") return CF{cf_binom13(n)};
    if (name == "grassmann") return CF{cf_grassmann(n)};
    if (name == "quad") return CF{cf_quad(n)};
    if (name == "pell3") return CF{cf_pell3(n)};
    if (name == "catconv") return CF{cf_catconv(n)};
    if (name == "baxter_pudwell") return CF{cf_baxter_pudwell(n)};
    if (name == "final_quadratic") return CF{cf_final_quadratic(n)};
    if (name == "final_1324") return CF{cf_final_1324(n)};
    if (name == "fn_plus_2") return CF{cf_fn_plus_2(n)};
    if (name == "fib_next_minus_1") return CF{cf_fib_next_minus_1(n)};
    if (name == "final_14253") return CF{cf_final_14253(n)};
    std::string known;
    for (const auto& id : closed_form_ids()) known += (known.empty() ? "" : ", ") + id;
    throw std::invalid_argument("unknown closed form '" + name + "'; registry: " + known);
}

std::vector<std::string> closed_form_ids() {
    return {"F123_qtr",       "F123_qr",        "Bn_beta_count",   "An012_beta_count",
            "An012_binary_count", "Fn123_sigma_count", "Fn123_restrictive_count",
            "T1423_count_1",  "T1423_count_2b", "T1423_count_2c",  "T1423_count_2d",
            "T1423_count_3",  "T1423_total",    "T1423_poly_2b",   "T1423_poly_2c",
            "T1423_poly_3",   "T3124_count_1a", "T3124_count_1b",  "T3124_count_k",
            "T3124_total",    "T2143_t1",       "T2143_ltrmax_count", "T2143_total",
            "binom2_plus_1",  "threepairs",     "otherpairs",      "binom13",
            "grassmann",      "quad",           "pell3",           "catconv",
            "baxter_pudwell", "final_quadratic","final_1324",      "fn_plus_2",
            "fib_next_minus_1", "final_14253"};
}

}  // namespace fishburn
