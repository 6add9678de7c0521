#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

namespace fishburn {

// Exact integer polynomial in the statistic variables q, t, r, stored as a
// map from exponent triples to nonzero coefficients.  Map order (lexicographic
// in (q,t,r)) doubles as the canonical serialization order.
class SparsePoly {
public:
    using Exponents = std::array<int, 3>;  // (e_q, e_t, e_r)

    SparsePoly() = default;
    static SparsePoly constant(std::int64_t c);
    static SparsePoly term(std::int64_t c, int eq, int et = 0, int er = 0);
    static SparsePoly var_q() { return term(1, 1, 0, 0); }
    static SparsePoly var_t() { return term(1, 0, 1, 0); }
    static SparsePoly var_r() { return term(1, 0, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::int64_t constant_value() const;  // requires is_constant()
    const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
    std::int64_t coeff(int eq, int et = 0, int er = 0) const;

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

    SparsePoly pow(int e) const;
    // Multiply by a single monomial c * q^eq t^et r^er.
    SparsePoly shifted(std::int64_t c, int eq, int et = 0, int er = 0) const;

    // Substitute an integer for one variable (0 = q, 1 = t, 2 = r).
    SparsePoly substituted(int var, std::int64_t value) const;
    std::int64_t eval(std::int64_t q, std::int64_t t, std::int64_t r) const;

    void add_term(std::int64_t c, int eq, int et = 0, int er = 0);

    std::string str() const;

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    std::map<Exponents, std::int64_t> terms_;
};

std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

}  // namespace fishburn
