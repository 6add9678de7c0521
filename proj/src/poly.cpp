#include "fishburn/poly.hpp"

#include <ostream>
#include <stdexcept>

#include "fishburn/checked.hpp"

namespace fishburn {

SparsePoly SparsePoly::constant(std::int64_t c) { return term(c, 0, 0, 0); }

SparsePoly SparsePoly::term(std::int64_t c, int eq, int et, int er) {
    SparsePoly p;
    p.add_term(c, eq, et, er);
    return p;
}

bool SparsePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

std::int64_t SparsePoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.empty() ? 0 : terms_.begin()->second;
}

std::int64_t SparsePoly::coeff(int eq, int et, int er) const {
    const auto it = terms_.find(Exponents{eq, et, er});
    return it == terms_.end() ? 0 : it->second;
}

void SparsePoly::add_term(std::int64_t c, int eq, int et, int er) {
    if (c == 0) return;
    if (eq < 0 || et < 0 || er < 0) throw std::invalid_argument("negative exponent");
    const Exponents e{eq, et, er};
    const auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e[0], e[1], e[2]);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(checked_sub(0, c), e[0], e[1], e[2]);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(checked_mul(ca, cb), ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]);
    return out;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly SparsePoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    SparsePoly out = constant(1);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

SparsePoly SparsePoly::shifted(std::int64_t c, int eq, int et, int er) const {
    SparsePoly out;
    for (const auto& [e, coeffv] : terms_)
        out.add_term(checked_mul(coeffv, c), e[0] + eq, e[1] + et, e[2] + er);
    return out;
}

SparsePoly SparsePoly::substituted(int var, std::int64_t value) const {
    SparsePoly out;
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        const std::int64_t scale = checked_pow(value, e[static_cast<std::size_t>(var)]);
        ne[static_cast<std::size_t>(var)] = 0;
        out.add_term(checked_mul(c, scale), ne[0], ne[1], ne[2]);
    }
    return out;
}

std::int64_t SparsePoly::eval(std::int64_t q, std::int64_t t, std::int64_t r) const {
    std::int64_t sum = 0;
    for (const auto& [e, c] : terms_) {
        std::int64_t v = checked_mul(c, checked_pow(q, e[0]));
        v = checked_mul(v, checked_pow(t, e[1]));
        v = checked_mul(v, checked_pow(r, e[2]));
        sum = checked_add(sum, v);
    }
    return sum;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"q", "t", "r"};
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::int64_t a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (std::size_t v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a) + "*";
            out += mono;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << p.str(); }

}  // namespace fishburn
