#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fishburn {

// Counting and polynomial arithmetic use int64_t with explicit overflow
// detection; an overflow signals an out-of-range request, never wraps.
class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("overflow in multiplication");
    return r;
}

inline std::int64_t checked_pow(std::int64_t base, int exp) {
    if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
    std::int64_t r = 1;
    while (exp-- > 0) r = checked_mul(r, base);
    return r;
}

}  // namespace fishburn
