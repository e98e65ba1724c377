#pragma once

#include <cstdint>

#include "foldchi/error.hpp"

// Overflow-checked int64 arithmetic. Results never wrap; an out-of-range
// result raises Errc::overflow.
namespace foldchi::checked {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw Error(Errc::overflow, "integer addition overflow");
    return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw Error(Errc::overflow, "integer subtraction overflow");
    return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw Error(Errc::overflow, "integer multiplication overflow");
    return r;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

}  // namespace foldchi::checked
