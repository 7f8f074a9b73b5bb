#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace adcat {

using i64 = std::int64_t;

/* Library errors carry a short reason string; checks that merely report
   violations return report structs instead of throwing. */
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct overflow_error : error {
    explicit overflow_error(const std::string& what) : error(what) {}
};

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw overflow_error("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("integer overflow in multiplication");
    return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

/* Deterministic splitmix64 stream; avoids the implementation-defined
   std::uniform_int_distribution so seeded runs agree across platforms. */
struct rng {
    std::uint64_t state;

    explicit rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /* uniform-ish draw in [0, n); modulo bias is irrelevant at our sizes */
    i64 below(i64 n) { return n <= 1 ? 0 : static_cast<i64>(next() % static_cast<std::uint64_t>(n)); }
};

} // namespace adcat
