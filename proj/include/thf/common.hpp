// Shared basics: error type with machine-readable codes, big integers, F2.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace thf {

using BigInt = boost::multiprecision::cpp_int;

// All library errors carry a short stable code (used by the CLI to report
// structured failures) plus a human-readable message.
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
    throw Error(code, msg);
}

// The field with two elements.
struct F2 {
    bool v = false;
    F2() = default;
    F2(int x) : v((x % 2 + 2) % 2 != 0) {}
    bool is_zero() const { return !v; }
    friend F2 operator+(F2 a, F2 b) { return F2(a.v ^ b.v ? 1 : 0); }
    friend F2 operator-(F2 a, F2 b) { return a + b; }
    friend F2 operator*(F2 a, F2 b) { return F2(a.v && b.v ? 1 : 0); }
    friend bool operator==(F2 a, F2 b) { return a.v == b.v; }
    friend bool operator!=(F2 a, F2 b) { return a.v != b.v; }
};

inline F2 field_inv(F2 a) {
    if (a.is_zero()) fail("division-by-zero", "inverse of 0 in F2");
    return a;
}

inline bool is_zero(const F2& a) { return a.is_zero(); }
inline bool is_zero(const BigInt& a) { return a == 0; }

}  // namespace thf
