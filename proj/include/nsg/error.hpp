#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace nsg {

/// Base class of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class empty_input : public error {
public:
    empty_input() : error("generator list is empty") {}
};

class non_positive_generator : public error {
public:
    explicit non_positive_generator(std::int64_t value)
        : error("generators must be positive, got " + std::to_string(value)) {}
};

class non_coprime : public error {
public:
    explicit non_coprime(std::int64_t g)
        : error("generators are not coprime (gcd = " + std::to_string(g) + ")"), gcd_(g) {}
    std::int64_t gcd() const noexcept { return gcd_; }

private:
    std::int64_t gcd_;
};

class not_member : public error {
public:
    explicit not_member(std::int64_t value)
        : error(std::to_string(value) + " is not a nonzero element of the semigroup") {}
};

/// Raised by the family builders; `constraint()` is the violated rule, e.g. "e must be >= 4".
class invalid_params : public error {
public:
    explicit invalid_params(std::string constraint)
        : error("invalid parameters: " + constraint), constraint_(std::move(constraint)) {}
    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

class overflow : public error {
public:
    overflow() : error("64-bit integer overflow") {}
};

// Checked 64-bit arithmetic. Every value the library computes goes through these.
inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow();
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow();
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow();
    return r;
}

inline constexpr std::int64_t infinity = std::numeric_limits<std::int64_t>::max();

} // namespace nsg
