#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibcipher/errors.hpp"

namespace fibcipher {

// The 10-digit symmetric key. Modeled as a digit string so leading zeros
// survive parsing: "0135792468" and "135792468" are different things and
// only the former is a valid code.
class SecretCode {
public:
    // Trims surrounding whitespace, then requires exactly 10 ASCII digits.
    // Throws FormatError otherwise.
    static SecretCode parse(std::string_view raw);

    // Zero-padded 10-digit code for an integer value <= 9999999999.
    static SecretCode from_value(std::uint64_t value);

    const std::string& digits() const noexcept { return digits_; }
    std::uint64_t value() const noexcept;

    friend auto operator<=>(const SecretCode&, const SecretCode&) = default;

private:
    explicit SecretCode(std::string digits) : digits_(std::move(digits)) {}
    std::string digits_;
};

// Sum of the ten digit values of the original (pre-normalization) code.
// Range [0, 90].
int digit_sum(const SecretCode& code);

// The code after the first-digit adjustment that keeps the derived base
// in [1.1, 1.9]: a leading '0' becomes '1', and a code strictly greater
// than 9000000000 has its leading '9' become '8'. The other nine digits
// never change.
class NormalizedCode {
public:
    explicit NormalizedCode(const SecretCode& code);

    const std::string& digits() const noexcept { return digits_; }
    std::uint64_t value() const noexcept;  // in [1000000000, 9000000000]

    friend bool operator==(const NormalizedCode&, const NormalizedCode&) = default;

private:
    std::string digits_;
};

NormalizedCode normalize_code(const SecretCode& code);

// The exponentiation base a = 1 + normalized/10^10, held as the exact
// scaled integer a * 10^10. Never stored as a binary float: encryptor and
// decryptor must derive bit-identical tables from equal codes.
class BaseValue {
public:
    explicit BaseValue(const NormalizedCode& code);

    // a * 10^10, in [11000000000, 19000000000].
    std::uint64_t scaled() const noexcept { return scaled_; }

    std::string to_string() const;  // e.g. "1.1135792468"

    friend bool operator==(const BaseValue&, const BaseValue&) = default;

private:
    std::uint64_t scaled_;
};

BaseValue base_value(const NormalizedCode& code);

// Splits a digit sum s in [0, 90] into the two seeds of the slice
// recurrence: b1 = (s mod 100) div 10, b2 = s mod 10.
std::pair<int, int> seed_pair(int digit_sum);

// The keyed slice schedule: B_1 = b1, B_2 = b2,
// B_n = (B_{n-1} + B_{n-2}) mod 10, and C_n = B_n when B_n >= 5 else
// 9 - B_n, so every C_n lies in [5, 9]. Odd-indexed C values are payload
// lengths, even-indexed ones mislead-group lengths. The sequence is
// unbounded; callers pull as many terms as the message needs.
class SliceSchedule {
public:
    explicit SliceSchedule(const SecretCode& code);

    int seed_b1() const noexcept { return b1_; }
    int seed_b2() const noexcept { return b2_; }

    // C_1..C_count.
    std::vector<int> c_prefix(std::size_t count) const;

    // Incremental walk over the C sequence from C_1.
    class Walker {
    public:
        Walker(int b1, int b2) noexcept : prev2_(b1), prev1_(b2) {}
        int next() noexcept;

    private:
        int prev2_;
        int prev1_;
        std::size_t emitted_ = 0;
    };

    Walker walk() const noexcept { return Walker(b1_, b2_); }

private:
    int b1_;
    int b2_;
};

// C_1..C_count for the given code.
std::vector<int> slice_schedule(const SecretCode& code, std::size_t count);

}  // namespace fibcipher
