#include "fibcipher/keyschedule.hpp"

#include <algorithm>
#include <cctype>

namespace fibcipher {

namespace {
constexpr std::uint64_t kTenPow9 = 1'000'000'000ULL;
constexpr std::uint64_t kTenPow10 = 10'000'000'000ULL;

bool is_space(char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) != 0;
}

std::uint64_t digits_to_value(const std::string& digits) {
    std::uint64_t value = 0;
    for (char ch : digits) {
        value = value * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return value;
}
}  // namespace

SecretCode SecretCode::parse(std::string_view raw) {
    std::size_t begin = 0;
    std::size_t end = raw.size();
    while (begin < end && is_space(raw[begin])) ++begin;
    while (end > begin && is_space(raw[end - 1])) --end;
    const std::string_view trimmed = raw.substr(begin, end - begin);

    if (trimmed.size() != 10) {
        throw FormatError("secret code must be exactly 10 digits, got length " +
                          std::to_string(trimmed.size()));
    }
    for (std::size_t i = 0; i < trimmed.size(); ++i) {
        if (trimmed[i] < '0' || trimmed[i] > '9') {
            throw FormatError("secret code has a non-digit character at position " +
                              std::to_string(i + 1));
        }
    }
    return SecretCode(std::string(trimmed));
}

SecretCode SecretCode::from_value(std::uint64_t value) {
    if (value > 9'999'999'999ULL) {
        throw DomainError("secret code value " + std::to_string(value) +
                          " does not fit in 10 digits");
    }
    std::string digits = std::to_string(value);
    digits.insert(0, 10 - digits.size(), '0');
    return SecretCode(std::move(digits));
}

std::uint64_t SecretCode::value() const noexcept {
    return digits_to_value(digits_);
}

int digit_sum(const SecretCode& code) {
    int sum = 0;
    for (char ch : code.digits()) sum += ch - '0';
    return sum;
}

NormalizedCode::NormalizedCode(const SecretCode& code) : digits_(code.digits()) {
    const std::uint64_t value = code.value();
    if (value < kTenPow9) {
        digits_[0] = '1';  // 0xxxxxxxxx -> 1xxxxxxxxx
    } else if (value > 9 * kTenPow9) {
        digits_[0] = '8';  // 9xxxxxxxxx -> 8xxxxxxxxx, except 9000000000 itself
    }
}

std::uint64_t NormalizedCode::value() const noexcept {
    return digits_to_value(digits_);
}

NormalizedCode normalize_code(const SecretCode& code) {
    return NormalizedCode(code);
}

BaseValue::BaseValue(const NormalizedCode& code) : scaled_(kTenPow10 + code.value()) {}

std::string BaseValue::to_string() const {
    std::string fractional = std::to_string(scaled_ - kTenPow10);
    fractional.insert(0, 10 - fractional.size(), '0');
    return "1." + fractional;
}

BaseValue base_value(const NormalizedCode& code) {
    return BaseValue(code);
}

std::pair<int, int> seed_pair(int digit_sum) {
    if (digit_sum < 0 || digit_sum > 90) {
        throw DomainError("digit sum " + std::to_string(digit_sum) + " is outside 0..90");
    }
    return {(digit_sum % 100) / 10, digit_sum % 10};
}

SliceSchedule::SliceSchedule(const SecretCode& code) {
    const auto [b1, b2] = seed_pair(digit_sum(code));
    b1_ = b1;
    b2_ = b2;
}

int SliceSchedule::Walker::next() noexcept {
    int b;
    if (emitted_ == 0) {
        b = prev2_;
    } else if (emitted_ == 1) {
        b = prev1_;
    } else {
        b = (prev1_ + prev2_) % 10;
        prev2_ = prev1_;
        prev1_ = b;
    }
    ++emitted_;
    return b >= 5 ? b : 9 - b;
}

std::vector<int> SliceSchedule::c_prefix(std::size_t count) const {
    std::vector<int> values;
    values.reserve(count);
    Walker walker = walk();
    for (std::size_t i = 0; i < count; ++i) values.push_back(walker.next());
    return values;
}

std::vector<int> slice_schedule(const SecretCode& code, std::size_t count) {
    return SliceSchedule(code).c_prefix(count);
}

}  // namespace fibcipher
