#include "fibcipher/etable.hpp"

#include <cassert>

namespace fibcipher {

namespace mp = boost::multiprecision;
using mp::cpp_int;

namespace {

// a = scaled / 10^10. Over the common denominator 10^400,
//   a^n           -> scaled^n * 10^(10*(40-n))
//   sum a^i       -> sum scaled^i * 10^(10*(40-i))
// so both sides of the ratio are plain integers.

const cpp_int kShift = cpp_int(10'000'000'000ULL);  // 10^10

cpp_int scaled_power_sum(const cpp_int& scaled) {
    // Horner over i = 1..40: S_j = S_{j-1} * 10^10 + scaled^j.
    cpp_int sum = scaled;
    cpp_int power = scaled;
    for (int i = 2; i <= 40; ++i) {
        power *= scaled;
        sum = sum * kShift + power;
    }
    return sum;
}

cpp_int scaled_numerator(const cpp_int& scaled, int n) {
    cpp_int num = mp::pow(scaled, static_cast<unsigned>(n));
    for (int i = n; i < 40; ++i) num *= kShift;
    return num;
}

void check_entry_index(int n) {
    if (n < 1 || n > 40) {
        throw DomainError("table index " + std::to_string(n) + " is outside 1..40");
    }
}

std::size_t decimal_digits(const cpp_int& value) {
    return value.str().size();
}

// First 15 significant decimal digits of num/den, truncated. num and den
// are positive with num < den. Scaling num so the quotient keeps ~20
// digits makes the prefix independent of where the decimal point sat.
std::string significant_prefix(const cpp_int& num, const cpp_int& den) {
    const std::size_t pad = decimal_digits(den) - decimal_digits(num) + 20;
    cpp_int scaled_num = num;
    for (std::size_t i = 0; i < pad; ++i) scaled_num *= 10;
    const std::string digits = cpp_int(scaled_num / den).str();
    assert(digits.size() >= 16);
    assert(digits.front() != '0');
    return digits.substr(0, 15);
}

}  // namespace

ExactRatio ratio(const BaseValue& a, int n) {
    check_entry_index(n);
    const cpp_int scaled(a.scaled());
    return ExactRatio{scaled_numerator(scaled, n), scaled_power_sum(scaled)};
}

std::string e_entry(const BaseValue& a, int n) {
    const ExactRatio r = ratio(a, n);
    return significant_prefix(r.num, r.den);
}

ETable ETable::build(const NormalizedCode& code) {
    ETable table{BaseValue(code)};
    const cpp_int scaled(table.base_.scaled());
    const cpp_int den = scaled_power_sum(scaled);

    // num_n = scaled^n * 10^(10*(40-n)), updated as num_{n+1} = num_n * a.
    cpp_int num = scaled;
    for (int i = 1; i < 40; ++i) num *= kShift;
    for (int n = 1; n <= 40; ++n) {
        table.entries_[static_cast<std::size_t>(n - 1)] = significant_prefix(num, den);
        if (n < 40) {
            num *= scaled;
            num /= kShift;  // exact: num is divisible by 10^10 until n = 40
        }
    }
    return table;
}

std::string_view ETable::entry(int n) const {
    check_entry_index(n);
    return entries_[static_cast<std::size_t>(n - 1)];
}

ETable build_table(const NormalizedCode& code) {
    return ETable::build(code);
}

}  // namespace fibcipher
