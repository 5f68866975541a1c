#pragma once

#include <array>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "fibcipher/errors.hpp"
#include "fibcipher/keyschedule.hpp"

namespace fibcipher {

// Exact value a^n / sum_{i=1..40} a^i as an integer fraction. Both parts
// are positive and num < den, so the value lies strictly in (0, 1). All
// ratios for one base share the same denominator.
struct ExactRatio {
    boost::multiprecision::cpp_int num;
    boost::multiprecision::cpp_int den;
};

// a^n / sum_{i=1..40} a^i computed exactly. Throws DomainError unless
// 1 <= n <= 40.
ExactRatio ratio(const BaseValue& a, int n);

// The 15 most significant decimal digits of ratio(a, n), truncated (never
// rounded). The result is invariant under scaling the ratio by any power
// of ten, which is what makes the table reproducible: every party that
// knows the code derives the same 40 strings, digit for digit.
std::string e_entry(const BaseValue& a, int n);

// The keyed substitution dictionary: one 15-digit string per alphabet
// symbol, entry n derived from ratio(a, n). A pure function of the code.
class ETable {
public:
    static ETable build(const NormalizedCode& code);

    // 1-based. Throws DomainError unless 1 <= n <= 40.
    std::string_view entry(int n) const;

    const std::array<std::string, 40>& entries() const noexcept { return entries_; }
    const BaseValue& base() const noexcept { return base_; }

private:
    explicit ETable(BaseValue base) : base_(base) {}
    std::array<std::string, 40> entries_{};
    BaseValue base_;
};

ETable build_table(const NormalizedCode& code);

}  // namespace fibcipher
