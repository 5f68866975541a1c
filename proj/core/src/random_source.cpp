#include "fibcipher/random_source.hpp"

#include <random>

namespace fibcipher {

std::uint64_t SplitMixSource::next_u64() noexcept {
    // splitmix64 (Steele, Lea, Flood); standard constants.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SplitMixSource SplitMixSource::from_entropy() {
    std::random_device device;
    const std::uint64_t seed =
        (static_cast<std::uint64_t>(device()) << 32) ^ device();
    return SplitMixSource(seed);
}

int SplitMixSource::payload_start() {
    return static_cast<int>(next_u64() % 7) + 1;
}

int SplitMixSource::mislead_digit() {
    return static_cast<int>(next_u64() % 10);
}

ScriptedSource::ScriptedSource(std::vector<int> starts, std::string_view mislead_digits)
    : starts_(std::move(starts)), digits_(mislead_digits) {
    for (int start : starts_) {
        if (start < 1 || start > 7) {
            throw DomainError("scripted start " + std::to_string(start) + " is outside 1..7");
        }
    }
    for (char ch : digits_) {
        if (ch < '0' || ch > '9') {
            throw DomainError("scripted mislead digits must be ASCII digits");
        }
    }
}

int ScriptedSource::payload_start() {
    if (next_start_ >= starts_.size()) {
        throw Error("scripted random source ran out of start positions");
    }
    return starts_[next_start_++];
}

int ScriptedSource::mislead_digit() {
    if (next_digit_ >= digits_.size()) {
        throw Error("scripted random source ran out of mislead digits");
    }
    return digits_[next_digit_++] - '0';
}

}  // namespace fibcipher
