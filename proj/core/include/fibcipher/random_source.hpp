#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fibcipher/errors.hpp"

namespace fibcipher {

// The two random inputs the scheme consumes: payload start positions
// uniform in [1, 7] and mislead digits uniform in [0, 9]. Implementations
// are not required to be thread-safe; concurrent encryptions must use
// independent sources.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    virtual int payload_start() = 0;  // in [1, 7]
    virtual int mislead_digit() = 0;  // in [0, 9]
};

// Seedable counter-based generator (splitmix64). Pure 64-bit integer
// arithmetic, so equal seeds give equal draw sequences on every platform.
class SplitMixSource final : public RandomSource {
public:
    explicit SplitMixSource(std::uint64_t seed) noexcept : state_(seed) {}

    // Seeded from system entropy.
    static SplitMixSource from_entropy();

    int payload_start() override;
    int mislead_digit() override;

private:
    std::uint64_t next_u64() noexcept;
    std::uint64_t state_;
};

// Replays a fixed script of draws. Throws Error when a queue runs dry.
class ScriptedSource final : public RandomSource {
public:
    ScriptedSource(std::vector<int> starts, std::string_view mislead_digits);

    int payload_start() override;
    int mislead_digit() override;

private:
    std::vector<int> starts_;
    std::string digits_;
    std::size_t next_start_ = 0;
    std::size_t next_digit_ = 0;
};

}  // namespace fibcipher
