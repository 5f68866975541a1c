#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "fibcipher/cipher.hpp"
#include "fibcipher/keyschedule.hpp"

namespace fibcipher {

// Exhaustive key search over a contiguous range of candidate codes:
// start, start+1, ..., start+count-1.
struct CrackRequest {
    Ciphertext ciphertext;
    SecretCode start = SecretCode::from_value(0);
    std::uint64_t count = 0;
};

enum class CrackStatus { Found, FoundWithIssues, NotFound };

std::string_view to_string(CrackStatus status) noexcept;

// Outcome of a range search. The reported code is the LOWEST candidate in
// the range whose decryption is not WrongCode; Found when it decrypted
// Ok, FoundWithIssues when Ambiguous (its plaintext is still reported: a
// code breaker cannot ask for a resend). tried counts candidates in the
// ascending-scan model: everything up to and including the hit, or the
// whole range when nothing hit.
struct CrackOutcome {
    CrackStatus status = CrackStatus::NotFound;
    std::optional<SecretCode> code;
    std::string plaintext;
    std::uint64_t tried = 0;
};

struct CrackOptions {
    // Candidates per work unit. Units are evaluated concurrently and
    // reduced to the minimum hit, so the result does not depend on
    // scheduling.
    std::uint64_t unit_size = 100;

    // Worker threads; 0 means hardware concurrency.
    unsigned threads = 0;

    // Called after each finished unit with (candidates_done, total).
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

// Evaluates decrypt(ciphertext, candidate) across the range and returns
// the lowest non-WrongCode candidate. Deterministic regardless of thread
// count. Throws DomainError for an empty range or one that leaves
// [0, 9999999999].
CrackOutcome crack_range(const CrackRequest& request,
                         const CrackOptions& options = {});

}  // namespace fibcipher
