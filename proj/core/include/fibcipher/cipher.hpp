#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibcipher/alphabet.hpp"
#include "fibcipher/errors.hpp"
#include "fibcipher/etable.hpp"
#include "fibcipher/keyschedule.hpp"
#include "fibcipher/random_source.hpp"

namespace fibcipher {

// A string of decimal digits: table slices interleaved with misleading
// digits. Validity (digits only) is enforced at construction, so a held
// Ciphertext is always well-formed.
class Ciphertext {
public:
    Ciphertext() = default;

    // Throws FormatError if any character is not an ASCII digit.
    static Ciphertext from_digits(std::string digits);

    const std::string& digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }

    friend bool operator==(const Ciphertext&, const Ciphertext&) = default;

private:
    explicit Ciphertext(std::string digits) : digits_(std::move(digits)) {}
    std::string digits_;
};

enum class DecryptStatus { Ok, WrongCode, Ambiguous };

std::string_view to_string(DecryptStatus status) noexcept;

// Result of a decryption attempt.
//   Ok        - every payload matched exactly one table entry.
//   WrongCode - some payload matched zero entries (wins over Ambiguous).
//   Ambiguous - no zero-match payload, but some matched two or more.
// plaintext is exact for Ok and a best-effort reconstruction from
// last-match indices for Ambiguous; callers must treat the latter as
// unreliable. trailing_ignored counts unconsumed digits after the walk
// stops (a partial payload or a truncated final mislead group); an honest
// ciphertext ends with a complete mislead group and reports zero.
struct DecryptOutcome {
    DecryptStatus status = DecryptStatus::Ok;
    std::string plaintext;
    std::vector<int> match_counts;
    std::size_t trailing_ignored = 0;

    bool ok() const noexcept { return status == DecryptStatus::Ok; }
};

// Per-symbol encryption record, for tests and diagnostics.
struct SymbolTrace {
    char symbol;
    int index;            // alphabet index, 1-based
    int start;            // payload start within the entry, 1-based
    std::string payload;
    std::string mislead;
};

// Encrypts plaintext under the code. For the k-th symbol (1-based) with
// alphabet index j: draw a start r in [1, 7], emit characters
// r .. r+C_{2k-1}-1 of table entry j, then emit C_{2k} mislead digits.
// r <= 7 and C <= 9 keep every slice inside the 15-digit entry. Draw
// order per symbol: one start, then the mislead digits. Empty plaintext
// yields an empty ciphertext.
Ciphertext encrypt(const Plaintext& plaintext, const SecretCode& code,
                   RandomSource& rng);

// Same, recording one SymbolTrace per symbol when trace is non-null.
Ciphertext encrypt_traced(const Plaintext& plaintext, const SecretCode& code,
                          RandomSource& rng, std::vector<SymbolTrace>* trace);

struct SplitResult {
    std::vector<std::string> payloads;
    std::size_t trailing_ignored = 0;  // unconsumed digits after the walk stops
};

// Walks the ciphertext with the code's schedule: extract a full payload of
// C_{2k-1} digits, then skip the full C_{2k}-digit mislead group, for
// k = 1, 2, ... The walk stops at the first group that no longer fits;
// the digits of that partial group are ignored and their count reported
// via trailing_ignored. A payload followed by a truncated mislead group
// still counts as extracted.
SplitResult split_payloads(const Ciphertext& ciphertext, const SecretCode& code);

struct MatchResult {
    int count = 0;                  // entries containing the payload
    std::optional<int> index;       // highest-numbered match, 1-based
};

// Counts the table entries containing payload as a contiguous substring.
// When several match, the highest-numbered entry is the one reported.
MatchResult match_payload(std::string_view payload, const ETable& table);

// Full decryption: derives table and schedule from the code, splits
// payloads, matches each, and classifies per DecryptOutcome.
DecryptOutcome decrypt(const Ciphertext& ciphertext, const SecretCode& code);

// encrypt_verified gave up: every attempt self-decrypted Ambiguous.
class AmbiguityError : public Error {
public:
    AmbiguityError(const std::string& message, Ciphertext last)
        : Error(message), last_(std::move(last)) {}

    const Ciphertext& last_ciphertext() const noexcept { return last_; }

private:
    Ciphertext last_;
};

// Sender-side resend protocol: encrypts and self-decrypts until the
// result is Ok, at most max_retries times. A fresh encryption looks
// different each round, so ambiguity clears with overwhelming
// probability. Throws DomainError if max_retries < 1 and AmbiguityError
// (carrying the last ciphertext) when retries run out.
Ciphertext encrypt_verified(const Plaintext& plaintext, const SecretCode& code,
                            RandomSource& rng, int max_retries = 5);

}  // namespace fibcipher
