#include "fibcipher/cipher.hpp"

#include <cassert>

namespace fibcipher {

Ciphertext Ciphertext::from_digits(std::string digits) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < '0' || digits[i] > '9') {
            throw FormatError("ciphertext has a non-digit character at position " +
                              std::to_string(i + 1));
        }
    }
    return Ciphertext(std::move(digits));
}

std::string_view to_string(DecryptStatus status) noexcept {
    switch (status) {
        case DecryptStatus::Ok: return "ok";
        case DecryptStatus::WrongCode: return "wrong-code";
        case DecryptStatus::Ambiguous: return "ambiguous";
    }
    return "unknown";
}

Ciphertext encrypt_traced(const Plaintext& plaintext, const SecretCode& code,
                          RandomSource& rng, std::vector<SymbolTrace>* trace) {
    const ETable table = ETable::build(NormalizedCode(code));
    SliceSchedule::Walker schedule = SliceSchedule(code).walk();

    std::string out;
    for (char symbol : plaintext.text()) {
        const int index = symbol_to_index(symbol);
        const std::string_view entry = table.entry(index);

        const int payload_len = schedule.next();
        const int start = rng.payload_start();
        assert(start >= 1 && start <= 7 && payload_len <= 9);
        const std::string payload(entry.substr(static_cast<std::size_t>(start - 1),
                                               static_cast<std::size_t>(payload_len)));

        const int mislead_len = schedule.next();
        std::string mislead;
        mislead.reserve(static_cast<std::size_t>(mislead_len));
        for (int i = 0; i < mislead_len; ++i) {
            mislead.push_back(static_cast<char>('0' + rng.mislead_digit()));
        }

        out += payload;
        out += mislead;
        if (trace != nullptr) {
            trace->push_back(SymbolTrace{symbol, index, start, payload, mislead});
        }
    }
    return Ciphertext::from_digits(std::move(out));
}

Ciphertext encrypt(const Plaintext& plaintext, const SecretCode& code, RandomSource& rng) {
    return encrypt_traced(plaintext, code, rng, nullptr);
}

SplitResult split_payloads(const Ciphertext& ciphertext, const SecretCode& code) {
    SliceSchedule::Walker schedule = SliceSchedule(code).walk();
    const std::string& digits = ciphertext.digits();

    SplitResult result;
    std::size_t pos = 0;
    while (pos < digits.size()) {
        const auto payload_len = static_cast<std::size_t>(schedule.next());
        if (pos + payload_len > digits.size()) {
            // Partial payload; an honest ciphertext never ends mid-group.
            result.trailing_ignored = digits.size() - pos;
            break;
        }
        result.payloads.push_back(digits.substr(pos, payload_len));
        pos += payload_len;
        const auto mislead_len = static_cast<std::size_t>(schedule.next());
        if (pos + mislead_len > digits.size()) {
            // Truncated final mislead group. The payload above still
            // counts; the leftover digits are reported, not an error.
            result.trailing_ignored = digits.size() - pos;
            break;
        }
        pos += mislead_len;
    }
    return result;
}

MatchResult match_payload(std::string_view payload, const ETable& table) {
    MatchResult result;
    for (int n = 1; n <= kAlphabetSize; ++n) {
        if (table.entry(n).find(payload) != std::string_view::npos) {
            ++result.count;
            result.index = n;  // last match wins
        }
    }
    return result;
}

DecryptOutcome decrypt(const Ciphertext& ciphertext, const SecretCode& code) {
    const ETable table = ETable::build(NormalizedCode(code));
    const SplitResult split = split_payloads(ciphertext, code);

    DecryptOutcome outcome;
    outcome.trailing_ignored = split.trailing_ignored;
    outcome.match_counts.reserve(split.payloads.size());

    bool any_zero = false;
    bool any_multi = false;
    std::string best_effort;
    for (const std::string& payload : split.payloads) {
        const MatchResult match = match_payload(payload, table);
        outcome.match_counts.push_back(match.count);
        if (match.count == 0) {
            any_zero = true;
        } else {
            if (match.count > 1) any_multi = true;
            best_effort.push_back(index_to_symbol(*match.index));
        }
    }

    if (any_zero) {
        outcome.status = DecryptStatus::WrongCode;
    } else if (any_multi) {
        outcome.status = DecryptStatus::Ambiguous;
        outcome.plaintext = std::move(best_effort);
    } else {
        outcome.status = DecryptStatus::Ok;
        outcome.plaintext = std::move(best_effort);
    }
    return outcome;
}

Ciphertext encrypt_verified(const Plaintext& plaintext, const SecretCode& code,
                            RandomSource& rng, int max_retries) {
    if (max_retries < 1) {
        throw DomainError("max_retries must be at least 1, got " +
                          std::to_string(max_retries));
    }
    Ciphertext last;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        last = encrypt(plaintext, code, rng);
        if (decrypt(last, code).ok()) {
            return last;
        }
    }
    throw AmbiguityError("every encryption in " + std::to_string(max_retries) +
                             " attempts self-decrypted ambiguously",
                         std::move(last));
}

}  // namespace fibcipher
