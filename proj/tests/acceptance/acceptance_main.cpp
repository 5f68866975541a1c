// Acceptance checklist: nine end-to-end criteria, one line of output
// each, nonzero exit if any fails. Run via ctest (test name
// "acceptance") or directly.
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fibcipher/fibcipher.hpp"
#include "kat_vectors.hpp"

namespace {

using namespace fibcipher;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CheckResult {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int number;
    std::string name;
    std::function<CheckResult()> run;
};

SecretCode demo_code() { return SecretCode::parse(kat::kDemoCode); }

std::string random_message(std::mt19937_64& gen, std::size_t length) {
    std::uniform_int_distribution<int> pick(0, kAlphabetSize - 1);
    std::string text;
    text.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        text.push_back(kAlphabet[static_cast<std::size_t>(pick(gen))]);
    }
    return text;
}

// ---- criterion 1: E-table reproduction ---------------------------------

CheckResult check_etable() {
    const auto start = Clock::now();
    const ETable table = build_table(normalize_code(demo_code()));
    const double elapsed = seconds_since(start);

    CheckResult result;
    int max_delta = 0;
    for (int n = 1; n <= 40; ++n) {
        const std::string_view actual = table.entry(n);
        const std::string_view reference = kat::kDemoTableFloat[n - 1];
        if (actual.substr(0, 14) != reference.substr(0, 14)) {
            result.pass = false;
            result.detail += " E_" + std::to_string(n) + " digits 1-14 diverge (" +
                             std::string(actual) + " vs " + std::string(reference) + ");";
            continue;
        }
        const int delta = std::abs(actual[14] - reference[14]);
        max_delta = std::max(max_delta, delta);
        if (delta > 1) {
            result.pass = false;
            result.detail += " E_" + std::to_string(n) + " digit 15 off by " +
                             std::to_string(delta) + ";";
        }
    }
    if (elapsed >= 1.0) {
        result.pass = false;
        result.detail += " build took " + std::to_string(elapsed) + " s (limit 1 s);";
    }
    if (result.pass) {
        std::ostringstream out;
        out << "40/40 entries agree on digits 1-14, max digit-15 delta " << max_delta
            << ", built in " << elapsed * 1e3 << " ms (limit 1 s)";
        result.detail = out.str();
    }
    return result;
}

// ---- criterion 2: schedule reproduction --------------------------------

CheckResult check_schedule() {
    const std::vector<int> expected = {5, 5, 9, 5, 6, 7, 9, 7, 7, 5, 8, 5};
    const std::vector<int> actual = slice_schedule(demo_code(), 12);
    CheckResult result;
    if (actual != expected) {
        result.pass = false;
        result.detail = "twelve-term schedule mismatch";
        return result;
    }
    int prefix6 = 0;
    for (int i = 0; i < 6; ++i) prefix6 += actual[static_cast<std::size_t>(i)];
    if (prefix6 != 37) {
        result.pass = false;
        result.detail = "prefix sum through C_6 is " + std::to_string(prefix6) +
                        ", expected 37";
        return result;
    }
    result.detail = "C_1..C_12 = 5,5,9,5,6,7,9,7,7,5,8,5; C_1+..+C_6 = 37";
    return result;
}

// ---- criterion 3: scripted walkthrough ---------------------------------

CheckResult check_walkthrough() {
    ScriptedSource rng({3, 5, 7}, "95916"
                                  "33613"
                                  "3427975");
    const Ciphertext ciphertext = encrypt(normalize_text("O_B"), demo_code(), rng);
    const std::string expected = "7981295916159844612336136802423427975";
    CheckResult result;
    if (ciphertext.digits() != expected) {
        result.pass = false;
        result.detail = "got " + ciphertext.digits() + ", expected " + expected;
        return result;
    }
    result.detail = "encrypt(\"O_B\") with scripted draws reproduced all 37 digits";
    return result;
}

// ---- criterion 4: full-message decryption ------------------------------

CheckResult check_full_decrypt() {
    const Ciphertext ciphertext =
        Ciphertext::from_digits(std::string(kat::kDemoCiphertext));
    const DecryptOutcome outcome = decrypt(ciphertext, demo_code());

    CheckResult result;
    if (outcome.status != DecryptStatus::Ok ||
        outcome.plaintext != kat::kDemoMessage) {
        result.pass = false;
        std::ostringstream out;
        out << "status " << to_string(outcome.status) << ";";
        // Per-payload diagnosis: any failure must be attributable to a
        // specific payload, so name them.
        const SplitResult split = split_payloads(ciphertext, demo_code());
        const ETable table = build_table(normalize_code(demo_code()));
        for (std::size_t k = 0; k < split.payloads.size(); ++k) {
            const MatchResult match = match_payload(split.payloads[k], table);
            const char expected = kat::kDemoMessage[k];
            if (match.count != 1 ||
                (match.index && index_to_symbol(*match.index) != expected)) {
                out << " payload " << k + 1 << " (\"" << split.payloads[k]
                    << "\") count " << match.count << " expected '" << expected
                    << "';";
            }
        }
        result.detail = out.str();
        return result;
    }
    std::ostringstream out;
    out << "Ok, all " << outcome.plaintext.size()
        << " symbols recovered, every payload matched exactly one entry";
    result.detail = out.str();
    return result;
}

// ---- criterion 5: roundtrip property suite -----------------------------

CheckResult check_roundtrips() {
    const auto start = Clock::now();
    std::mt19937_64 gen(20260815);
    std::uniform_int_distribution<std::uint64_t> code_dist(0, 9'999'999'999ULL);
    std::uniform_int_distribution<std::size_t> len_dist(0, 200);

    int wrong_code = 0;
    int ambiguous = 0;
    int mismatched = 0;
    const int total = 1000;
    for (int i = 0; i < total; ++i) {
        const SecretCode code = SecretCode::from_value(code_dist(gen));
        const Plaintext message =
            normalize_text(random_message(gen, len_dist(gen)));
        SplitMixSource rng(gen());
        const DecryptOutcome outcome = decrypt(encrypt(message, code, rng), code);
        switch (outcome.status) {
            case DecryptStatus::WrongCode:
                ++wrong_code;
                break;
            case DecryptStatus::Ambiguous:
                ++ambiguous;
                break;
            case DecryptStatus::Ok:
                if (outcome.plaintext != message.text()) ++mismatched;
                break;
        }
    }
    const double elapsed = seconds_since(start);

    CheckResult result;
    result.pass = wrong_code == 0 && mismatched == 0 && elapsed < 60.0;
    std::ostringstream out;
    out << total << " random triples (length 0-200): " << wrong_code
        << " WrongCode, " << mismatched << " Ok-mismatches, " << ambiguous
        << " Ambiguous (rate " << (100.0 * ambiguous / total) << "%), "
        << elapsed << " s (limit 60 s)";
    result.detail = out.str();
    return result;
}

// ---- criterion 6: ciphertext length law --------------------------------

CheckResult check_length_law() {
    // Schedule evaluator written from the definition, sharing no code
    // with SliceSchedule: digit sum -> seeds -> mod-10 recurrence ->
    // clamp b < 5 to 9 - b -> sum the first `terms` values.
    const auto independent_sum = [](const SecretCode& code, std::size_t terms) {
        int sum = 0;
        for (char ch : code.digits()) sum += ch - '0';
        int x = (sum % 100) / 10;
        int y = sum % 10;
        std::size_t total = 0;
        for (std::size_t i = 0; i < terms; ++i) {
            int b;
            if (i == 0) {
                b = x;
            } else if (i == 1) {
                b = y;
            } else {
                b = (x + y) % 10;
                x = y;
                y = b;
            }
            total += static_cast<std::size_t>(b >= 5 ? b : 9 - b);
        }
        return total;
    };

    CheckResult result;
    std::mt19937_64 gen(1906);
    std::uniform_int_distribution<std::uint64_t> code_dist(0, 9'999'999'999ULL);
    std::uniform_int_distribution<std::size_t> len_dist(0, 100);
    for (int i = 0; i < 200; ++i) {
        const SecretCode code = SecretCode::from_value(code_dist(gen));
        const std::size_t length = len_dist(gen);
        SplitMixSource rng(gen());
        const Ciphertext ciphertext =
            encrypt(normalize_text(random_message(gen, length)), code, rng);
        const std::size_t expected = independent_sum(code, 2 * length);
        if (ciphertext.size() != expected) {
            result.pass = false;
            result.detail += " case " + std::to_string(i) + ": length " +
                             std::to_string(ciphertext.size()) + " != " +
                             std::to_string(expected) + ";";
        }
    }

    SplitMixSource rng(1);
    const Ciphertext demo =
        encrypt(normalize_text(std::string(kat::kDemoMessage)), demo_code(), rng);
    if (demo.size() != 800) {
        result.pass = false;
        result.detail += " demo message produced " + std::to_string(demo.size()) +
                         " digits, expected 800;";
    }
    if (result.pass) {
        result.detail =
            "200/200 random lengths match the independent schedule sum; "
            "demo message encrypts to exactly 800 digits";
    }
    return result;
}

// ---- criterion 7: crack success ----------------------------------------

CheckResult check_crack() {
    CrackRequest request;
    request.ciphertext = Ciphertext::from_digits(std::string(kat::kDemoCiphertext));
    request.start = SecretCode::parse("0135792400");
    request.count = 101;

    CrackOptions sequential;
    sequential.threads = 1;
    const auto seq_start = Clock::now();
    const CrackOutcome seq = crack_range(request, sequential);
    const double seq_elapsed = seconds_since(seq_start);

    CrackOptions parallel;  // threads = 0: hardware concurrency
    const auto par_start = Clock::now();
    const CrackOutcome par = crack_range(request, parallel);
    const double par_elapsed = seconds_since(par_start);

    CrackRequest disjoint;
    disjoint.ciphertext = request.ciphertext;
    disjoint.start = SecretCode::from_value(0);
    disjoint.count = 100;
    const CrackOutcome miss = crack_range(disjoint);

    CheckResult result;
    std::ostringstream out;
    if (seq.status != CrackStatus::Found || !seq.code ||
        seq.code->digits() != kat::kDemoCode) {
        result.pass = false;
        out << " sequential crack failed (status " << to_string(seq.status) << ");";
    }
    if (seq.plaintext != kat::kDemoMessage) {
        result.pass = false;
        out << " cracked plaintext mismatch;";
    }
    if (par.status != CrackStatus::Found || !par.code ||
        par.code->digits() != kat::kDemoCode) {
        result.pass = false;
        out << " parallel crack failed;";
    }
    if (seq_elapsed >= 30.0) {
        result.pass = false;
        out << " sequential took " << seq_elapsed << " s (limit 30 s);";
    }
    if (miss.status != CrackStatus::NotFound || miss.tried != 100) {
        result.pass = false;
        out << " disjoint range did not report NotFound over 100 candidates;";
    }
    if (result.pass) {
        out << "found 0135792468 in [0135792400, +101) after " << seq.tried
            << " candidates; sequential " << seq_elapsed * 1e3 << " ms, parallel "
            << par_elapsed * 1e3 << " ms; disjoint 100-candidate range NotFound";
    }
    result.detail = out.str();
    return result;
}

// ---- criterion 8: determinism ------------------------------------------

CheckResult check_determinism() {
    const Plaintext message = normalize_text(std::string(kat::kDemoMessage));
    SplitMixSource a(77);
    SplitMixSource b(77);
    const Ciphertext first = encrypt(message, demo_code(), a);
    const Ciphertext second = encrypt(message, demo_code(), b);

    CheckResult result;
    if (first != second) {
        result.pass = false;
        result.detail = "equal seeds produced different ciphertexts";
        return result;
    }

    CrackRequest request;
    request.ciphertext = first;
    request.start = SecretCode::parse("0135792420");
    request.count = 60;

    CrackOptions seq;
    seq.threads = 1;
    CrackOptions par;
    par.threads = 4;
    par.unit_size = 7;
    const CrackOutcome seq_outcome = crack_range(request, seq);
    const CrackOutcome par_outcome = crack_range(request, par);

    if (seq_outcome.status != CrackStatus::Found ||
        par_outcome.status != CrackStatus::Found || !seq_outcome.code ||
        !par_outcome.code ||
        seq_outcome.code->digits() != par_outcome.code->digits() ||
        seq_outcome.tried != par_outcome.tried) {
        result.pass = false;
        result.detail = "sequential and parallel cracks disagree";
        return result;
    }
    result.detail =
        "seeded encryptions byte-identical; sequential and parallel cracks both "
        "report " +
        seq_outcome.code->digits() + " after " +
        std::to_string(seq_outcome.tried) + " candidates";
    return result;
}

// ---- criterion 9: randomization ----------------------------------------

CheckResult check_randomization() {
    const Plaintext message = normalize_text(std::string(kat::kDemoMessage));
    std::set<std::string> seen;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        SplitMixSource rng(seed);
        seen.insert(encrypt(message, demo_code(), rng).digits());
    }
    CheckResult result;
    if (seen.size() != 100) {
        result.pass = false;
        result.detail = "only " + std::to_string(seen.size()) +
                        " distinct ciphertexts out of 100";
        return result;
    }
    result.detail = "100 distinctly seeded encryptions are pairwise distinct";
    return result;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "E-table reproduction", check_etable},
        {2, "schedule reproduction", check_schedule},
        {3, "scripted-RNG walkthrough", check_walkthrough},
        {4, "full-message decryption", check_full_decrypt},
        {5, "roundtrip property suite", check_roundtrips},
        {6, "ciphertext length law", check_length_law},
        {7, "crack success", check_crack},
        {8, "determinism", check_determinism},
        {9, "randomization", check_randomization},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        CheckResult result;
        try {
            result = criterion.run();
        } catch (const std::exception& err) {
            result.pass = false;
            result.detail = std::string("exception: ") + err.what();
        }
        if (!result.pass) ++failures;
        std::cout << (result.pass ? "PASS" : "FAIL") << " criterion "
                  << criterion.number << " (" << criterion.name
                  << "): " << result.detail << "\n";
    }

    if (failures == 0) {
        std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " of " << criteria.size()
              << " criteria FAILED\n";
    return 1;
}
