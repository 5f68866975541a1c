// Command-line front end: encrypt, decrypt, crack, dump-table.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibcipher/fibcipher.hpp"

namespace {

// Exit codes: 0 success/Ok, 2 ambiguous, 3 wrong code, 4 input or format
// error, 5 crack exhausted its range.
constexpr int kExitOk = 0;
constexpr int kExitAmbiguous = 2;
constexpr int kExitWrongCode = 3;
constexpr int kExitBadInput = 4;
constexpr int kExitNotFound = 5;

std::vector<std::string> split_lines(const std::string& contents) {
    std::vector<std::string> lines;
    std::string current;
    for (char ch : contents) {
        if (ch == '\n') {
            if (!current.empty() && current.back() == '\r') current.pop_back();
            lines.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) lines.push_back(std::move(current));
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

// The message is the first line of the file. Extra lines are an error in
// strict mode and are joined with '_' otherwise.
fibcipher::Plaintext read_message_file(const std::string& path, bool strict) {
    const std::vector<std::string> lines =
        split_lines(fibcipher::read_text_file(path));
    if (lines.size() > 1 && strict) {
        throw fibcipher::FormatError(path + ": message must be a single line, got " +
                                     std::to_string(lines.size()));
    }
    std::string joined;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i > 0) joined.push_back('_');
        joined += lines[i];
    }
    return fibcipher::normalize_text(joined, strict);
}

struct EncryptArgs {
    std::string code_file = "Code.txt";
    std::string in_file = "Initial_Message.txt";
    std::string out_file = "Final_Coded_Message.txt";
    std::optional<std::uint64_t> seed;
    bool verify = false;
    bool strict = false;
};

int run_encrypt(const EncryptArgs& args) {
    const fibcipher::SecretCode code = fibcipher::read_code_file(args.code_file);
    const fibcipher::Plaintext message = read_message_file(args.in_file, args.strict);

    fibcipher::SplitMixSource rng = args.seed
                                        ? fibcipher::SplitMixSource(*args.seed)
                                        : fibcipher::SplitMixSource::from_entropy();
    fibcipher::Ciphertext ciphertext;
    if (args.verify) {
        try {
            ciphertext = fibcipher::encrypt_verified(message, code, rng);
        } catch (const fibcipher::AmbiguityError& err) {
            std::cerr << "encrypt: " << err.what() << "\n";
            return kExitAmbiguous;
        }
    } else {
        ciphertext = fibcipher::encrypt(message, code, rng);
    }
    fibcipher::write_ciphertext_file(args.out_file, ciphertext);
    return kExitOk;
}

struct DecryptArgs {
    std::string code_file = "Code.txt";
    std::string in_file = "Initial_Coded_Message.txt";
    std::string out_file = "Final_Decoded_Message.txt";
    bool force = false;
};

int run_decrypt(const DecryptArgs& args) {
    const fibcipher::SecretCode code = fibcipher::read_code_file(args.code_file);
    const fibcipher::Ciphertext ciphertext = fibcipher::read_ciphertext_file(args.in_file);

    const fibcipher::DecryptOutcome outcome = fibcipher::decrypt(ciphertext, code);
    if (outcome.trailing_ignored > 0) {
        std::cerr << "warning: ignored " << outcome.trailing_ignored
                  << " trailing digit(s); the message may be truncated\n";
    }

    switch (outcome.status) {
        case fibcipher::DecryptStatus::Ok:
            fibcipher::write_text_file(args.out_file, outcome.plaintext + "\n");
            return kExitOk;
        case fibcipher::DecryptStatus::WrongCode:
            fibcipher::write_text_file(args.out_file,
                                       "An incorrect code was used for decoding.\n");
            return kExitWrongCode;
        case fibcipher::DecryptStatus::Ambiguous:
            if (args.force) {
                std::cerr << "warning: ambiguous decryption; plaintext is unreliable\n";
                fibcipher::write_text_file(args.out_file, outcome.plaintext + "\n");
            } else {
                fibcipher::write_text_file(
                    args.out_file, "The initial encoded message needs to be resent.\n");
            }
            return kExitAmbiguous;
    }
    return kExitBadInput;  // unreachable
}

struct CrackArgs {
    std::string in_file = "Initial_Coded_Message.txt";
    std::string out_file = "Final_Decoded_Message.txt";
    std::string start;
    std::uint64_t count = 0;
    std::uint64_t unit_size = 100;
    unsigned threads = 0;
    bool progress = false;
};

int run_crack(const CrackArgs& args) {
    fibcipher::CrackRequest request;
    request.ciphertext = fibcipher::read_ciphertext_file(args.in_file);
    request.start = fibcipher::SecretCode::parse(args.start);
    request.count = args.count;

    fibcipher::CrackOptions options;
    options.unit_size = args.unit_size;
    options.threads = args.threads;
    if (args.progress) {
        options.progress = [](std::uint64_t done, std::uint64_t total) {
            std::cerr << "progress: " << done << "/" << total << " candidates\n";
        };
    }

    const fibcipher::CrackOutcome outcome = fibcipher::crack_range(request, options);

    std::ostringstream report;
    switch (outcome.status) {
        case fibcipher::CrackStatus::Found:
            report << outcome.plaintext << "\n\n"
                   << "The secret code was determined successfully.\n"
                   << "The printed message has no known issues.\n"
                   << "The secret code is: " << outcome.code->digits() << "\n";
            break;
        case fibcipher::CrackStatus::FoundWithIssues:
            report << outcome.plaintext << "\n\n"
                   << "The secret code was determined.\n"
                   << "However, the printed message might have some issues.\n"
                   << "The hypothetical secret code is: " << outcome.code->digits() << "\n";
            break;
        case fibcipher::CrackStatus::NotFound:
            report << "The secret code was not determined.\n"
                   << "Try a different range.\n";
            break;
    }
    fibcipher::write_text_file(args.out_file, report.str());

    std::cout << "status=" << fibcipher::to_string(outcome.status);
    if (outcome.code) std::cout << " code=" << outcome.code->digits();
    std::cout << " tried=" << outcome.tried << "\n";

    switch (outcome.status) {
        case fibcipher::CrackStatus::Found: return kExitOk;
        case fibcipher::CrackStatus::FoundWithIssues: return kExitAmbiguous;
        case fibcipher::CrackStatus::NotFound: return kExitNotFound;
    }
    return kExitBadInput;  // unreachable
}

struct DumpTableArgs {
    std::string code_file = "Code.txt";
    std::string out_file;  // empty or "-" means stdout
};

int run_dump_table(const DumpTableArgs& args) {
    const fibcipher::SecretCode code = fibcipher::read_code_file(args.code_file);
    const fibcipher::ETable table =
        fibcipher::build_table(fibcipher::normalize_code(code));

    std::ostringstream out;
    for (int n = 1; n <= fibcipher::kAlphabetSize; ++n) {
        out << n << "\t" << table.entry(n) << "\n";
    }
    if (args.out_file.empty() || args.out_file == "-") {
        std::cout << out.str();
    } else {
        fibcipher::write_text_file(args.out_file, out.str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Digit-table cipher with keyed slice schedule and misleading digits"};
    app.require_subcommand(1);

    EncryptArgs encrypt_args;
    CLI::App* encrypt = app.add_subcommand("encrypt", "Encrypt a message file");
    encrypt->add_option("--code-file", encrypt_args.code_file, "Secret code file (10 digits)");
    encrypt->add_option("--in", encrypt_args.in_file, "Message file");
    encrypt->add_option("--out", encrypt_args.out_file, "Ciphertext output file");
    encrypt->add_option("--seed", encrypt_args.seed, "RNG seed for reproducible output");
    encrypt->add_flag("--verify", encrypt_args.verify,
                      "Re-encrypt until the result self-decrypts cleanly (5 tries)");
    encrypt->add_flag("--strict", encrypt_args.strict,
                      "Reject input that is not already pure alphabet text");

    DecryptArgs decrypt_args;
    CLI::App* decrypt = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
    decrypt->add_option("--code-file", decrypt_args.code_file, "Secret code file (10 digits)");
    decrypt->add_option("--in", decrypt_args.in_file, "Ciphertext file");
    decrypt->add_option("--out", decrypt_args.out_file, "Plaintext output file");
    decrypt->add_flag("--force", decrypt_args.force,
                      "Write the best-effort plaintext even when ambiguous");

    CrackArgs crack_args;
    CLI::App* crack = app.add_subcommand("crack", "Brute-force a range of candidate codes");
    crack->add_option("--in", crack_args.in_file, "Ciphertext file");
    crack->add_option("--out", crack_args.out_file, "Report output file");
    crack->add_option("--start", crack_args.start, "First candidate code (10 digits)")
        ->required();
    crack->add_option("--count", crack_args.count, "Number of candidates")->required();
    crack->add_option("--unit-size", crack_args.unit_size, "Candidates per work unit");
    crack->add_option("--threads", crack_args.threads, "Worker threads (0 = auto)");
    crack->add_flag("--progress", crack_args.progress, "Report progress per finished unit");

    DumpTableArgs dump_args;
    CLI::App* dump = app.add_subcommand("dump-table", "Print the 40-entry table for a code");
    dump->add_option("--code-file", dump_args.code_file, "Secret code file (10 digits)");
    dump->add_option("--out", dump_args.out_file, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (encrypt->parsed()) return run_encrypt(encrypt_args);
        if (decrypt->parsed()) return run_decrypt(decrypt_args);
        if (crack->parsed()) return run_crack(crack_args);
        if (dump->parsed()) return run_dump_table(dump_args);
    } catch (const fibcipher::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
