#include "fibcipher/alphabet.hpp"

#include <array>
#include <sstream>

namespace fibcipher {

namespace {

// index_of[ch] is the 1-based alphabet position, or 0 for non-members.
constexpr std::array<int, 256> make_index_table() {
    std::array<int, 256> table{};
    for (int i = 0; i < kAlphabetSize; ++i) {
        table[static_cast<unsigned char>(kAlphabet[static_cast<std::size_t>(i)])] = i + 1;
    }
    return table;
}

constexpr std::array<int, 256> kIndexOf = make_index_table();

std::string printable(char ch) {
    if (ch >= 0x20 && ch < 0x7f) {
        return std::string("'") + ch + "'";
    }
    std::ostringstream out;
    out << "0x" << std::hex << static_cast<int>(static_cast<unsigned char>(ch));
    return out.str();
}

}  // namespace

bool is_alphabet_char(char ch) noexcept {
    return kIndexOf[static_cast<unsigned char>(ch)] != 0;
}

int symbol_to_index(char ch) {
    const int index = kIndexOf[static_cast<unsigned char>(ch)];
    if (index == 0) {
        throw ValidationError("character " + printable(ch) + " is not in the message alphabet");
    }
    return index;
}

char index_to_symbol(int index) {
    if (index < 1 || index > kAlphabetSize) {
        throw DomainError("alphabet index " + std::to_string(index) + " is outside 1..40");
    }
    return kAlphabet[static_cast<std::size_t>(index - 1)];
}

Plaintext normalize_text(std::string_view raw, bool strict) {
    std::string text(raw);
    if (!strict) {
        for (char& ch : text) {
            if (ch >= 'a' && ch <= 'z') {
                ch = static_cast<char>(ch - 'a' + 'A');
            } else if (ch == ' ') {
                ch = '_';
            }
        }
    }

    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!is_alphabet_char(text[i])) {
            bad.push_back(i + 1);
        }
    }
    if (!bad.empty()) {
        std::ostringstream out;
        out << "text contains " << bad.size() << " non-alphabet character"
            << (bad.size() == 1 ? "" : "s") << ":";
        for (std::size_t pos : bad) {
            out << " " << printable(text[pos - 1]) << " at position " << pos;
        }
        throw ValidationError(out.str(), std::move(bad));
    }
    return Plaintext(std::move(text));
}

}  // namespace fibcipher
