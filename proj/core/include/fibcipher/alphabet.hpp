#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "fibcipher/errors.hpp"

namespace fibcipher {

// The fixed 40-symbol message alphabet. Symbols are addressed by 1-based
// index according to their position in this string.
inline constexpr std::string_view kAlphabet =
    "?_.,ABCDEFGHIJKLMNOPQRSTUVWXYZ1234567890";
inline constexpr int kAlphabetSize = 40;

bool is_alphabet_char(char ch) noexcept;

// 1-based position of ch in the alphabet. Throws ValidationError for
// characters outside the alphabet.
int symbol_to_index(char ch);

// Inverse of symbol_to_index. Throws DomainError unless 1 <= index <= 40.
char index_to_symbol(int index);

// A message whose every character is an alphabet member. Empty is valid.
class Plaintext {
public:
    Plaintext() = default;

    const std::string& text() const noexcept { return text_; }
    std::size_t length() const noexcept { return text_.size(); }
    bool empty() const noexcept { return text_.empty(); }

    friend bool operator==(const Plaintext&, const Plaintext&) = default;

private:
    friend Plaintext normalize_text(std::string_view, bool);
    explicit Plaintext(std::string text) : text_(std::move(text)) {}
    std::string text_;
};

// Validates raw input and wraps it as a Plaintext.
//
// With strict off, ASCII lowercase letters are uppercased and each space
// becomes '_'. With strict on, the input must already be pure alphabet
// text. Anything outside the alphabet after that mapping raises
// ValidationError carrying all offending 1-based positions. Idempotent.
Plaintext normalize_text(std::string_view raw, bool strict = false);

}  // namespace fibcipher
