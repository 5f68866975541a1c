#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fibcipher/cipher.hpp"
#include "fibcipher/keyschedule.hpp"

namespace fibcipher {

// Ciphertext file convention: ASCII digits wrapped at `columns` per line,
// trailing newline when nonempty. Readers ignore all whitespace, so
// hand-wrapped or unwrapped files parse the same.

std::string format_ciphertext(const Ciphertext& ciphertext, std::size_t columns = 96);

// Throws FormatError on any non-digit, non-whitespace character.
Ciphertext parse_ciphertext(std::string_view text);

Ciphertext read_ciphertext_file(const std::filesystem::path& path);
void write_ciphertext_file(const std::filesystem::path& path, const Ciphertext& ciphertext);

// Code file: exactly 10 ASCII digits, optional surrounding whitespace.
SecretCode read_code_file(const std::filesystem::path& path);

// Whole file as a string; FormatError naming the path when unreadable.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace fibcipher
