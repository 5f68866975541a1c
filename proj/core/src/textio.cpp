#include "fibcipher/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace fibcipher {

std::string format_ciphertext(const Ciphertext& ciphertext, std::size_t columns) {
    const std::string& digits = ciphertext.digits();
    if (digits.empty()) return "";
    if (columns == 0) columns = digits.size();

    std::string out;
    out.reserve(digits.size() + digits.size() / columns + 1);
    for (std::size_t pos = 0; pos < digits.size(); pos += columns) {
        out.append(digits, pos, columns);
        out.push_back('\n');
    }
    return out;
}

Ciphertext parse_ciphertext(std::string_view text) {
    std::string digits;
    digits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
        } else if (std::isspace(static_cast<unsigned char>(ch)) == 0) {
            throw FormatError("ciphertext has a non-digit character at offset " +
                              std::to_string(i + 1));
        }
    }
    return Ciphertext::from_digits(std::move(digits));
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open " + path.string() + " for reading");
    }
    std::ostringstream contents;
    contents << in.rdbuf();
    if (in.bad()) {
        throw FormatError("failed while reading " + path.string());
    }
    return std::move(contents).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError("cannot open " + path.string() + " for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw FormatError("failed while writing " + path.string());
    }
}

Ciphertext read_ciphertext_file(const std::filesystem::path& path) {
    const std::string contents = read_text_file(path);
    try {
        return parse_ciphertext(contents);
    } catch (const FormatError& err) {
        throw FormatError(path.string() + ": " + err.what());
    }
}

void write_ciphertext_file(const std::filesystem::path& path, const Ciphertext& ciphertext) {
    write_text_file(path, format_ciphertext(ciphertext));
}

SecretCode read_code_file(const std::filesystem::path& path) {
    const std::string contents = read_text_file(path);
    try {
        return SecretCode::parse(contents);
    } catch (const FormatError& err) {
        throw FormatError(path.string() + ": " + err.what());
    }
}

}  // namespace fibcipher
