#include "textnet/tokenizer.hpp"

#include <cctype>
#include <cstdint>

namespace textnet {
namespace {

// Decodes one UTF-8 codepoint starting at `i`, advancing `i`.
// Throws on overlong forms, surrogates, truncation and stray continuation bytes.
uint32_t decode_utf8(std::string_view s, std::size_t& i) {
    auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len;
    uint32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        throw Error("invalid UTF-8 byte at offset " + std::to_string(i));
    }
    if (i + len > s.size())
        throw Error("truncated UTF-8 sequence at offset " + std::to_string(i));
    for (int k = 1; k < len; ++k) {
        unsigned char b = byte(i + k);
        if ((b & 0xC0) != 0x80)
            throw Error("invalid UTF-8 continuation at offset " + std::to_string(i + k));
        cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr uint32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
        throw Error("invalid UTF-8 codepoint at offset " + std::to_string(i));
    i += len;
    return cp;
}

bool is_letter(uint32_t cp) {
    if (cp < 0x80) return std::isalpha(static_cast<int>(cp)) != 0;
    return true;  // any non-ASCII codepoint counts as a word character
}

bool is_digit(uint32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_joiner(uint32_t cp) {
    return cp == '\'' || cp == 0x2019 || cp == '-';
}

void append_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, const PipelineConfig& config) {
    // First pass: decode everything so bad UTF-8 fails up front.
    std::vector<uint32_t> cps;
    cps.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) cps.push_back(decode_utf8(text, i));

    std::vector<Token> tokens;
    std::size_t n = cps.size();
    std::size_t i = 0;
    while (i < n) {
        if (!is_letter(cps[i]) && !is_digit(cps[i])) {
            ++i;
            continue;
        }
        std::string surface;
        bool has_letter = false;
        while (i < n) {
            uint32_t cp = cps[i];
            if (is_letter(cp) || is_digit(cp)) {
                has_letter = has_letter || is_letter(cp);
                if (config.lowercase && cp < 0x80)
                    cp = static_cast<uint32_t>(std::tolower(static_cast<int>(cp)));
                append_utf8(surface, cp);
                ++i;
            } else if (is_joiner(cp) && i + 1 < n &&
                       (is_letter(cps[i + 1]) || is_digit(cps[i + 1]))) {
                append_utf8(surface, cp == 0x2019 ? '\'' : cp);
                ++i;
            } else {
                break;
            }
        }
        if (!config.keep_alphabetic_only || has_letter)
            tokens.push_back({std::move(surface), tokens.size()});
    }
    return tokens;
}

}  // namespace textnet
