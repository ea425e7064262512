#pragma once

#include <string_view>
#include <vector>

#include "textnet/token.hpp"

namespace textnet {

/// Splits UTF-8 text into word tokens.
///
/// A token is a maximal run of letters/digits; apostrophes and hyphens are
/// kept only between two word characters ("don't", "state-of-the-art").
/// Pure punctuation never forms a token. With config.keep_alphabetic_only,
/// tokens containing no letter (e.g. "42") are dropped as well. ASCII
/// letters are lowercased when config.lowercase is set; non-ASCII
/// codepoints pass through unchanged.
///
/// Throws Error on invalid UTF-8.
std::vector<Token> tokenize(std::string_view text, const PipelineConfig& config);

}  // namespace textnet
