#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "textnet/token.hpp"

namespace textnet {

/// Deterministic rule-based part-of-speech tagger.
///
/// Resolution order per word: embedded common-word lexicon, then ordered
/// suffix rules, then the NN fallback. Output tags are Penn-Treebank-style
/// codes (NN, NNS, VBG, JJ, RB, ...).
class PosTagger {
public:
    PosTagger();

    std::string tag_word(const std::string& word) const;
    std::vector<TaggedToken> tag(const std::vector<Token>& tokens) const;

    /// The ordered (suffix, tag, min stem length) rule table, for inspection.
    struct SuffixRule {
        std::string suffix;
        std::string tag;
        std::size_t min_stem;
    };
    const std::vector<SuffixRule>& rules() const { return rules_; }

private:
    std::vector<SuffixRule> rules_;
};

/// Any callable producing one tag per token may replace the default tagger.
using TaggerFn = std::function<std::vector<TaggedToken>(const std::vector<Token>&)>;

/// Parses pre-tagged input: whitespace-separated `word_TAG` items
/// (underscore delimiter; the last underscore splits word from tag).
/// Throws Error on items with no underscore or an empty word/tag.
std::vector<TaggedToken> parse_pretagged(std::string_view text, bool lowercase = true);

}  // namespace textnet
