#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "textnet/token.hpp"

namespace textnet {

/// Dictionary-validated suffix-detachment lemmatizer resources.
///
/// Per tag class: a set of known base forms, an irregular-form exception
/// map, and an ordered (suffix, replacement) rule list. Rule order is
/// semantic; the first detachment whose result is a known base form wins.
class LemmaLexicon {
public:
    /// Small bundled English lexicon; covers common words, unknown words
    /// pass through lemmatize() unchanged.
    static LemmaLexicon bundled();

    /// Overlays resources from a directory onto the bundled lexicon.
    /// Recognized files (all optional): <class>.exc (TSV inflected<TAB>base),
    /// <class>.lemmas (one word per line), <class>.rules (TSV
    /// suffix<TAB>replacement, replaces the class's rule list) where
    /// <class> is noun, verb, adj or adv.
    static LemmaLexicon from_directory(const std::string& dir);

    void add_lemma(TagClass c, std::string word);
    void add_exception(TagClass c, std::string inflected, std::string base);
    void set_rules(TagClass c, std::vector<std::pair<std::string, std::string>> rules);

    bool is_lemma(TagClass c, const std::string& word) const;
    const std::unordered_map<std::string, std::string>& exceptions(TagClass c) const;
    const std::vector<std::pair<std::string, std::string>>& rules(TagClass c) const;

private:
    static std::size_t idx(TagClass c) { return static_cast<std::size_t>(c); }
    std::array<std::unordered_set<std::string>, 4> lemmas_;
    std::array<std::unordered_map<std::string, std::string>, 4> exceptions_;
    std::array<std::vector<std::pair<std::string, std::string>>, 4> rules_;
};

/// Morphy-style resolution: exception map, then identity for known base
/// forms, then suffix detachment validated against the lemma set. Unknown
/// words come back unchanged.
std::string lemmatize(const std::string& word, TagClass cls, const LemmaLexicon& lexicon);

}  // namespace textnet
