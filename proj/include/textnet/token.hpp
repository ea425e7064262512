#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace textnet {

/// Raised on malformed input (bad UTF-8, unparseable files, bad arguments).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One word occurrence. `position` is the index in the original token
/// sequence, so stopword removal leaves surviving positions intact.
struct Token {
    std::string surface;
    std::size_t position = 0;

    bool operator==(const Token&) const = default;
};

/// Coarse part-of-speech classes used to select lemmatization rules.
enum class TagClass { Noun, Verb, Adjective, Adverb };

inline char tag_class_letter(TagClass c) {
    switch (c) {
    case TagClass::Noun: return 'N';
    case TagClass::Verb: return 'V';
    case TagClass::Adjective: return 'J';
    case TagClass::Adverb: return 'R';
    }
    return 'N';
}

/// Penn-Treebank-style tag prefixes select the class; everything else
/// (punctuation, determiners, UNKNOWN, ...) falls back to noun.
inline TagClass map_tag(const std::string& tag) {
    if (!tag.empty()) {
        switch (tag[0]) {
        case 'N': return TagClass::Noun;
        case 'V': return TagClass::Verb;
        case 'J': return TagClass::Adjective;
        case 'R': return TagClass::Adverb;
        default: break;
        }
    }
    return TagClass::Noun;
}

struct TaggedToken {
    Token token;
    std::string tag;
};

/// Pipeline tunables. Window sizes above 3 are unusual for co-occurrence
/// models; callers may warn but must not reject them.
struct PipelineConfig {
    bool lowercase = true;
    bool remove_stopwords = true;
    bool lemmatize = true;
    bool keep_alphabetic_only = true;
    int window_size = 1;
};

}  // namespace textnet
