#include "textnet/tagger.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

namespace textnet {
namespace {

// Closed-class words and common irregulars the suffix rules would get wrong.
const std::unordered_map<std::string, std::string>& word_lexicon() {
    static const std::unordered_map<std::string, std::string> lex = {
        // determiners / articles
        {"the", "DT"}, {"a", "DT"}, {"an", "DT"}, {"this", "DT"}, {"that", "DT"},
        {"these", "DT"}, {"those", "DT"}, {"some", "DT"}, {"any", "DT"},
        {"each", "DT"}, {"every", "DT"}, {"no", "DT"}, {"all", "DT"},
        // pronouns
        {"i", "PRP"}, {"you", "PRP"}, {"he", "PRP"}, {"she", "PRP"},
        {"it", "PRP"}, {"we", "PRP"}, {"they", "PRP"}, {"me", "PRP"},
        {"him", "PRP"}, {"them", "PRP"}, {"us", "PRP"},
        {"my", "PRP$"}, {"your", "PRP$"}, {"his", "PRP$"}, {"her", "PRP$"},
        {"its", "PRP$"}, {"our", "PRP$"}, {"their", "PRP$"},
        {"who", "WP"}, {"what", "WP"}, {"which", "WDT"},
        // be / have / do / modals
        {"be", "VB"}, {"am", "VBP"}, {"is", "VBZ"}, {"are", "VBP"},
        {"was", "VBD"}, {"were", "VBD"}, {"been", "VBN"}, {"being", "VBG"},
        {"have", "VBP"}, {"has", "VBZ"}, {"had", "VBD"}, {"having", "VBG"},
        {"do", "VBP"}, {"does", "VBZ"}, {"did", "VBD"}, {"doing", "VBG"},
        {"can", "MD"}, {"could", "MD"}, {"may", "MD"}, {"might", "MD"},
        {"must", "MD"}, {"shall", "MD"}, {"should", "MD"}, {"will", "MD"},
        {"would", "MD"},
        // prepositions / conjunctions / particles
        {"of", "IN"}, {"in", "IN"}, {"on", "IN"}, {"at", "IN"}, {"by", "IN"},
        {"for", "IN"}, {"with", "IN"}, {"from", "IN"}, {"to", "TO"},
        {"into", "IN"}, {"over", "IN"}, {"under", "IN"}, {"between", "IN"},
        {"through", "IN"}, {"during", "IN"}, {"about", "IN"}, {"against", "IN"},
        {"and", "CC"}, {"or", "CC"}, {"but", "CC"}, {"nor", "CC"},
        {"if", "IN"}, {"because", "IN"}, {"while", "IN"}, {"as", "IN"},
        // adverbs the -ly rule misses
        {"not", "RB"}, {"very", "RB"}, {"too", "RB"}, {"also", "RB"},
        {"now", "RB"}, {"then", "RB"}, {"here", "RB"}, {"there", "RB"},
        {"never", "RB"}, {"always", "RB"}, {"often", "RB"}, {"again", "RB"},
        {"today", "NN"}, {"soon", "RB"}, {"well", "RB"},
        // common irregular plurals
        {"children", "NNS"}, {"people", "NNS"}, {"men", "NNS"},
        {"women", "NNS"}, {"feet", "NNS"}, {"teeth", "NNS"}, {"mice", "NNS"},
        {"geese", "NNS"}, {"data", "NNS"},
        // common irregular verb forms
        {"went", "VBD"}, {"said", "VBD"}, {"made", "VBD"}, {"took", "VBD"},
        {"came", "VBD"}, {"saw", "VBD"}, {"knew", "VBD"}, {"got", "VBD"},
        {"gave", "VBD"}, {"found", "VBD"}, {"thought", "VBD"}, {"told", "VBD"},
        {"became", "VBD"}, {"left", "VBD"}, {"felt", "VBD"}, {"kept", "VBD"},
        {"began", "VBD"}, {"brought", "VBD"}, {"wrote", "VBD"}, {"stood", "VBD"},
        {"heard", "VBD"}, {"met", "VBD"}, {"ran", "VBD"}, {"held", "VBD"},
        {"written", "VBN"}, {"taken", "VBN"}, {"given", "VBN"}, {"known", "VBN"},
        {"seen", "VBN"}, {"done", "VBN"}, {"gone", "VBN"},
        // words in -s that are not plurals
        {"this", "DT"}, {"his", "PRP$"}, {"is", "VBZ"}, {"was", "VBD"},
        {"yes", "UH"}, {"thus", "RB"}, {"perhaps", "RB"}, {"always", "RB"},
        // frequent adjectives
        {"good", "JJ"}, {"new", "JJ"}, {"old", "JJ"}, {"great", "JJ"},
        {"small", "JJ"}, {"large", "JJ"}, {"long", "JJ"}, {"little", "JJ"},
        {"high", "JJ"}, {"low", "JJ"}, {"big", "JJ"}, {"complex", "JJ"},
        {"simple", "JJ"}, {"important", "JJ"}, {"different", "JJ"},
        {"same", "JJ"}, {"many", "JJ"}, {"few", "JJ"}, {"more", "JJR"},
        {"most", "JJS"}, {"better", "JJR"}, {"best", "JJS"},
        {"worse", "JJR"}, {"worst", "JJS"},
        // frequent nouns that would trip a suffix rule
        {"machine", "NN"}, {"something", "NN"},
        {"nothing", "NN"}, {"anything", "NN"}, {"everything", "NN"},
        {"morning", "NN"}, {"evening", "NN"}, {"thing", "NN"}, {"king", "NN"},
        {"ring", "NN"}, {"string", "NN"}, {"spring", "NN"}, {"wing", "NN"},
        {"song", "NN"}, {"bed", "NN"}, {"red", "JJ"}, {"hundred", "CD"},
        {"united", "JJ"},
    };
    return lex;
}

}  // namespace

PosTagger::PosTagger() {
    // Checked in order; a rule fires only when the stem is long enough,
    // so "was" or "ss" endings don't become plurals.
    rules_ = {
        {"ing", "VBG", 3},
        {"ed", "VBD", 2},
        {"ly", "RB", 2},
        {"ness", "NN", 2},
        {"tion", "NN", 2},
        {"ment", "NN", 2},
        {"ful", "JJ", 2},
        {"ous", "JJ", 2},
        {"able", "JJ", 2},
        {"ible", "JJ", 2},
        {"est", "JJS", 3},
        {"ss", "NN", 1},
        {"us", "NN", 1},
        {"is", "NN", 1},
        {"s", "NNS", 2},
    };
}

std::string PosTagger::tag_word(const std::string& word) const {
    const auto& lex = word_lexicon();
    if (auto it = lex.find(word); it != lex.end()) return it->second;
    for (const auto& r : rules_) {
        if (word.size() >= r.suffix.size() + r.min_stem &&
            word.compare(word.size() - r.suffix.size(), r.suffix.size(), r.suffix) == 0)
            return r.tag;
    }
    return "NN";
}

std::vector<TaggedToken> PosTagger::tag(const std::vector<Token>& tokens) const {
    std::vector<TaggedToken> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back({t, tag_word(t.surface)});
    return out;
}

std::vector<TaggedToken> parse_pretagged(std::string_view text, bool lowercase) {
    std::vector<TaggedToken> out;
    std::istringstream in{std::string(text)};
    std::string item;
    while (in >> item) {
        auto us = item.rfind('_');
        if (us == std::string::npos || us == 0 || us + 1 == item.size())
            throw Error("malformed pre-tagged item (expected word_TAG): " + item);
        std::string word = item.substr(0, us);
        std::string tag = item.substr(us + 1);
        if (lowercase)
            for (auto& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        out.push_back({Token{std::move(word), out.size()}, std::move(tag)});
    }
    return out;
}

}  // namespace textnet
