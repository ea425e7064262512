#include "textnet/pipeline.hpp"

namespace textnet {

std::vector<std::string> preprocess_tagged(const std::vector<TaggedToken>& tagged,
                                           const PipelineConfig& config,
                                           const StopList& stoplist,
                                           const LemmaLexicon& lexicon) {
    std::vector<std::string> lemmas;
    lemmas.reserve(tagged.size());
    for (const auto& tt : tagged) {
        if (config.remove_stopwords && stoplist.contains(tt.token.surface)) continue;
        if (config.lemmatize)
            lemmas.push_back(lemmatize(tt.token.surface, map_tag(tt.tag), lexicon));
        else
            lemmas.push_back(tt.token.surface);
    }
    return lemmas;
}

std::vector<std::string> preprocess(std::string_view text,
                                    const PipelineConfig& config,
                                    const StopList& stoplist,
                                    const LemmaLexicon& lexicon,
                                    const TaggerFn& tagger) {
    std::vector<Token> tokens = tokenize(text, config);
    if (config.remove_stopwords) tokens = remove_stopwords(tokens, stoplist);
    std::vector<TaggedToken> tagged;
    if (tagger) {
        tagged = tagger(tokens);
        if (tagged.size() != tokens.size())
            throw Error("tagger returned wrong number of tags");
    } else {
        static const PosTagger default_tagger;
        tagged = default_tagger.tag(tokens);
    }
    PipelineConfig rest = config;
    rest.remove_stopwords = false;  // already applied
    return preprocess_tagged(tagged, rest, stoplist, lexicon);
}

}  // namespace textnet
