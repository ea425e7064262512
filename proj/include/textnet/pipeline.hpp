#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "textnet/lemmatizer.hpp"
#include "textnet/stoplist.hpp"
#include "textnet/tagger.hpp"
#include "textnet/token.hpp"
#include "textnet/tokenizer.hpp"

namespace textnet {

/// Full pre-processing chain: tokenize, optionally drop stopwords, tag,
/// map tags to {N,V,J,R}, lemmatize. Output order matches the surviving
/// token order. Pass a custom `tagger` to replace the rule-based default.
std::vector<std::string> preprocess(std::string_view text,
                                    const PipelineConfig& config,
                                    const StopList& stoplist,
                                    const LemmaLexicon& lexicon,
                                    const TaggerFn& tagger = {});

/// Same chain starting from already tagged tokens (the `word_TAG` path).
std::vector<std::string> preprocess_tagged(const std::vector<TaggedToken>& tagged,
                                           const PipelineConfig& config,
                                           const StopList& stoplist,
                                           const LemmaLexicon& lexicon);

}  // namespace textnet
