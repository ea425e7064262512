#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "textnet/token.hpp"

namespace textnet {

/// A deduplicated set of lowercase function words.
class StopList {
public:
    StopList() = default;
    explicit StopList(std::vector<std::string> words);

    /// Bundled English stopword list.
    static StopList default_english();

    /// Loads a stoplist file: UTF-8, one word per line, '#' starts a comment.
    static StopList from_file(const std::string& path);

    /// Case-insensitive for ASCII.
    bool contains(const std::string& word) const;

    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

/// Drops stoplist members; survivors keep their order and positions.
std::vector<Token> remove_stopwords(const std::vector<Token>& tokens,
                                    const StopList& stoplist);

}  // namespace textnet
