#include "textnet/stoplist.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace textnet {
namespace {

std::string ascii_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// NLTK-style English stopword list.
const char* const kEnglishStopwords[] = {
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
    "you're", "you've", "you'll", "you'd", "your", "yours", "yourself",
    "yourselves", "he", "him", "his", "himself", "she", "she's", "her",
    "hers", "herself", "it", "it's", "its", "itself", "they", "them",
    "their", "theirs", "themselves", "what", "which", "who", "whom",
    "this", "that", "that'll", "these", "those", "am", "is", "are", "was",
    "were", "be", "been", "being", "have", "has", "had", "having", "do",
    "does", "did", "doing", "a", "an", "the", "and", "but", "if", "or",
    "because", "as", "until", "while", "of", "at", "by", "for", "with",
    "about", "against", "between", "into", "through", "during", "before",
    "after", "above", "below", "to", "from", "up", "down", "in", "out",
    "on", "off", "over", "under", "again", "further", "then", "once",
    "here", "there", "when", "where", "why", "how", "all", "any", "both",
    "each", "few", "more", "most", "other", "some", "such", "no", "nor",
    "not", "only", "own", "same", "so", "than", "too", "very", "s", "t",
    "can", "will", "just", "don", "don't", "should", "should've", "now",
    "d", "ll", "m", "o", "re", "ve", "y", "ain", "aren", "aren't",
    "couldn", "couldn't", "didn", "didn't", "doesn", "doesn't", "hadn",
    "hadn't", "hasn", "hasn't", "haven", "haven't", "isn", "isn't", "ma",
    "mightn", "mightn't", "mustn", "mustn't", "needn", "needn't", "shan",
    "shan't", "shouldn", "shouldn't", "wasn", "wasn't", "weren",
    "weren't", "won", "won't", "wouldn", "wouldn't",
};

}  // namespace

StopList::StopList(std::vector<std::string> words) {
    for (auto& w : words)
        if (!w.empty()) words_.insert(ascii_lower(std::move(w)));
}

StopList StopList::default_english() {
    StopList list;
    for (const char* w : kEnglishStopwords) list.words_.insert(w);
    return list;
}

StopList StopList::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open stoplist file: " + path);
    StopList list;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        // trim
        auto first = line.find_first_not_of(" \t\r");
        auto last = line.find_last_not_of(" \t\r");
        if (first == std::string::npos) continue;
        list.words_.insert(ascii_lower(line.substr(first, last - first + 1)));
    }
    return list;
}

bool StopList::contains(const std::string& word) const {
    return words_.count(ascii_lower(word)) > 0;
}

std::vector<Token> remove_stopwords(const std::vector<Token>& tokens,
                                    const StopList& stoplist) {
    std::vector<Token> kept;
    kept.reserve(tokens.size());
    for (const auto& t : tokens)
        if (!stoplist.contains(t.surface)) kept.push_back(t);
    return kept;
}

}  // namespace textnet
