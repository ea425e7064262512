#include "textnet/lemmatizer.hpp"

#include <filesystem>
#include <fstream>

namespace textnet {
namespace {

const char* const kNouns[] = {
    "child", "game", "concept", "network", "machine", "word", "text", "book",
    "man", "woman", "person", "people", "day", "year", "time", "way", "thing",
    "world", "life", "hand", "part", "place", "case", "week", "company",
    "system", "program", "question", "work", "number", "night", "point",
    "home", "water", "room", "mother", "father", "area", "money", "story",
    "fact", "month", "lot", "right", "study", "job", "state", "family",
    "student", "group", "country", "problem", "service", "friend", "house",
    "city", "community", "name", "team", "minute", "idea", "kid", "body",
    "information", "back", "parent", "face", "level", "office", "door",
    "health", "art", "war", "history", "party", "result", "change", "morning",
    "reason", "research", "girl", "boy", "guy", "moment", "air", "teacher",
    "force", "education", "foot", "tooth", "mouse", "goose", "leaf", "knife",
    "wife", "life", "half", "shelf", "wolf", "analysis", "basis", "crisis",
    "thesis", "hypothesis", "datum", "medium", "index", "matrix", "vertex",
    "axis", "series", "species", "class", "glass", "boss", "bus", "box",
    "church", "watch", "branch", "dish", "brush", "fox", "quiz", "hero",
    "graph", "node", "edge", "measure", "degree", "window", "language",
    "learning", "science", "feature", "model", "author", "paper", "letter",
    "sentence", "paragraph", "document", "corpus", "phrase", "table", "line",
    "list", "set", "map", "tree", "value", "key", "item", "element", "link",
    "today", "playing", "building", "meeting", "feeling", "beginning",
};

const char* const kVerbs[] = {
    "be", "have", "do", "say", "get", "make", "go", "know", "take", "see",
    "come", "think", "look", "want", "give", "use", "find", "tell", "ask",
    "work", "seem", "feel", "try", "leave", "call", "play", "learn", "run",
    "move", "live", "believe", "hold", "bring", "happen", "write", "provide",
    "sit", "stand", "lose", "pay", "meet", "include", "continue", "change",
    "lead", "understand", "watch", "follow", "stop", "create", "speak",
    "read", "allow", "add", "spend", "grow", "open", "walk", "win", "offer",
    "remember", "love", "consider", "appear", "buy", "wait", "serve", "die",
    "send", "expect", "build", "stay", "fall", "cut", "reach", "kill",
    "remain", "suggest", "raise", "pass", "sell", "require", "report",
    "decide", "pull", "return", "explain", "hope", "develop", "carry",
    "break", "receive", "agree", "support", "hit", "produce", "eat", "cover",
    "catch", "draw", "choose", "cause", "point", "listen", "realize",
    "place", "close", "involve", "put", "begin", "like", "help", "talk",
    "turn", "start", "show", "hear", "let", "keep", "study", "link",
    "model", "compute", "process", "analyze", "represent", "map", "connect",
    "remove", "apply", "extract", "obtain", "describe", "define", "denote",
    "game", "free", "dance", "note", "state", "share", "race", "save",
};

const char* const kAdjectives[] = {
    "good", "new", "first", "last", "long", "great", "little", "own",
    "other", "old", "right", "big", "high", "different", "small", "large",
    "next", "early", "young", "important", "few", "public", "bad", "same",
    "able", "free", "low", "late", "hard", "major", "better", "best",
    "strong", "possible", "whole", "real", "simple", "complex", "easy",
    "clear", "recent", "certain", "main", "common", "poor", "natural",
    "significant", "similar", "hot", "cold", "dead", "central", "happy",
    "serious", "ready", "short", "single", "open", "red", "close", "wrong",
    "full", "deep", "fast", "slow", "wide", "narrow", "rich", "dark",
    "light", "heavy", "soft", "warm", "cool", "quick", "bright", "nice",
    "fine", "tall", "near", "far", "true", "false", "dense", "sparse",
};

const char* const kAdverbs[] = {
    "up", "so", "out", "just", "now", "how", "then", "more", "also", "here",
    "well", "only", "very", "even", "back", "there", "down", "still", "in",
    "as", "too", "when", "never", "really", "most", "why", "about", "over",
    "again", "where", "often", "once", "always", "sometimes", "together",
    "far", "away", "yet", "soon", "directly", "quickly", "slowly", "early",
    "late", "hard", "fast", "long", "today",
};

// Irregular form -> base, keyed by class.
const std::pair<const char*, const char*> kNounExceptions[] = {
    {"children", "child"}, {"men", "man"}, {"women", "woman"},
    {"people", "person"}, {"feet", "foot"}, {"teeth", "tooth"},
    {"mice", "mouse"}, {"geese", "goose"}, {"leaves", "leaf"},
    {"knives", "knife"}, {"wives", "wife"}, {"lives", "life"},
    {"halves", "half"}, {"shelves", "shelf"}, {"wolves", "wolf"},
    {"analyses", "analysis"}, {"bases", "basis"}, {"crises", "crisis"},
    {"theses", "thesis"}, {"hypotheses", "hypothesis"}, {"data", "datum"},
    {"media", "medium"}, {"indices", "index"}, {"matrices", "matrix"},
    {"vertices", "vertex"}, {"axes", "axis"}, {"oxen", "ox"},
};

const std::pair<const char*, const char*> kVerbExceptions[] = {
    {"was", "be"}, {"were", "be"}, {"is", "be"}, {"are", "be"}, {"am", "be"},
    {"been", "be"}, {"being", "be"}, {"has", "have"}, {"had", "have"},
    {"did", "do"}, {"done", "do"}, {"said", "say"}, {"went", "go"},
    {"gone", "go"}, {"got", "get"}, {"gotten", "get"}, {"made", "make"},
    {"knew", "know"}, {"known", "know"}, {"took", "take"}, {"taken", "take"},
    {"saw", "see"}, {"seen", "see"}, {"came", "come"}, {"thought", "think"},
    {"gave", "give"}, {"given", "give"}, {"found", "find"}, {"told", "tell"},
    {"felt", "feel"}, {"left", "leave"}, {"held", "hold"},
    {"brought", "bring"}, {"wrote", "write"}, {"written", "write"},
    {"sat", "sit"}, {"stood", "stand"}, {"lost", "lose"}, {"paid", "pay"},
    {"met", "meet"}, {"led", "lead"}, {"understood", "understand"},
    {"spoke", "speak"}, {"spoken", "speak"}, {"ran", "run"},
    {"grew", "grow"}, {"grown", "grow"}, {"fell", "fall"}, {"fallen", "fall"},
    {"caught", "catch"}, {"drew", "draw"}, {"drawn", "draw"},
    {"chose", "choose"}, {"chosen", "choose"}, {"ate", "eat"},
    {"eaten", "eat"}, {"began", "begin"}, {"begun", "begin"},
    {"heard", "hear"}, {"kept", "keep"}, {"won", "win"}, {"spent", "spend"},
    {"sent", "send"}, {"built", "build"}, {"broke", "break"},
    {"broken", "break"}, {"bought", "buy"}, {"sold", "sell"},
    {"hit", "hit"}, {"cut", "cut"}, {"put", "put"}, {"let", "let"},
};

const std::pair<const char*, const char*> kAdjectiveExceptions[] = {
    {"better", "good"}, {"best", "good"}, {"worse", "bad"}, {"worst", "bad"},
    {"further", "far"}, {"farther", "far"}, {"furthest", "far"},
    {"farthest", "far"}, {"elder", "old"}, {"eldest", "old"},
};

const std::pair<const char*, const char*> kAdverbExceptions[] = {
    {"better", "well"}, {"best", "well"}, {"worse", "badly"},
    {"worst", "badly"}, {"further", "far"}, {"farther", "far"},
};

std::string class_stem(TagClass c) {
    switch (c) {
    case TagClass::Noun: return "noun";
    case TagClass::Verb: return "verb";
    case TagClass::Adjective: return "adj";
    case TagClass::Adverb: return "adv";
    }
    return "noun";
}

}  // namespace

LemmaLexicon LemmaLexicon::bundled() {
    LemmaLexicon lex;
    for (const char* w : kNouns) lex.add_lemma(TagClass::Noun, w);
    for (const char* w : kVerbs) lex.add_lemma(TagClass::Verb, w);
    for (const char* w : kAdjectives) lex.add_lemma(TagClass::Adjective, w);
    for (const char* w : kAdverbs) lex.add_lemma(TagClass::Adverb, w);
    for (auto [a, b] : kNounExceptions) lex.add_exception(TagClass::Noun, a, b);
    for (auto [a, b] : kVerbExceptions) lex.add_exception(TagClass::Verb, a, b);
    for (auto [a, b] : kAdjectiveExceptions) lex.add_exception(TagClass::Adjective, a, b);
    for (auto [a, b] : kAdverbExceptions) lex.add_exception(TagClass::Adverb, a, b);

    // WordNet-style detachment rules; order matters.
    lex.set_rules(TagClass::Noun, {
        {"ses", "s"}, {"xes", "x"}, {"zes", "z"}, {"ches", "ch"},
        {"shes", "sh"}, {"ies", "y"}, {"men", "man"}, {"s", ""},
    });
    lex.set_rules(TagClass::Verb, {
        {"ies", "y"}, {"es", "e"}, {"es", ""}, {"ed", "e"}, {"ed", ""},
        {"ing", "e"}, {"ing", ""}, {"s", ""},
    });
    lex.set_rules(TagClass::Adjective, {
        {"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"},
    });
    lex.set_rules(TagClass::Adverb, {});
    return lex;
}

LemmaLexicon LemmaLexicon::from_directory(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw Error("lexicon directory not found: " + dir);
    LemmaLexicon lex = bundled();
    for (TagClass c : {TagClass::Noun, TagClass::Verb, TagClass::Adjective, TagClass::Adverb}) {
        const std::string stem = class_stem(c);
        if (std::ifstream in(dir + "/" + stem + ".lemmas"); in) {
            std::string line;
            while (std::getline(in, line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (!line.empty() && line[0] != '#') lex.add_lemma(c, line);
            }
        }
        if (std::ifstream in(dir + "/" + stem + ".exc"); in) {
            std::string line;
            while (std::getline(in, line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (line.empty() || line[0] == '#') continue;
                auto tab = line.find('\t');
                if (tab == std::string::npos)
                    throw Error("malformed exception line in " + stem + ".exc: " + line);
                lex.add_exception(c, line.substr(0, tab), line.substr(tab + 1));
            }
        }
        if (std::ifstream in(dir + "/" + stem + ".rules"); in) {
            std::vector<std::pair<std::string, std::string>> rules;
            std::string line;
            while (std::getline(in, line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (line.empty() || line[0] == '#') continue;
                auto tab = line.find('\t');
                if (tab == std::string::npos)
                    throw Error("malformed rule line in " + stem + ".rules: " + line);
                rules.emplace_back(line.substr(0, tab), line.substr(tab + 1));
            }
            lex.set_rules(c, std::move(rules));
        }
    }
    return lex;
}

void LemmaLexicon::add_lemma(TagClass c, std::string word) {
    lemmas_[idx(c)].insert(std::move(word));
}

void LemmaLexicon::add_exception(TagClass c, std::string inflected, std::string base) {
    lemmas_[idx(c)].insert(base);
    exceptions_[idx(c)][std::move(inflected)] = std::move(base);
}

void LemmaLexicon::set_rules(TagClass c, std::vector<std::pair<std::string, std::string>> rules) {
    rules_[idx(c)] = std::move(rules);
}

bool LemmaLexicon::is_lemma(TagClass c, const std::string& word) const {
    return lemmas_[idx(c)].count(word) > 0;
}

const std::unordered_map<std::string, std::string>& LemmaLexicon::exceptions(TagClass c) const {
    return exceptions_[idx(c)];
}

const std::vector<std::pair<std::string, std::string>>& LemmaLexicon::rules(TagClass c) const {
    return rules_[idx(c)];
}

std::string lemmatize(const std::string& word, TagClass cls, const LemmaLexicon& lexicon) {
    const auto& exc = lexicon.exceptions(cls);
    if (auto it = exc.find(word); it != exc.end()) return it->second;
    if (lexicon.is_lemma(cls, word)) return word;
    for (const auto& [suffix, replacement] : lexicon.rules(cls)) {
        if (word.size() > suffix.size() &&
            word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0) {
            std::string candidate = word.substr(0, word.size() - suffix.size()) + replacement;
            if (lexicon.is_lemma(cls, candidate)) return candidate;
        }
    }
    return word;
}

}  // namespace textnet
