// textnet: build word co-occurrence networks from text and measure them.
//
// Subcommands: preprocess, build, metrics, keywords, features. Each reads
// one or more *.txt files (directories are recursed), runs the
// tokenize/stopword/tag/lemmatize pipeline, and writes per-document
// outputs to --out (or stdout when --out is not given).

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "textnet/apps.hpp"
#include "textnet/graph_io.hpp"
#include "textnet/metrics.hpp"
#include "textnet/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunConfig {
    std::vector<std::string> inputs;
    textnet::PipelineConfig pipeline;
    textnet::PageRankParams pr;
    std::string stoplist_path;
    std::string lexicon_dir;
    bool pretagged = false;
    std::string format = "edgelist";
    std::string out_dir;
    std::size_t top_k = 10;
    std::string measure = "degree";
};

struct Document {
    std::string id;    // path relative to its input root
    fs::path path;
};

std::vector<Document> ingest_corpus(const std::vector<std::string>& paths) {
    std::vector<Document> docs;
    for (const auto& p : paths) {
        fs::path root(p);
        if (!fs::exists(root)) throw textnet::Error("input path does not exist: " + p);
        if (fs::is_directory(root)) {
            for (const auto& entry : fs::recursive_directory_iterator(root)) {
                if (entry.is_regular_file() && entry.path().extension() == ".txt")
                    docs.push_back({fs::relative(entry.path(), root).generic_string(),
                                    entry.path()});
            }
        } else {
            docs.push_back({root.filename().generic_string(), root});
        }
    }
    std::sort(docs.begin(), docs.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });
    return docs;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw textnet::Error("cannot read file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string basename_no_ext(const std::string& id) {
    return fs::path(id).stem().string();
}

// Writes to <out_dir>/<name> or stdout when no out dir is configured.
void emit(const RunConfig& cfg, const std::string& name, const std::string& content) {
    if (cfg.out_dir.empty()) {
        std::cout << content;
        return;
    }
    fs::create_directories(cfg.out_dir);
    fs::path target = fs::path(cfg.out_dir) / name;
    std::ofstream out(target, std::ios::binary);
    if (!out || !(out << content)) throw textnet::Error("cannot write: " + target.string());
}

json config_echo(const RunConfig& cfg) {
    return json{
        {"window", cfg.pipeline.window_size},
        {"lowercase", cfg.pipeline.lowercase},
        {"remove_stopwords", cfg.pipeline.remove_stopwords},
        {"lemmatize", cfg.pipeline.lemmatize},
        {"keep_alphabetic_only", cfg.pipeline.keep_alphabetic_only},
        {"pretagged", cfg.pretagged},
        {"damping", cfg.pr.damping},
    };
}

struct ProcessedDoc {
    std::vector<std::string> lemmas;
    std::size_t tokens_raw = 0;
    std::size_t tokens_filtered = 0;
};

ProcessedDoc run_pipeline(const RunConfig& cfg, const std::string& text,
                          const textnet::StopList& stoplist,
                          const textnet::LemmaLexicon& lexicon) {
    ProcessedDoc out;
    if (cfg.pretagged) {
        auto tagged = textnet::parse_pretagged(text, cfg.pipeline.lowercase);
        out.tokens_raw = tagged.size();
        out.lemmas = textnet::preprocess_tagged(tagged, cfg.pipeline, stoplist, lexicon);
    } else {
        out.tokens_raw = textnet::tokenize(text, cfg.pipeline).size();
        out.lemmas = textnet::preprocess(text, cfg.pipeline, stoplist, lexicon);
    }
    out.tokens_filtered = out.lemmas.size();
    return out;
}

json metrics_json(const RunConfig& cfg, const Document& doc, const ProcessedDoc& pd,
                  const textnet::CoocGraph& graph, const textnet::MetricsReport& report) {
    json j;
    j["document"] = doc.id;
    j["config"] = config_echo(cfg);
    j["token_count_raw"] = pd.tokens_raw;
    j["token_count_filtered"] = pd.tokens_filtered;
    j["node_count"] = report.node_count;
    j["edge_count"] = report.edge_count;
    j["degree"] = report.degree;
    j["pagerank"] = report.pagerank;
    j["betweenness"] = report.betweenness;
    (void)graph;
    return j;
}

int run_command(const std::string& cmd, const RunConfig& cfg) {
    if (cfg.pipeline.window_size > 3)
        std::cerr << "warning: window size " << cfg.pipeline.window_size
                  << " is outside the usual 1..3 range\n";

    const textnet::StopList stoplist = cfg.stoplist_path.empty()
        ? textnet::StopList::default_english()
        : textnet::StopList::from_file(cfg.stoplist_path);
    const textnet::LemmaLexicon lexicon = cfg.lexicon_dir.empty()
        ? textnet::LemmaLexicon::bundled()
        : textnet::LemmaLexicon::from_directory(cfg.lexicon_dir);

    std::vector<Document> docs = ingest_corpus(cfg.inputs);
    if (docs.empty()) throw textnet::Error("no input documents found");

    bool any_failed = false;
    for (const auto& doc : docs) {
        try {
            ProcessedDoc pd = run_pipeline(cfg, read_file(doc.path), stoplist, lexicon);
            const std::string base = basename_no_ext(doc.id);

            if (cmd == "preprocess") {
                std::string outtext;
                for (const auto& lemma : pd.lemmas) outtext += lemma + '\n';
                emit(cfg, base + ".lemmas.txt", outtext);
                continue;
            }

            auto graph = textnet::build_graph(pd.lemmas, cfg.pipeline.window_size);

            if (cmd == "build") {
                if (cfg.format == "json") throw textnet::Error("build: use edgelist, graphml or dot");
                auto fmt = textnet::parse_graph_format(cfg.format);
                const char* ext = fmt == textnet::GraphFormat::Edgelist ? ".edgelist"
                                : fmt == textnet::GraphFormat::Graphml ? ".graphml"
                                                                       : ".dot";
                emit(cfg, base + ext, textnet::export_graph(graph, fmt));
                continue;
            }

            auto report = textnet::compute_report(graph, cfg.pr);
            if (cmd == "metrics") {
                emit(cfg, base + ".json", metrics_json(cfg, doc, pd, graph, report).dump(2) + "\n");
            } else if (cmd == "keywords") {
                auto kws = textnet::extract_keywords(graph, report,
                                                     textnet::parse_measure(cfg.measure),
                                                     cfg.top_k);
                if (cfg.format == "json") {
                    json j;
                    j["document"] = doc.id;
                    j["measure"] = textnet::measure_name(kws.measure);
                    j["keywords"] = json::array();
                    for (const auto& e : kws.entries)
                        j["keywords"].push_back({{"word", e.word}, {"score", e.score}});
                    emit(cfg, base + ".keywords.json", j.dump(2) + "\n");
                } else {
                    std::string outtext;
                    char buf[64];
                    for (const auto& e : kws.entries) {
                        std::snprintf(buf, sizeof buf, "%.2f", e.score);
                        outtext += e.word + '\t' + buf + '\n';
                    }
                    emit(cfg, base + ".keywords.txt", outtext);
                }
            } else if (cmd == "features") {
                auto fv = textnet::feature_vector(report);
                json j;
                j["document"] = doc.id;
                j["schema"] = fv.schema;
                j["values"] = fv.values;
                emit(cfg, base + ".features.json", j.dump(2) + "\n");
            }
        } catch (const std::exception& e) {
            std::cerr << "error: " << doc.id << ": " << e.what() << '\n';
            any_failed = true;
        }
    }
    return any_failed ? 1 : 0;
}

// Documented config-file keys (JSON object; command-line flags override).
void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw textnet::Error("cannot open config file: " + path);
    json j = json::parse(in);
    if (!j.is_object()) throw textnet::Error("config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "window") cfg.pipeline.window_size = value.get<int>();
        else if (key == "lowercase") cfg.pipeline.lowercase = value.get<bool>();
        else if (key == "remove_stopwords") cfg.pipeline.remove_stopwords = value.get<bool>();
        else if (key == "lemmatize") cfg.pipeline.lemmatize = value.get<bool>();
        else if (key == "keep_alphabetic_only") cfg.pipeline.keep_alphabetic_only = value.get<bool>();
        else if (key == "stoplist") cfg.stoplist_path = value.get<std::string>();
        else if (key == "lexicon") cfg.lexicon_dir = value.get<std::string>();
        else if (key == "pretagged") cfg.pretagged = value.get<bool>();
        else if (key == "format") cfg.format = value.get<std::string>();
        else if (key == "out") cfg.out_dir = value.get<std::string>();
        else if (key == "top") cfg.top_k = value.get<std::size_t>();
        else if (key == "measure") cfg.measure = value.get<std::string>();
        else if (key == "damping") cfg.pr.damping = value.get<double>();
        else throw textnet::Error("unknown config key: " + key);
    }
}

void add_common_options(CLI::App* sub, RunConfig& cfg, std::string& config_path) {
    sub->add_option("inputs", cfg.inputs, "Input files or directories (*.txt)")
        ->required();
    sub->add_option("--config", config_path, "JSON config file (flags override)");
    sub->add_option("-w,--window", cfg.pipeline.window_size, "Co-occurrence window size")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--keep-stopwords,!--no-stopwords", "Keep stopwords in the pipeline")
        ->each([&cfg](const std::string&) { cfg.pipeline.remove_stopwords = false; });
    sub->add_flag("--no-lemmatize", "Skip lemmatization")
        ->each([&cfg](const std::string&) { cfg.pipeline.lemmatize = false; });
    sub->add_flag("--no-lowercase", "Keep original letter case")
        ->each([&cfg](const std::string&) { cfg.pipeline.lowercase = false; });
    sub->add_flag("--keep-nonalpha", "Keep tokens without letters (numbers etc.)")
        ->each([&cfg](const std::string&) { cfg.pipeline.keep_alphabetic_only = false; });
    sub->add_option("--stoplist", cfg.stoplist_path, "Stopword file (one word per line)");
    sub->add_option("--lexicon", cfg.lexicon_dir, "Lemmatizer resource directory");
    sub->add_flag("--pretagged", cfg.pretagged, "Input is word_TAG tokens, skip the tagger");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"edgelist", "graphml", "dot", "json"}));
    sub->add_option("--top", cfg.top_k, "Number of keywords")->check(CLI::PositiveNumber);
    sub->add_option("--measure", cfg.measure, "Ranking measure")
        ->check(CLI::IsMember({"degree", "pagerank", "betweenness"}));
    sub->add_option("--damping", cfg.pr.damping, "PageRank damping factor")
        ->check(CLI::Range(0.0, 0.9999));
    sub->add_option("-o,--out", cfg.out_dir, "Output directory (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"word co-occurrence network toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    const char* commands[] = {"preprocess", "build", "metrics", "keywords", "features"};
    const char* descriptions[] = {
        "Run the text pre-processing pipeline and print lemmas",
        "Build the co-occurrence graph and export it",
        "Compute degree, PageRank and betweenness as a JSON report",
        "Extract top-k keywords by centrality",
        "Compute a stylometric feature vector",
    };
    for (std::size_t i = 0; i < std::size(commands); ++i)
        add_common_options(app.add_subcommand(commands[i], descriptions[i]), cfg, config_path);

    // Config file values act as defaults; re-parsing lets flags override them.
    try {
        app.parse(argc, argv);
        if (!config_path.empty()) {
            RunConfig from_file;
            apply_config_file(config_path, from_file);
            from_file.inputs = cfg.inputs;
            cfg = from_file;
            CLI::App reparse{""};
            reparse.require_subcommand(1);
            std::string ignored;
            for (std::size_t i = 0; i < std::size(commands); ++i)
                add_common_options(reparse.add_subcommand(commands[i], ""), cfg, ignored);
            reparse.parse(argc, argv);
        }
        return run_command(app.get_subcommands().front()->get_name(), cfg);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
