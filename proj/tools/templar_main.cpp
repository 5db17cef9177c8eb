#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "templar/equality.hpp"
#include "templar/errors.hpp"
#include "templar/harness/sitegen.hpp"
#include "templar/loader.hpp"
#include "templar/pipeline.hpp"
#include "templar/serialize.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFatal = 1;     // page could not be loaded or parsed
constexpr int kBadArgs = 2;   // flag/argument problems

struct ExtractArgs {
    std::string url;
    std::string corpus;
    std::size_t cs_size = 4;
    double threshold = 0.7;
    std::string weights_file;
    std::size_t budget = 50;
    std::string out;
    std::string report;
    bool keep_scripts = false;
    unsigned timeout_s = 10;
    int max_redirects = 5;
    std::string user_agent = "templar/0.1 (template extraction bot)";
};

struct GenArgs {
    std::string out_dir;
    std::size_t pages = 6;
    std::size_t menu = 4;
    std::size_t sections = 0;
    bool key_links_sections = false;
    unsigned seed = 1;
    std::string host = "site.test";
};

int run_extract(const ExtractArgs& args, bool threshold_given) {
    if (args.cs_size < 2) {
        std::cerr << "error: --cs-size must be at least 2\n";
        return kBadArgs;
    }
    if (args.budget < 1) {
        std::cerr << "error: --budget must be at least 1\n";
        return kBadArgs;
    }

    auto url = templar::Link::parse(args.url);
    if (!url) {
        std::cerr << "error: --url must be an absolute http(s) URL: " << args.url << "\n";
        return kBadArgs;
    }

    templar::EqualityConfig cfg;
    try {
        if (!args.weights_file.empty())
            cfg = templar::EqualityConfig::from_file(args.weights_file);
        if (threshold_given) cfg.threshold = args.threshold;
        cfg.validate();
    } catch (const templar::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    }

    templar::ParseOptions parse_opts;
    parse_opts.keep_scripts = args.keep_scripts;

    std::unique_ptr<templar::PageLoader> loader;
    if (!args.corpus.empty()) {
        try {
            loader = std::make_unique<templar::CorpusLoader>(args.corpus, parse_opts);
        } catch (const templar::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kBadArgs;
        }
    } else {
        templar::HttpOptions http;
        http.timeout = std::chrono::seconds(args.timeout_s);
        http.max_redirects = args.max_redirects;
        http.user_agent = args.user_agent;
        http.parse = parse_opts;
        loader = std::make_unique<templar::HttpLoader>(http);
    }

    templar::RunResult result;
    try {
        result = templar::run(*url, cfg, args.cs_size, *loader, args.budget);
    } catch (const templar::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFatal;
    }

    for (const std::string& w : result.report.warnings) std::cerr << "warning: " << w << "\n";

    std::string html =
        templar::serialize_slice(*result.extracted.key_tree, result.extracted.kept);
    if (args.out.empty()) {
        std::cout << html;
    } else {
        std::ofstream out(args.out, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << args.out << "\n";
            return kFatal;
        }
        out << html;
    }

    if (!args.report.empty()) {
        std::ofstream out(args.report, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << args.report << "\n";
            return kFatal;
        }
        out << templar::to_json(result.report).dump(2) << "\n";
    }
    return kOk;
}

int run_gen(const GenArgs& args) {
    templar::harness::SiteSpec spec;
    spec.host = args.host;
    spec.page_count = args.pages;
    spec.menu_size = args.menu;
    spec.section_count = args.sections;
    spec.key_links_sections = args.key_links_sections;
    spec.seed = args.seed;
    try {
        templar::harness::GeneratedSite site = templar::harness::generate(spec, args.out_dir);
        std::cerr << "wrote " << site.pages.size() << " pages + site.json + truth.json to "
                  << site.dir.string() << "\n";
    } catch (const templar::ContractViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    } catch (const templar::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFatal;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extracts the shared template of a website from one of its pages"};
    app.require_subcommand(1);

    ExtractArgs ex;
    CLI::App* extract = app.add_subcommand(
        "extract", "Extract the template of a page (live URL or offline corpus)");
    extract->add_option("--url", ex.url, "Key page URL")->required();
    extract->add_option("--corpus", ex.corpus,
                        "Corpus directory with a site.json manifest (offline mode)");
    extract->add_option("--cs-size", ex.cs_size, "Mutually linked page set size to look for");
    CLI::Option* threshold_opt =
        extract->add_option("--threshold", ex.threshold, "Node equality threshold in (0,1]");
    extract->add_option("--weights", ex.weights_file, "key=value weights/threshold file");
    extract->add_option("--budget", ex.budget, "Page load budget");
    extract->add_option("--out", ex.out, "Template output file (default: stdout)");
    extract->add_option("--report", ex.report, "Write the run report as JSON");
    extract->add_flag("--keep-scripts", ex.keep_scripts, "Keep script/style elements");
    extract->add_option("--timeout", ex.timeout_s, "HTTP timeout, seconds");
    extract->add_option("--max-redirects", ex.max_redirects, "HTTP redirect limit");
    extract->add_option("--user-agent", ex.user_agent, "HTTP User-Agent header");

    GenArgs gen;
    CLI::App* gen_corpus =
        app.add_subcommand("gen-corpus", "Generate a synthetic site corpus for demos/tests");
    gen_corpus->add_option("--out-dir", gen.out_dir, "Output directory")->required();
    gen_corpus->add_option("--pages", gen.pages, "Total page count");
    gen_corpus->add_option("--menu", gen.menu, "Mutually linked menu page count");
    gen_corpus->add_option("--sections", gen.sections, "Sub-clique page count (0 or >= 2)");
    gen_corpus->add_flag("--key-links-sections", gen.key_links_sections,
                         "Key page links the section pages directly");
    gen_corpus->add_option("--seed", gen.seed, "Random seed");
    gen_corpus->add_option("--host", gen.host, "Site hostname");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    }

    if (extract->parsed()) return run_extract(ex, threshold_opt->count() > 0);
    return run_gen(gen);
}
