#include "templar/loader.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "templar/errors.hpp"

namespace templar {

LoadedPage PageLoader::load(const Link& link) {
    auto it = memo_.find(link);
    if (it == memo_.end()) {
        ++fetches_;
        try {
            it = memo_.emplace(link, fetch(link)).first;
        } catch (const Error& e) {
            memo_.emplace(link, std::string(e.what()));
            throw LoadError(e.what());
        }
    }
    if (const auto* err = std::get_if<std::string>(&it->second)) throw LoadError(*err);
    return std::get<LoadedPage>(it->second);
}

CorpusLoader::CorpusLoader(std::filesystem::path corpus_dir, ParseOptions opts)
    : dir_(std::move(corpus_dir)), opts_(opts) {
    std::filesystem::path manifest_path = dir_ / "site.json";
    std::ifstream in(manifest_path);
    if (!in) throw LoadError("cannot open corpus manifest " + manifest_path.string());
    nlohmann::json manifest;
    try {
        in >> manifest;
    } catch (const nlohmann::json::exception& e) {
        throw LoadError("malformed corpus manifest " + manifest_path.string() + ": " + e.what());
    }
    if (!manifest.contains("pages") || !manifest["pages"].is_object())
        throw LoadError("corpus manifest " + manifest_path.string() + " has no \"pages\" object");
    for (const auto& [url, rel] : manifest["pages"].items()) {
        auto link = Link::parse(url);
        if (!link) throw LoadError("corpus manifest contains a bad URL: " + url);
        if (!rel.is_string()) throw LoadError("corpus manifest path for " + url + " is not a string");
        pages_[*link] = dir_ / rel.get<std::string>();
    }
}

LoadedPage CorpusLoader::fetch(const Link& link) {
    auto it = pages_.find(link);
    if (it == pages_.end()) throw LoadError(link.str() + " is not in the corpus manifest");
    std::ifstream in(it->second, std::ios::binary);
    if (!in) throw LoadError("cannot read " + it->second.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    LoadedPage page;
    page.tree = std::make_shared<DomTree>(parse_html(buf.str(), link, opts_));
    page.links = extract_links(*page.tree);
    return page;
}

} // namespace templar
