#ifndef TEMPLAR_LOADER_HPP_
#define TEMPLAR_LOADER_HPP_

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "templar/dom.hpp"
#include "templar/html_parser.hpp"
#include "templar/url.hpp"

namespace templar {

struct LoadedPage {
    std::shared_ptr<const DomTree> tree;
    std::vector<Link> links;  // filtered outbound links, document order
};

// Fetches pages and parses them. Loads are memoized per instance: the same
// link (success or failure) is fetched at most once; repeated loads replay
// the cached outcome without counting as a new fetch.
class PageLoader {
public:
    virtual ~PageLoader() = default;

    // Throws LoadError when the page cannot be fetched.
    LoadedPage load(const Link& link);

    // Unique fetch attempts so far, including failed ones.
    std::size_t fetch_count() const { return fetches_; }

protected:
    virtual LoadedPage fetch(const Link& link) = 0;

private:
    std::map<Link, std::variant<LoadedPage, std::string>> memo_;
    std::size_t fetches_ = 0;
};

// Resolves links through a site.json manifest to local HTML files:
//   { "pages": { "<absolute url>": "<relative file path>", ... } }
class CorpusLoader : public PageLoader {
public:
    // Throws LoadError when the manifest is missing or malformed.
    explicit CorpusLoader(std::filesystem::path corpus_dir, ParseOptions opts = {});

    const std::map<Link, std::filesystem::path>& manifest() const { return pages_; }

protected:
    LoadedPage fetch(const Link& link) override;

private:
    std::filesystem::path dir_;
    std::map<Link, std::filesystem::path> pages_;
    ParseOptions opts_;
};

struct HttpOptions {
    std::chrono::seconds timeout{10};
    int max_redirects = 5;
    std::string user_agent = "templar/0.1 (template extraction bot)";
    ParseOptions parse;
};

// Live loader. Follows redirects itself so the parsed page carries the final
// URL, and links are filtered against the final URL's site.
class HttpLoader : public PageLoader {
public:
    explicit HttpLoader(HttpOptions opts = {});

protected:
    LoadedPage fetch(const Link& link) override;

private:
    HttpOptions opts_;
};

} // namespace templar

#endif
