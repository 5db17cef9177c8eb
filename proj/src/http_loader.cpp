#include <httplib.h>

#include "templar/errors.hpp"
#include "templar/loader.hpp"

namespace templar {

HttpLoader::HttpLoader(HttpOptions opts) : opts_(std::move(opts)) {}

LoadedPage HttpLoader::fetch(const Link& link) {
    Link current = link;
    for (int hop = 0; hop <= opts_.max_redirects; ++hop) {
        httplib::Client client(current.origin());
        client.set_connection_timeout(opts_.timeout);
        client.set_read_timeout(opts_.timeout);
        client.set_follow_location(false);
        httplib::Headers headers = {{"User-Agent", opts_.user_agent}};

        auto res = client.Get(current.target(), headers);
        if (!res)
            throw LoadError(current.str() + ": " + httplib::to_string(res.error()));

        if (res->status >= 300 && res->status < 400) {
            std::string location = res->get_header_value("Location");
            if (location.empty())
                throw LoadError(current.str() + ": redirect without a Location header");
            auto next = Link::resolve(current, location);
            if (next.status != HrefStatus::Ok)
                throw LoadError(current.str() + ": unusable redirect target " + location);
            current = *next.link;
            continue;
        }
        if (res->status < 200 || res->status >= 300)
            throw LoadError(current.str() + ": HTTP status " + std::to_string(res->status));

        LoadedPage page;
        page.tree = std::make_shared<DomTree>(parse_html(res->body, current, opts_.parse));
        page.links = extract_links(*page.tree);
        return page;
    }
    throw LoadError(link.str() + ": more than " + std::to_string(opts_.max_redirects) +
                    " redirects");
}

} // namespace templar
