#ifndef TEMPLAR_CLIQUE_HPP_
#define TEMPLAR_CLIQUE_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "templar/loader.hpp"
#include "templar/url.hpp"

namespace templar {

// Directed link graph explored around a key page: the key page's outbound
// links (reachable), the subset already fetched (processed) and the directed
// connections recorded among them. Maximal mutual cliques are maintained
// incrementally as links are processed.
class SiteGraph {
public:
    void set_reachable(std::vector<Link> links);

    // Records `link` as fetched with the given outbound links; only edges
    // toward reachable links are kept. link must itself be reachable.
    void add_processed(const Link& link, const std::vector<Link>& outbound);

    const std::vector<Link>& reachable() const { return reachable_; }
    const std::vector<Link>& processed() const { return processed_; }
    const std::set<std::pair<Link, Link>>& connections() const { return connections_; }

    bool is_processed(const Link& link) const;
    // Both (a -> b) and (b -> a) are recorded.
    bool mutually_connected(const Link& a, const Link& b) const;

    // A maximum-cardinality set of processed links containing `link` whose
    // members are pairwise mutually connected. link must be processed.
    std::vector<Link> maximal_cs_with(const Link& link) const;

private:
    std::vector<Link> reachable_;
    std::set<Link> reachable_set_;
    std::vector<Link> processed_;
    std::map<Link, int> vertex_of_;
    std::set<std::pair<Link, Link>> connections_;
    // Maximal cliques of the mutual-connection graph, as sorted vertex lists.
    std::vector<std::vector<int>> cliques_;
};

inline std::vector<Link> maximal_cs_with(const Link& link, const SiteGraph& graph) {
    return graph.maximal_cs_with(link);
}

struct CliqueResult {
    std::vector<Link> members;   // sorted; pairwise mutually linked
    bool complete = false;       // |members| == requested n
    std::size_t pages_loaded = 0;
    std::vector<std::string> diagnostics;
};

// Incremental n-complete-subdigraph discovery: loads the key page, then its
// outbound links in document order, returning as soon as n mutually linked
// pages are found; otherwise the largest mutual set seen. budget caps total
// fetch attempts (key page included). Key-page load failures are fatal;
// individual link failures are skipped with a diagnostic.
CliqueResult find_n_cs(const Link& initial, std::size_t n, PageLoader& loader,
                       std::size_t budget = 50);

} // namespace templar

#endif
