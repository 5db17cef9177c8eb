#include "templar/clique.hpp"

#include <algorithm>

#include "templar/errors.hpp"

namespace templar {

void SiteGraph::set_reachable(std::vector<Link> links) {
    reachable_ = std::move(links);
    reachable_set_ = std::set<Link>(reachable_.begin(), reachable_.end());
}

bool SiteGraph::is_processed(const Link& link) const { return vertex_of_.count(link) > 0; }

bool SiteGraph::mutually_connected(const Link& a, const Link& b) const {
    return connections_.count({a, b}) > 0 && connections_.count({b, a}) > 0;
}

void SiteGraph::add_processed(const Link& link, const std::vector<Link>& outbound) {
    if (!reachable_set_.count(link))
        throw ContractViolation("processed link must be reachable: " + link.str());
    if (vertex_of_.count(link))
        throw ContractViolation("link processed twice: " + link.str());

    for (const Link& target : outbound) {
        if (target == link) continue;
        if (reachable_set_.count(target)) connections_.insert({link, target});
    }

    int v = static_cast<int>(processed_.size());
    vertex_of_[link] = v;
    processed_.push_back(link);

    // Mutual neighbours of the new vertex among already-processed links.
    std::vector<int> nbrs;
    for (int u = 0; u < v; ++u)
        if (mutually_connected(link, processed_[u])) nbrs.push_back(u);

    // Incremental maximal-clique maintenance: candidate cliques through v are
    // the maximal intersections of existing cliques with v's neighbourhood;
    // existing cliques fully inside the neighbourhood stop being maximal.
    std::vector<std::vector<int>> candidates;
    candidates.emplace_back();  // {v} alone is always a clique
    for (const auto& c : cliques_) {
        std::vector<int> inter;
        std::set_intersection(c.begin(), c.end(), nbrs.begin(), nbrs.end(),
                              std::back_inserter(inter));
        candidates.push_back(std::move(inter));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<std::vector<int>> next;
    for (const auto& c : cliques_) {
        bool inside = std::includes(nbrs.begin(), nbrs.end(), c.begin(), c.end());
        if (!inside) next.push_back(c);
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
            if (i == j) continue;
            if (candidates[i].size() < candidates[j].size() &&
                std::includes(candidates[j].begin(), candidates[j].end(),
                              candidates[i].begin(), candidates[i].end()))
                maximal = false;
        }
        if (!maximal) continue;
        std::vector<int> clique = candidates[i];
        clique.push_back(v);
        next.push_back(std::move(clique));
    }
    cliques_ = std::move(next);
}

std::vector<Link> SiteGraph::maximal_cs_with(const Link& link) const {
    auto it = vertex_of_.find(link);
    if (it == vertex_of_.end())
        throw ContractViolation("maximal_cs_with requires a processed link");
    int v = it->second;

    const std::vector<int>* best = nullptr;
    for (const auto& c : cliques_) {
        if (!std::binary_search(c.begin(), c.end(), v)) continue;
        if (!best || c.size() > best->size() || (c.size() == best->size() && c < *best))
            best = &c;
    }
    std::vector<Link> out;
    if (best)
        for (int u : *best) out.push_back(processed_[u]);
    std::sort(out.begin(), out.end());
    return out;
}

CliqueResult find_n_cs(const Link& initial, std::size_t n, PageLoader& loader,
                       std::size_t budget) {
    if (n < 2) throw ContractViolation("the requested CS size must be at least 2");
    if (budget < 1) throw ContractViolation("the load budget must be at least 1");

    CliqueResult result;
    const std::size_t fetches_at_start = loader.fetch_count();
    auto spent = [&] { return loader.fetch_count() - fetches_at_start; };

    LoadedPage key = loader.load(initial);  // fatal on failure

    SiteGraph graph;
    graph.set_reachable(key.links);

    std::vector<Link> best;
    for (const Link& link : graph.reachable()) {
        if (spent() >= budget) {
            result.diagnostics.push_back("load budget (" + std::to_string(budget) +
                                         ") exhausted; clique search stopped early");
            break;
        }
        LoadedPage page;
        try {
            page = loader.load(link);
        } catch (const LoadError& e) {
            result.diagnostics.push_back(std::string("skipped ") + link.str() + ": " + e.what());
            continue;
        }
        graph.add_processed(link, page.links);
        std::vector<Link> cs = graph.maximal_cs_with(link);
        if (cs.size() >= n) {
            result.members = std::move(cs);
            result.complete = true;
            break;
        }
        if (cs.size() > best.size()) best = std::move(cs);
    }
    if (!result.complete) result.members = std::move(best);
    result.pages_loaded = spent();
    return result;
}

} // namespace templar
