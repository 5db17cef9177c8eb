#include "templar/harness/oracles.hpp"

#include <algorithm>

#include "templar/errors.hpp"

namespace templar::harness {

std::vector<Link> brute_force_cs(const SiteGraph& graph, const Link& link) {
    const auto& processed = graph.processed();
    if (processed.size() > 16)
        throw ContractViolation("brute_force_cs is capped at 16 processed links");
    auto it = std::find(processed.begin(), processed.end(), link);
    if (it == processed.end())
        throw ContractViolation("brute_force_cs requires a processed link");
    const std::size_t li = static_cast<std::size_t>(it - processed.begin());
    const std::size_t n = processed.size();

    std::vector<std::size_t> best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (((mask >> li) & 1u) == 0) continue;
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) members.push_back(i);
        if (members.size() <= best.size()) continue;
        bool ok = true;
        for (std::size_t a = 0; a < members.size() && ok; ++a)
            for (std::size_t b = a + 1; b < members.size() && ok; ++b)
                if (!graph.mutually_connected(processed[members[a]], processed[members[b]]))
                    ok = false;
        if (ok) best = std::move(members);
    }

    std::vector<Link> out;
    out.reserve(best.size());
    for (std::size_t i : best) out.push_back(processed[i]);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::size_t best_matching(const std::vector<std::vector<std::size_t>>& weight, std::size_t i,
                          std::vector<bool>& used) {
    if (i == weight.size()) return 0;
    std::size_t best = best_matching(weight, i + 1, used);  // child i unmatched
    for (std::size_t j = 0; j < used.size(); ++j) {
        if (used[j] || weight[i][j] == 0) continue;
        used[j] = true;
        best = std::max(best, weight[i][j] + best_matching(weight, i + 1, used));
        used[j] = false;
    }
    return best;
}

std::size_t pair_size(const DomTree& t1, NodeId a, const DomTree& t2, NodeId b,
                      const EqualityConfig& cfg) {
    if (!nodes_equal(t1.node(a), t2.node(b), cfg)) return 0;
    const auto& k1 = t1.node(a).child_ids;
    const auto& k2 = t2.node(b).child_ids;
    std::vector<std::vector<std::size_t>> weight(k1.size(), std::vector<std::size_t>(k2.size()));
    for (std::size_t i = 0; i < k1.size(); ++i)
        for (std::size_t j = 0; j < k2.size(); ++j)
            weight[i][j] = pair_size(t1, k1[i], t2, k2[j], cfg);
    std::vector<bool> used(k2.size(), false);
    return 1 + best_matching(weight, 0, used);
}

} // namespace

std::size_t brute_force_etdm(const DomTree& t1, const DomTree& t2, const EqualityConfig& cfg) {
    if (t1.size() > 10 || t2.size() > 10)
        throw ContractViolation("brute_force_etdm is capped at 10 nodes per tree");
    if (!nodes_equal(t1.root(), t2.root(), cfg)) return 0;
    return pair_size(t1, t1.root_id(), t2, t2.root_id(), cfg);
}

} // namespace templar::harness
