#include "templar/etdm.hpp"

#include <algorithm>

#include "templar/errors.hpp"

namespace templar {

bool Mapping::maps_first(NodeId t1_id) const { return image_of(t1_id).has_value(); }

std::optional<NodeId> Mapping::image_of(NodeId t1_id) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), t1_id,
                               [](const auto& p, NodeId id) { return p.first < id; });
    if (it == pairs.end() || it->first != t1_id) return std::nullopt;
    return it->second;
}

bool Template::keeps(NodeId id) const {
    return std::binary_search(kept.begin(), kept.end(), id);
}

Mapping compute_etdm(const DomTree& t1, const DomTree& t2, const EqualityConfig& cfg) {
    if (!nodes_equal(t1.root(), t2.root(), cfg))
        throw ContractViolation("compute_etdm requires equal roots");

    Mapping m;
    std::vector<std::pair<NodeId, NodeId>> stack{{t1.root_id(), t2.root_id()}};
    m.pairs.emplace_back(t1.root_id(), t2.root_id());
    while (!stack.empty()) {
        auto [n1, n2] = stack.back();
        stack.pop_back();
        const auto& kids1 = t1.node(n1).child_ids;
        const auto& kids2 = t2.node(n2).child_ids;
        std::vector<bool> used(kids2.size(), false);
        for (NodeId c1 : kids1) {
            const DomNode& a = t1.node(c1);
            int best = -1;
            double best_score = -1.0;
            for (std::size_t j = 0; j < kids2.size(); ++j) {
                if (used[j]) continue;
                const DomNode& b = t2.node(kids2[j]);
                if (!nodes_equal(a, b, cfg)) continue;
                double s = similarity(a, b, cfg);
                if (s > best_score) {
                    best_score = s;
                    best = static_cast<int>(j);
                }
            }
            if (best < 0) continue;
            used[best] = true;
            m.pairs.emplace_back(c1, kids2[best]);
            stack.emplace_back(c1, kids2[best]);
        }
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

Template whole_page_template(std::shared_ptr<const DomTree> key_tree) {
    Template t;
    t.kept.resize(key_tree->size());
    for (std::size_t i = 0; i < t.kept.size(); ++i) t.kept[i] = static_cast<NodeId>(i);
    t.key_tree = std::move(key_tree);
    return t;
}

Template refine(const Template& current, const DomTree& page, const EqualityConfig& cfg,
                std::string* skip_reason) {
    if (current.kept.empty()) {
        if (skip_reason) *skip_reason = "template is already empty";
        return current;
    }
    auto sliced = slice_tree(*current.key_tree, current.kept);
    if (!nodes_equal(sliced->tree.root(), page.root(), cfg)) {
        if (skip_reason)
            *skip_reason = "page root <" + page.root().tag +
                           "> is not equal to the template root under the active config";
        return current;
    }

    Mapping m = compute_etdm(sliced->tree, page, cfg);
    Template out;
    out.key_tree = current.key_tree;
    out.kept.reserve(m.pairs.size());
    for (const auto& [slice_id, page_id] : m.pairs) {
        (void)page_id;
        out.kept.push_back(sliced->to_original[slice_id]);
    }
    std::sort(out.kept.begin(), out.kept.end());
    out.sources = current.sources;
    out.sources.push_back(page.source_url());
    return out;
}

Template extract_template(std::shared_ptr<const DomTree> key_tree,
                          const std::vector<std::shared_ptr<const DomTree>>& pages,
                          const EqualityConfig& cfg, std::vector<SkippedPage>* skipped) {
    Template t = whole_page_template(std::move(key_tree));
    for (const auto& page : pages) {
        std::string reason;
        Template next = refine(t, *page, cfg, &reason);
        if (!reason.empty() && skipped) skipped->push_back({page->source_url(), reason});
        t = std::move(next);
    }
    return t;
}

} // namespace templar
