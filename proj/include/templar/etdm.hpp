#ifndef TEMPLAR_ETDM_HPP_
#define TEMPLAR_ETDM_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "templar/dom.hpp"
#include "templar/equality.hpp"
#include "templar/url.hpp"

namespace templar {

// A node correspondence between two trees: injective in both directions,
// top-down closed (a mapped non-root pair implies its parents are mapped)
// and equal (every pair passes nodes_equal under the active config).
struct Mapping {
    // (id in t1, id in t2), sorted by the t1 id.
    std::vector<std::pair<NodeId, NodeId>> pairs;

    bool maps_first(NodeId t1_id) const;
    // t2 counterpart of a t1 node, or nullopt.
    std::optional<NodeId> image_of(NodeId t1_id) const;
};

// The slice of the key page shared by all analyzed pages.
struct Template {
    std::shared_ptr<const DomTree> key_tree;
    std::vector<NodeId> kept;    // sorted, parent-closed, contains the root when non-empty
    std::vector<Link> sources;   // pages the template was refined against

    bool keeps(NodeId id) const;
};

struct SkippedPage {
    Link url;
    std::string reason;
};

// Greedy equal top-down mapping: the root pair plus, at each matched pair,
// an order-respecting matching of children (each t1 child, in document
// order, takes the highest-similarity unused t2 child that passes
// nodes_equal; ties go to the smallest t2 sibling index), recursing into
// every matched pair. Throws ContractViolation when the roots themselves
// are not equal under cfg.
Mapping compute_etdm(const DomTree& t1, const DomTree& t2, const EqualityConfig& cfg);

// The whole key page as a template (the starting point of extraction).
Template whole_page_template(std::shared_ptr<const DomTree> key_tree);

// One refinement step: intersects the template with `page`. When the
// template root and the page root are not equal under cfg the template is
// returned unchanged and skip_reason (if given) says why. The kept set
// never grows.
Template refine(const Template& current, const DomTree& page, const EqualityConfig& cfg,
                std::string* skip_reason = nullptr);

// Folds refine over the pages in order, starting from the whole key page.
// Root-mismatched pages are recorded in `skipped` (when given) and do not
// affect the result.
Template extract_template(std::shared_ptr<const DomTree> key_tree,
                          const std::vector<std::shared_ptr<const DomTree>>& pages,
                          const EqualityConfig& cfg,
                          std::vector<SkippedPage>* skipped = nullptr);

} // namespace templar

#endif
