#ifndef TEMPLAR_HARNESS_TREEGEN_HPP_
#define TEMPLAR_HARNESS_TREEGEN_HPP_

#include <random>
#include <utility>

#include "templar/dom.hpp"

namespace templar::harness {

struct TreeGenOptions {
    std::size_t max_nodes = 24;
    std::size_t max_children = 4;
    // Distinct tags within every sibling group and at most one text child
    // per group, so no two siblings ever compete for the same counterpart.
    bool unique_sibling_tags = false;
};

DomTree random_tree(std::mt19937& rng, const TreeGenOptions& opts = {});

// A structurally related pair: the second tree is a mutated copy of the
// first (subtree deletions, class/attr/text edits, sibling insertions). The
// root node's own fields are never touched, so the roots stay equal under
// the default config.
std::pair<DomTree, DomTree> random_tree_pair(std::mt19937& rng, const TreeGenOptions& opts = {});

} // namespace templar::harness

#endif
