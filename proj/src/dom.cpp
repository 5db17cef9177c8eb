#include "templar/dom.hpp"

#include <algorithm>

#include "templar/errors.hpp"

namespace templar {

const std::string* DomNode::attr(std::string_view name) const {
    for (const auto& a : attrs)
        if (a.name == name) return &a.value;
    return nullptr;
}

std::vector<NodeId> DomTree::path(NodeId n) const {
    std::vector<NodeId> out;
    std::optional<NodeId> cur = n;
    while (cur) {
        out.push_back(*cur);
        cur = nodes_[*cur].parent_id;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

void DomTree::check_invariants() const {
    if (nodes_.empty()) throw Error("tree has no nodes");
    if (root_ >= nodes_.size()) throw Error("root id out of range");
    std::size_t roots = 0;
    for (const auto& n : nodes_) {
        if (n.id >= nodes_.size() || &nodes_[n.id] != &n) throw Error("node id does not match arena slot");
        if (!n.parent_id) {
            ++roots;
            if (n.id != root_) throw Error("parentless node is not the root");
        } else {
            const DomNode& p = nodes_[*n.parent_id];
            if (n.sibling_index >= p.child_ids.size() ||
                p.child_ids[n.sibling_index] != n.id)
                throw Error("sibling index inconsistent with parent child list");
        }
        if (n.tag.empty() != n.is_text()) throw Error("tag must be empty exactly for text nodes");
        if (n.is_text() && !n.child_ids.empty()) throw Error("text node with children");
        for (std::size_t i = 0; i < n.child_ids.size(); ++i) {
            const DomNode& c = nodes_[n.child_ids[i]];
            if (!c.parent_id || *c.parent_id != n.id) throw Error("child does not point back to parent");
            if (c.sibling_index != i) throw Error("child sibling index mismatch");
        }
    }
    if (roots != 1) throw Error("tree must have exactly one root");

    // Reachability from root covers every node (also rules out cycles).
    std::vector<bool> seen(nodes_.size(), false);
    std::vector<NodeId> stack{root_};
    std::size_t count = 0;
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        if (seen[id]) throw Error("node reachable twice");
        seen[id] = true;
        ++count;
        for (NodeId c : nodes_[id].child_ids) stack.push_back(c);
    }
    if (count != nodes_.size()) throw Error("unreachable nodes in arena");
}

TreeBuilder::TreeBuilder(Link source_url) : source_url_(std::move(source_url)) {}

NodeId TreeBuilder::add_node(DomNode node) {
    NodeId id = static_cast<NodeId>(nodes_.size());
    node.id = id;
    if (open_.empty()) {
        node.parent_id.reset();
        node.sibling_index = top_level_.size();
        top_level_.push_back(id);
    } else {
        DomNode& parent = nodes_[open_.back()];
        node.parent_id = parent.id;
        node.sibling_index = parent.child_ids.size();
        parent.child_ids.push_back(id);
    }
    nodes_.push_back(std::move(node));
    return id;
}

NodeId TreeBuilder::push(std::string tag, std::vector<Attr> attrs) {
    NodeId id = leaf(std::move(tag), std::move(attrs));
    open_.push_back(id);
    return id;
}

NodeId TreeBuilder::leaf(std::string tag, std::vector<Attr> attrs) {
    DomNode node;
    node.kind = NodeKind::Element;
    node.tag = std::move(tag);
    node.attrs = std::move(attrs);
    if (const std::string* cls = node.attr("class")) node.classname = *cls;
    return add_node(node);
}

NodeId TreeBuilder::text(std::string value) {
    DomNode node;
    node.kind = NodeKind::Text;
    node.text = std::move(value);
    return add_node(node);
}

void TreeBuilder::pop() {
    if (open_.empty()) throw ContractViolation("pop with no open element");
    open_.pop_back();
}

DomTree TreeBuilder::finish() {
    open_.clear();
    if (top_level_.empty()) throw ParseError("document contains no nodes");

    NodeId root;
    if (top_level_.size() == 1 && nodes_[top_level_[0]].is_element()) {
        root = top_level_[0];
    } else {
        // Tag soup with several top-level nodes (or top-level text): give the
        // document a synthetic <html> root, like browsers do.
        DomNode wrapper;
        wrapper.kind = NodeKind::Element;
        wrapper.tag = "html";
        wrapper.id = static_cast<NodeId>(nodes_.size());
        wrapper.child_ids = top_level_;
        nodes_.push_back(std::move(wrapper));
        root = nodes_.back().id;
        for (std::size_t i = 0; i < top_level_.size(); ++i) {
            nodes_[top_level_[i]].parent_id = root;
            nodes_[top_level_[i]].sibling_index = i;
        }
    }

    // Renumber to document pre-order so ids are stable and root is 0.
    std::vector<NodeId> order;
    order.reserve(nodes_.size());
    std::vector<NodeId> stack{root};
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        order.push_back(id);
        const auto& kids = nodes_[id].child_ids;
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }

    std::vector<NodeId> remap(nodes_.size());
    for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<NodeId>(i);

    DomTree tree;
    tree.source_url_ = std::move(source_url_);
    tree.root_ = 0;
    tree.nodes_.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        DomNode n = std::move(nodes_[order[i]]);
        n.id = static_cast<NodeId>(i);
        if (n.parent_id) n.parent_id = remap[*n.parent_id];
        for (NodeId& c : n.child_ids) c = remap[c];
        tree.nodes_[i] = std::move(n);
    }
    nodes_.clear();
    top_level_.clear();
    return tree;
}

std::optional<SlicedTree> slice_tree(const DomTree& tree, const std::vector<NodeId>& keep) {
    if (keep.empty()) return std::nullopt;

    std::vector<bool> kept(tree.size(), false);
    for (NodeId id : keep) {
        if (id >= tree.size()) throw ContractViolation("keep contains an id outside the tree");
        kept[id] = true;
    }
    for (NodeId id : keep) {
        const DomNode& n = tree.node(id);
        if (n.parent_id && !kept[*n.parent_id])
            throw ContractViolation("keep set is not closed under parents");
    }

    SlicedTree out;
    TreeBuilder builder(tree.source_url());
    // Pre-order over kept nodes; builder renumbering preserves this order.
    struct Frame { NodeId id; bool entered; };
    std::vector<Frame> stack{{tree.root_id(), false}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.entered) {
            if (tree.node(f.id).is_element()) builder.pop();
            stack.pop_back();
            continue;
        }
        f.entered = true;
        const DomNode& n = tree.node(f.id);
        if (n.is_text()) {
            builder.text(n.text);
            out.to_original.push_back(n.id);
            stack.pop_back();
            continue;
        }
        builder.push(n.tag, n.attrs);
        out.to_original.push_back(n.id);
        for (auto it = n.child_ids.rbegin(); it != n.child_ids.rend(); ++it)
            if (kept[*it]) stack.push_back({*it, false});
    }
    out.tree = builder.finish();
    return out;
}

DomTree subtree(const DomTree& tree, NodeId n) {
    TreeBuilder builder(tree.source_url());
    struct Frame { NodeId id; bool entered; };
    std::vector<Frame> walk{{n, false}};
    while (!walk.empty()) {
        Frame& f = walk.back();
        if (f.entered) {
            if (tree.node(f.id).is_element()) builder.pop();
            walk.pop_back();
            continue;
        }
        f.entered = true;
        const DomNode& node = tree.node(f.id);
        if (node.is_text()) {
            builder.text(node.text);
            walk.pop_back();
            continue;
        }
        builder.push(node.tag, node.attrs);
        for (auto it = node.child_ids.rbegin(); it != node.child_ids.rend(); ++it)
            walk.push_back({*it, false});
    }
    return builder.finish();
}

namespace {

bool nodes_match(const DomTree& a, NodeId ai, const DomTree& b, NodeId bi) {
    const DomNode& na = a.node(ai);
    const DomNode& nb = b.node(bi);
    if (na.kind != nb.kind || na.tag != nb.tag || na.classname != nb.classname ||
        na.text != nb.text || na.attrs != nb.attrs ||
        na.child_ids.size() != nb.child_ids.size())
        return false;
    for (std::size_t i = 0; i < na.child_ids.size(); ++i)
        if (!nodes_match(a, na.child_ids[i], b, nb.child_ids[i])) return false;
    return true;
}

} // namespace

bool same_structure(const DomTree& a, const DomTree& b) {
    if (a.size() != b.size()) return false;
    return nodes_match(a, a.root_id(), b, b.root_id());
}

} // namespace templar
