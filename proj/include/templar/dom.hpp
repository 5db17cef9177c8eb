#ifndef TEMPLAR_DOM_HPP_
#define TEMPLAR_DOM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "templar/url.hpp"

namespace templar {

using NodeId = std::uint32_t;

enum class NodeKind { Element, Text };

struct Attr {
    std::string name;
    std::string value;
    friend bool operator==(const Attr&, const Attr&) = default;
};

struct DomNode {
    NodeId id = 0;
    NodeKind kind = NodeKind::Element;
    std::string tag;          // lowercase element name; empty iff text node
    std::vector<Attr> attrs;  // document order, `class` included
    std::string classname;    // raw value of the class attribute, "" if none
    std::string text;         // text nodes only; whitespace-normalized
    std::vector<NodeId> child_ids;
    std::optional<NodeId> parent_id;  // absent iff root
    std::size_t sibling_index = 0;

    bool is_text() const { return kind == NodeKind::Text; }
    bool is_element() const { return kind == NodeKind::Element; }
    std::size_t child_count() const { return child_ids.size(); }
    const std::string* attr(std::string_view name) const;
};

// Immutable document tree. Node ids are document pre-order (root is 0),
// assigned by TreeBuilder::finish. Safe to share across threads.
class DomTree {
public:
    DomTree() = default;

    NodeId root_id() const { return root_; }
    const DomNode& root() const { return nodes_[root_]; }
    const DomNode& node(NodeId id) const { return nodes_[id]; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<DomNode>& nodes() const { return nodes_; }
    const Link& source_url() const { return source_url_; }

    // Root-to-n node sequence; debugging helper.
    std::vector<NodeId> path(NodeId n) const;

    // Walks the whole tree and throws Error on any structural
    // inconsistency (orphans, bad sibling indexes, text nodes with tags...).
    void check_invariants() const;

private:
    friend class TreeBuilder;
    std::vector<DomNode> nodes_;
    NodeId root_ = 0;
    Link source_url_;
};

// Incremental construction in document order. Used by the HTML parser and by
// test fixtures that assemble trees directly.
class TreeBuilder {
public:
    explicit TreeBuilder(Link source_url);

    // Opens an element as a child of the innermost open element (or as a
    // top-level node) and makes it the innermost open element.
    NodeId push(std::string tag, std::vector<Attr> attrs = {});
    // Adds a childless element without opening it.
    NodeId leaf(std::string tag, std::vector<Attr> attrs = {});
    // Adds a text node (already normalized by the caller).
    NodeId text(std::string value);
    void pop();
    std::size_t open_depth() const { return open_.size(); }

    // Closes any still-open elements, wraps multiple top-level nodes in a
    // synthetic <html> element, renumbers ids to document pre-order and
    // returns the finished tree. Throws ParseError on an empty document.
    DomTree finish();

private:
    NodeId add_node(DomNode node);

    std::vector<DomNode> nodes_;
    std::vector<NodeId> open_;
    std::vector<NodeId> top_level_;
    Link source_url_;
};

// A parent-closed extraction of `keep` from `tree` as a standalone tree with
// fresh pre-order ids; to_original maps new ids back to ids in `tree`.
struct SlicedTree {
    DomTree tree;
    std::vector<NodeId> to_original;
};

// Throws ContractViolation unless keep is parent-closed and contains the root
// (or is empty, which yields an empty optional).
std::optional<SlicedTree> slice_tree(const DomTree& tree, const std::vector<NodeId>& keep);

// The subtree rooted at n, as a standalone tree.
DomTree subtree(const DomTree& tree, NodeId n);

// Structural equality: same tags, kinds, classnames, attrs, text and child
// ordering. Ignores node ids and source URLs.
bool same_structure(const DomTree& a, const DomTree& b);

} // namespace templar

#endif
