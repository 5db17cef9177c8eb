#include "templar/serialize.hpp"

#include <numeric>
#include <set>

#include "templar/errors.hpp"

namespace templar {

namespace {

bool is_void_element(std::string_view tag) {
    static const std::set<std::string_view> kVoid = {
        "area", "base", "br",     "col",  "embed", "hr",    "img",
        "input", "link", "meta", "param", "source", "track", "wbr"};
    return kVoid.count(tag) > 0;
}

void escape_text(std::string_view in, std::string& out) {
    for (char c : in) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out.push_back(c);
        }
    }
}

void escape_attr(std::string_view in, std::string& out) {
    for (char c : in) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
}

void render(const DomTree& tree, NodeId id, const std::vector<bool>& kept, std::string& out) {
    const DomNode& n = tree.node(id);
    if (n.is_text()) {
        escape_text(n.text, out);
        return;
    }
    out.push_back('<');
    out += n.tag;
    for (const Attr& a : n.attrs) {
        out.push_back(' ');
        out += a.name;
        out += "=\"";
        escape_attr(a.value, out);
        out.push_back('"');
    }
    out.push_back('>');
    bool any_child = false;
    for (NodeId c : n.child_ids) {
        if (!kept[c]) continue;
        any_child = true;
        render(tree, c, kept, out);
    }
    if (is_void_element(n.tag) && !any_child) return;
    out += "</";
    out += n.tag;
    out.push_back('>');
}

} // namespace

std::string serialize_slice(const DomTree& tree, const std::vector<NodeId>& keep) {
    if (keep.empty()) return "<!doctype html>\n<!-- empty template -->\n";

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

    std::string out = "<!doctype html>\n";
    render(tree, tree.root_id(), kept, out);
    out.push_back('\n');
    return out;
}

std::string serialize_tree(const DomTree& tree) {
    std::vector<NodeId> all(tree.size());
    std::iota(all.begin(), all.end(), 0);
    return serialize_slice(tree, all);
}

} // namespace templar
