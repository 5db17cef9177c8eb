#ifndef TEMPLAR_SERIALIZE_HPP_
#define TEMPLAR_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "templar/dom.hpp"

namespace templar {

// Renders exactly the kept nodes as UTF-8 HTML5, in original document order
// and nesting. keep must be closed under parents (ContractViolation
// otherwise); an empty keep yields a comment-marker document.
std::string serialize_slice(const DomTree& tree, const std::vector<NodeId>& keep);

// Whole-tree render.
std::string serialize_tree(const DomTree& tree);

} // namespace templar

#endif
