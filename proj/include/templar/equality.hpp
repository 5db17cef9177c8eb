#ifndef TEMPLAR_EQUALITY_HPP_
#define TEMPLAR_EQUALITY_HPP_

#include <filesystem>
#include <string>

#include "templar/dom.hpp"

namespace templar {

// Weights of the node-similarity ponderation plus the equality threshold.
// Weights must be non-negative and sum to 1 (±1e-9); 0 < threshold <= 1.
struct EqualityConfig {
    double w_tag = 0.40;
    double w_class = 0.20;
    double w_attrs = 0.15;
    double w_children = 0.15;
    double w_position = 0.10;
    double threshold = 0.70;

    // Throws ConfigError on invalid weights or threshold.
    void validate() const;

    // Throws ConfigError for unknown keys or out-of-range values.
    void set(std::string_view key, double value);

    // key=value lines ('#' comments and blank lines allowed), applied on top
    // of the defaults, then validated.
    static EqualityConfig from_file(const std::filesystem::path& path);
};

// Weighted similarity in [0,1]:
//   w_tag      * [same tag]   (text nodes: [same normalized text] instead)
//   w_class    * [same classname]
//   w_attrs    * Jaccard over (name,value) attribute pairs, `class` excluded
//   w_children * (1 - |ka-kb| / max(ka, kb, 1))
//   w_position * [same sibling index]
// Symmetric, and 1.0 when a and b are the same node.
double similarity(const DomNode& a, const DomNode& b, const EqualityConfig& cfg);

// Jaccard similarity of the non-class attribute sets; 1 when both are empty.
double attr_jaccard(const DomNode& a, const DomNode& b);

// True iff the tags are identical (a hard gate, regardless of score) and
// similarity(a, b) >= cfg.threshold.
bool nodes_equal(const DomNode& a, const DomNode& b, const EqualityConfig& cfg);

} // namespace templar

#endif
