#ifndef TEMPLAR_HTML_PARSER_HPP_
#define TEMPLAR_HTML_PARSER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "templar/dom.hpp"
#include "templar/url.hpp"

namespace templar {

struct ParseOptions {
    // Keep <script>/<style> elements (and their raw text) in the tree.
    bool keep_scripts = false;
};

// Parses HTML bytes into a DomTree rooted at the document element.
//
// Tag-soup tolerant: unclosed and stray tags never fail the parse. Comments,
// doctypes and processing instructions are dropped; <script>/<style> subtrees
// are dropped unless opts.keep_scripts. Whitespace-only text is discarded and
// remaining text is trimmed with internal whitespace collapsed. Entity
// references are decoded. href attributes of <a> elements are rewritten to
// their absolute form, resolved against base_url.
//
// Throws ParseError when the input yields no document at all.
DomTree parse_html(std::string_view bytes, const Link& base_url, const ParseOptions& opts = {});

struct LinkDiagnostics {
    std::size_t malformed = 0;
    std::size_t non_http_scheme = 0;
    std::size_t cross_domain = 0;
    std::size_t self_links = 0;
    std::size_t duplicates = 0;
};

// Deduplicated outbound links of the page, in document order of first
// occurrence. Self-links, cross-site links (different registrable domain)
// and non-http(s) schemes are excluded; exclusions are tallied in diag.
std::vector<Link> extract_links(const DomTree& tree, LinkDiagnostics* diag = nullptr);

// Trims, and collapses internal ASCII whitespace runs to single spaces.
std::string normalize_whitespace(std::string_view text);

// Decodes &name;, &#NN; and &#xHH; references; unknown names are kept as-is.
std::string decode_entities(std::string_view text);

} // namespace templar

#endif
