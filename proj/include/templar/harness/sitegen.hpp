#ifndef TEMPLAR_HARNESS_SITEGEN_HPP_
#define TEMPLAR_HARNESS_SITEGEN_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "templar/dom.hpp"
#include "templar/url.hpp"

namespace templar::harness {

// Shape of a synthetic site: a key page, `menu_size` mutually linked menu
// pages (every page carries the shared nav), an optional sub-group of
// `section_count` pages that mutually link each other through a sub-nav
// (hosted by the first menu page), and upward-linking leaf pages for the
// rest. When menu_size == page_count the key page itself is part of the menu
// and every page belongs to the mutual clique.
struct SiteSpec {
    std::string host = "site.test";
    std::size_t page_count = 6;
    std::size_t menu_size = 4;
    std::size_t section_count = 0;   // 0 or >= 2
    bool key_links_sections = false; // key page links the section pages directly
    std::uint32_t seed = 1;
};

struct GeneratedPage {
    Link url;
    std::string file;              // path relative to the corpus directory
    std::vector<Link> outbound;    // intra-site links in document order, deduped, no self
    std::vector<NodeId> template_ids;  // skeleton node ids in this page's parsed tree
};

struct GeneratedSite {
    std::filesystem::path dir;
    SiteSpec spec;
    Link key_url;
    std::vector<Link> menu;      // the planted mutual clique
    std::vector<Link> sections;  // the planted sub-clique (plus its host menu page)
    std::vector<Link> leaves;
    std::vector<GeneratedPage> pages;  // key page first

    const GeneratedPage& page(const Link& url) const;
};

// Writes the site into out_dir: one HTML file per page, a site.json corpus
// manifest, truth.json ({"clique": [...], "template_ids": {url: [ids]}}) and
// template.golden.html (the skeleton slice of the key page). Deterministic:
// a fixed spec yields byte-identical output.
GeneratedSite generate(const SiteSpec& spec, const std::filesystem::path& out_dir);

// The skeleton node ids of a generated page: everything except sub-nav
// subtrees, the per-page children of the content container, and the title
// text. Matches what generate() records in template_ids.
std::vector<NodeId> skeleton_ids(const DomTree& page);

} // namespace templar::harness

#endif
