#include "templar/harness/treegen.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace templar::harness {

namespace {

constexpr std::array<std::string_view, 18> kTags = {
    "div", "span", "p",  "ul",    "li",      "a",  "section", "article", "h1",
    "h2",  "h3",   "td", "table", "strong",  "em", "nav",     "header",  "footer"};

constexpr std::array<std::string_view, 8> kClasses = {"",    "",     "box",  "item",
                                                      "wide", "alpha", "beta", "plain"};

constexpr std::array<std::string_view, 12> kWords = {
    "amber",  "copper", "lumen", "quartz", "delta",  "harbor",
    "meadow", "pixel",  "crane", "violet", "github", "signal"};

class Gen {
public:
    Gen(std::mt19937& rng, const TreeGenOptions& opts)
        : rng_(rng), opts_(opts), builder_(*Link::parse("http://fixtures.test/")) {}

    DomTree build() {
        budget_ = 1 + pick(opts_.max_nodes - 1);
        emit_element(pick_tag({}), 0);
        return builder_.finish();
    }

    // Direct same-tag nesting (li in li, p in p) would be rearranged by the
    // parser's implied-close handling, breaking serialize/parse round trips;
    // generated trees stay inside the parser-representable space.

private:
    std::size_t pick(std::size_t n) {  // uniform 0..n
        return std::uniform_int_distribution<std::size_t>(0, n)(rng_);
    }

    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }

    std::string pick_tag(const std::set<std::string>& taken) {
        for (int attempts = 0; attempts < 32; ++attempts) {
            std::string tag(kTags[pick(kTags.size() - 1)]);
            if (!taken.count(tag)) return tag;
        }
        return "div";
    }

    std::vector<Attr> random_attrs(std::string_view tag) {
        std::vector<Attr> attrs;
        std::string cls(kClasses[pick(kClasses.size() - 1)]);
        if (!cls.empty()) attrs.push_back({"class", cls});
        if (tag == "a")
            attrs.push_back({"href", "http://fixtures.test/" +
                                         std::string(kWords[pick(kWords.size() - 1)])});
        else if (chance(0.3))
            attrs.push_back({"data-k", std::string(kWords[pick(kWords.size() - 1)])});
        return attrs;
    }

    std::string random_text() {
        std::string out(kWords[pick(kWords.size() - 1)]);
        std::size_t extra = pick(2);
        for (std::size_t i = 0; i < extra; ++i)
            out += " " + std::string(kWords[pick(kWords.size() - 1)]);
        return out;
    }

    void emit_element(const std::string& tag, std::size_t depth) {
        --budget_;
        builder_.push(tag, random_attrs(tag));
        std::set<std::string> taken{tag};  // no direct same-tag nesting
        bool text_used = false;
        bool last_was_text = false;  // adjacent text runs would merge on reparse
        std::size_t children = depth > 6 ? 0 : pick(opts_.max_children);
        for (std::size_t i = 0; i < children && budget_ > 0; ++i) {
            bool want_text = chance(0.25) && !last_was_text &&
                             (!opts_.unique_sibling_tags || !text_used);
            if (want_text) {
                --budget_;
                builder_.text(random_text());
                text_used = true;
                last_was_text = true;
                continue;
            }
            last_was_text = false;
            std::string child_tag =
                pick_tag(opts_.unique_sibling_tags ? taken : std::set<std::string>{tag});
            if (child_tag == tag || taken.count(child_tag)) break;  // pool exhausted
            if (opts_.unique_sibling_tags) taken.insert(child_tag);
            emit_element(child_tag, depth + 1);
        }
        builder_.pop();
    }

    std::mt19937& rng_;
    const TreeGenOptions& opts_;
    TreeBuilder builder_;
    std::size_t budget_ = 0;
};

class Mutator {
public:
    Mutator(const DomTree& src, std::mt19937& rng, const TreeGenOptions& opts)
        : src_(src), rng_(rng), opts_(opts), builder_(src.source_url()) {}

    DomTree build() {
        const DomNode& root = src_.root();
        builder_.push(root.tag, root.attrs);  // the root itself is never edited
        copy_children(root.id);
        builder_.pop();
        return builder_.finish();
    }

private:
    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }

    std::size_t pick(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n)(rng_);
    }

    std::string pick_word() { return std::string(kWords[pick(kWords.size() - 1)]); }

    void copy_children(NodeId src_id) {
        const DomNode& parent = src_.node(src_id);
        std::set<std::string> sibling_tags;
        for (NodeId c : parent.child_ids) sibling_tags.insert(src_.node(c).tag);

        for (NodeId c : parent.child_ids) {
            const DomNode& child = src_.node(c);
            if (chance(0.16)) continue;  // drop the whole subtree
            if (child.is_text()) {
                builder_.text(chance(0.2) ? pick_word() : child.text);
                continue;
            }
            std::vector<Attr> attrs = child.attrs;
            if (chance(0.15)) {  // reclass
                std::string cls(kClasses[pick(kClasses.size() - 1)]);
                bool found = false;
                for (Attr& a : attrs)
                    if (a.name == "class") {
                        a.value = cls;
                        found = true;
                    }
                if (!found && !cls.empty()) attrs.push_back({"class", cls});
            }
            if (chance(0.12)) {  // perturb a non-class attribute
                bool found = false;
                for (Attr& a : attrs)
                    if (a.name != "class") {
                        a.value = pick_word();
                        found = true;
                        break;
                    }
                if (!found) attrs.push_back({"data-m", pick_word()});
            }
            builder_.push(child.tag, std::move(attrs));
            copy_children(child.id);
            builder_.pop();
        }

        if (chance(0.15)) {  // insert a fresh sibling at the end
            std::string tag;
            if (opts_.unique_sibling_tags) {
                for (std::string_view t : kTags)
                    if (!sibling_tags.count(std::string(t)) && t != parent.tag) {
                        tag = std::string(t);
                        break;
                    }
            } else {
                tag = std::string(kTags[pick(kTags.size() - 1)]);
                if (tag == parent.tag) tag.clear();
            }
            if (tag.empty()) return;
            builder_.leaf(tag, chance(0.5) ? std::vector<Attr>{{"data-k", pick_word()}}
                                           : std::vector<Attr>{});
        }
    }

    const DomTree& src_;
    std::mt19937& rng_;
    const TreeGenOptions& opts_;
    TreeBuilder builder_;
};

} // namespace

DomTree random_tree(std::mt19937& rng, const TreeGenOptions& opts) {
    Gen gen(rng, opts);
    return gen.build();
}

std::pair<DomTree, DomTree> random_tree_pair(std::mt19937& rng, const TreeGenOptions& opts) {
    DomTree first = random_tree(rng, opts);
    Mutator mutator(first, rng, opts);
    DomTree second = mutator.build();
    return {std::move(first), std::move(second)};
}

} // namespace templar::harness
