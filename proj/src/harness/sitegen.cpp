#include "templar/harness/sitegen.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "templar/errors.hpp"
#include "templar/html_parser.hpp"
#include "templar/serialize.hpp"

namespace templar::harness {

namespace {

constexpr std::array<std::string_view, 11> kMenuLabels = {
    "Home", "Products", "Docs",  "About", "Contact", "News",
    "Blog", "Support",  "Press", "Team",  "Legal"};

constexpr std::array<std::string_view, 16> kWords = {
    "amber",  "copper", "lumen",  "quartz", "delta",  "harbor", "meadow", "pixel",
    "crane",  "violet", "signal", "cedar",  "ember",  "fjord",  "tundra", "basalt"};

struct StoryPlan {
    std::string slug;
    std::string heading;
    std::string lead;
    std::vector<std::pair<Link, std::string>> anchors;  // links woven into the paragraph
    std::string tail;
};

struct PagePlan {
    Link url;
    std::string file;
    std::string title_name;
    bool has_subnav = false;
    std::vector<StoryPlan> stories;
};

class Generator {
public:
    Generator(const SiteSpec& spec, std::filesystem::path out_dir)
        : spec_(spec), dir_(std::move(out_dir)), rng_(spec.seed) {}

    GeneratedSite run() {
        validate();
        plan_urls();
        plan_pages();
        std::filesystem::create_directories(dir_);
        GeneratedSite site;
        site.dir = dir_;
        site.spec = spec_;
        site.key_url = key_url_;
        site.menu = menu_;
        site.sections = sections_;
        site.leaves = leaves_;
        for (const PagePlan& plan : plans_) site.pages.push_back(emit(plan));
        write_manifest(site);
        write_truth(site);
        write_golden(site);
        return site;
    }

private:
    void validate() const {
        if (spec_.page_count == 0) throw ContractViolation("page_count must be positive");
        if (spec_.menu_size == 0 || spec_.menu_size > spec_.page_count)
            throw ContractViolation("menu_size must be in [1, page_count]");
        if (spec_.section_count == 1)
            throw ContractViolation("section_count must be 0 or at least 2");
        if (spec_.section_count > 0 &&
            (spec_.menu_size == spec_.page_count ||
             1 + spec_.menu_size + spec_.section_count > spec_.page_count))
            throw ContractViolation("sections do not fit into page_count");
        if (spec_.host.empty()) throw ContractViolation("host must not be empty");
    }

    Link url_for(const std::string& file) const {
        std::string path = file == "index.html" ? "/" : "/" + file;
        auto link = Link::parse("http://" + spec_.host + path);
        if (!link) throw ContractViolation("bad host in site spec: " + spec_.host);
        return *link;
    }

    void plan_urls() {
        key_url_ = url_for("index.html");
        bool all_menu = spec_.menu_size == spec_.page_count;
        std::size_t extra_menu = all_menu ? spec_.menu_size - 1 : spec_.menu_size;
        if (all_menu) menu_.push_back(key_url_);
        for (std::size_t i = 1; i <= extra_menu; ++i)
            menu_.push_back(url_for("m" + std::to_string(i) + ".html"));
        // The key page's "Home" label is reserved; menu labels start after it
        // unless the key page is itself the first menu entry.
        for (std::size_t i = 0; i < menu_.size(); ++i)
            menu_labels_.push_back(menu_label(all_menu ? i : i + 1));
        for (std::size_t i = 1; i <= spec_.section_count; ++i)
            sections_.push_back(url_for("s" + std::to_string(i) + ".html"));
        std::size_t used = 1 + extra_menu + spec_.section_count;
        for (std::size_t i = 1; used + i <= spec_.page_count; ++i)
            leaves_.push_back(url_for("p" + std::to_string(i) + ".html"));
    }

    std::string word() { return std::string(kWords[rand_index(kWords.size())]); }

    std::size_t rand_index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
    }

    std::string sentence(std::size_t min_words, std::size_t max_words) {
        std::size_t count = min_words + rand_index(max_words - min_words + 1);
        std::string out;
        for (std::size_t i = 0; i < count; ++i) {
            if (i) out += " ";
            out += word();
        }
        return out;
    }

    std::vector<StoryPlan> plan_stories(const std::string& stem,
                                        const std::vector<Link>& embedded) {
        std::size_t count = 1 + rand_index(3);
        std::vector<StoryPlan> stories(count);
        for (std::size_t i = 0; i < count; ++i) {
            StoryPlan& s = stories[i];
            s.slug = stem + "-s" + std::to_string(i + 1);
            s.heading = sentence(2, 3);
            s.lead = sentence(4, 8);
            s.tail = sentence(3, 6);
            if (i == 0)
                for (const Link& l : embedded) s.anchors.emplace_back(l, sentence(1, 2));
        }
        return stories;
    }

    void plan_pages() {
        bool all_menu = spec_.menu_size == spec_.page_count;

        PagePlan key;
        key.url = key_url_;
        key.file = "index.html";
        key.title_name = "Home";
        std::vector<Link> key_embeds;
        for (std::size_t i = 0; i < leaves_.size() && i < 2; ++i) key_embeds.push_back(leaves_[i]);
        if (spec_.key_links_sections)
            for (const Link& s : sections_) key_embeds.push_back(s);
        key.stories = plan_stories("home", key_embeds);
        plans_.push_back(std::move(key));

        for (std::size_t i = all_menu ? 1 : 0; i < menu_.size(); ++i) {
            PagePlan p;
            p.url = menu_[i];
            p.file = "m" + std::to_string(all_menu ? i : i + 1) + ".html";
            p.title_name = menu_labels_[i];
            p.has_subnav = !sections_.empty() && i == 0;
            p.stories = plan_stories("menu" + std::to_string(i + 1), {});
            plans_.push_back(std::move(p));
        }
        for (std::size_t i = 0; i < sections_.size(); ++i) {
            PagePlan p;
            p.url = sections_[i];
            p.file = "s" + std::to_string(i + 1) + ".html";
            p.title_name = "Section " + std::to_string(i + 1);
            p.has_subnav = true;
            p.stories = plan_stories("sec" + std::to_string(i + 1), {});
            plans_.push_back(std::move(p));
        }
        for (std::size_t i = 0; i < leaves_.size(); ++i) {
            PagePlan p;
            p.url = leaves_[i];
            p.file = "p" + std::to_string(i + 1) + ".html";
            p.title_name = "Note " + std::to_string(i + 1);
            p.stories = plan_stories("leaf" + std::to_string(i + 1), {});
            plans_.push_back(std::move(p));
        }
    }

    std::string menu_label(std::size_t i) const {
        if (i < kMenuLabels.size()) return std::string(kMenuLabels[i]);
        return "Menu " + std::to_string(i + 1);
    }

    GeneratedPage emit(const PagePlan& plan) {
        std::vector<Link> hrefs;
        std::ostringstream html;
        html << "<!doctype html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
             << "<title>Acme Widgets - " << plan.title_name << "</title>\n</head>\n<body>\n"
             << "<header class=\"masthead\"><h1>Acme Widgets</h1></header>\n"
             << "<nav class=\"menu\">\n";
        for (std::size_t i = 0; i < menu_.size(); ++i) {
            html << "<a href=\"" << menu_[i].str() << "\">" << menu_labels_[i] << "</a>\n";
            hrefs.push_back(menu_[i]);
        }
        html << "</nav>\n";
        if (plan.has_subnav) {
            html << "<nav class=\"subnav\" data-group=\"sections\">\n";
            for (std::size_t i = 0; i < sections_.size(); ++i) {
                html << "<a href=\"" << sections_[i].str() << "\">Section " << i + 1
                     << "</a>\n";
                hrefs.push_back(sections_[i]);
            }
            html << "</nav>\n";
        }
        html << "<main class=\"content\">\n";
        for (const StoryPlan& s : plan.stories) {
            html << "<div class=\"story-" << s.slug << "\" data-post=\"" << s.slug << "\">\n"
                 << "<h2>" << s.heading << "</h2>\n<p>" << s.lead;
            for (const auto& [link, words] : s.anchors) {
                html << " <a href=\"" << link.str() << "\">" << words << "</a>";
                hrefs.push_back(link);
            }
            html << " " << s.tail << "</p>\n</div>\n";
        }
        html << "</main>\n<footer class=\"site-footer\">(c) Acme Widgets</footer>\n"
             << "</body>\n</html>\n";

        std::ofstream out(dir_ / plan.file, std::ios::binary);
        if (!out) throw Error("cannot write " + (dir_ / plan.file).string());
        out << html.str();
        out.close();

        GeneratedPage page;
        page.url = plan.url;
        page.file = plan.file;
        std::set<Link> seen;
        for (const Link& l : hrefs) {
            if (l == plan.url) continue;
            if (seen.insert(l).second) page.outbound.push_back(l);
        }
        DomTree tree = parse_html(html.str(), plan.url);
        page.template_ids = skeleton_ids(tree);
        return page;
    }

    void write_manifest(const GeneratedSite& site) const {
        nlohmann::json pages = nlohmann::json::object();
        for (const GeneratedPage& p : site.pages) pages[p.url.str()] = p.file;
        nlohmann::json manifest = {{"pages", pages}};
        std::ofstream out(dir_ / "site.json", std::ios::binary);
        out << manifest.dump(2) << "\n";
    }

    void write_truth(const GeneratedSite& site) const {
        nlohmann::json truth;
        truth["clique"] = nlohmann::json::array();
        for (const Link& m : site.menu) truth["clique"].push_back(m.str());
        nlohmann::json ids = nlohmann::json::object();
        for (const GeneratedPage& p : site.pages) ids[p.url.str()] = p.template_ids;
        truth["template_ids"] = ids;
        std::ofstream out(dir_ / "truth.json", std::ios::binary);
        out << truth.dump(2) << "\n";
    }

    void write_golden(const GeneratedSite& site) const {
        const GeneratedPage& key = site.pages.front();
        std::ifstream in(dir_ / key.file, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        DomTree tree = parse_html(buf.str(), key.url);
        std::ofstream out(dir_ / "template.golden.html", std::ios::binary);
        out << serialize_slice(tree, key.template_ids);
    }

    SiteSpec spec_;
    std::filesystem::path dir_;
    std::mt19937 rng_;
    Link key_url_;
    std::vector<Link> menu_;
    std::vector<std::string> menu_labels_;
    std::vector<Link> sections_;
    std::vector<Link> leaves_;
    std::vector<PagePlan> plans_;
};

} // namespace

const GeneratedPage& GeneratedSite::page(const Link& url) const {
    for (const GeneratedPage& p : pages)
        if (p.url == url) return p;
    throw ContractViolation("no generated page for " + url.str());
}

GeneratedSite generate(const SiteSpec& spec, const std::filesystem::path& out_dir) {
    Generator gen(spec, out_dir);
    return gen.run();
}

namespace {

void collect_skeleton(const DomTree& tree, NodeId id, bool excluded, std::vector<NodeId>& out) {
    const DomNode& n = tree.node(id);
    bool self_excluded = excluded;
    if (!self_excluded && n.parent_id) {
        const DomNode& parent = tree.node(*n.parent_id);
        if (parent.tag == "main" && parent.classname == "content") self_excluded = true;
        if (parent.tag == "title") self_excluded = true;
    }
    if (!self_excluded && n.tag == "nav" && n.classname == "subnav") self_excluded = true;
    if (!self_excluded) out.push_back(id);
    for (NodeId c : n.child_ids) collect_skeleton(tree, c, self_excluded, out);
}

} // namespace

std::vector<NodeId> skeleton_ids(const DomTree& page) {
    std::vector<NodeId> out;
    collect_skeleton(page, page.root_id(), false, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace templar::harness
