#include "templar/pipeline.hpp"

#include <algorithm>

#include "templar/errors.hpp"

namespace templar {

namespace {

Link parse_link_or_throw(const nlohmann::json& j) {
    auto link = Link::parse(j.get<std::string>());
    if (!link) throw Error("bad URL in report JSON: " + j.get<std::string>());
    return *link;
}

} // namespace

nlohmann::json to_json(const RunReport& r) {
    nlohmann::json j;
    j["key_url"] = r.key_url.str();
    nlohmann::json members = nlohmann::json::array();
    for (const Link& m : r.clique.members) members.push_back(m.str());
    j["clique"] = {{"members", members},
                   {"complete", r.clique.complete},
                   {"pages_loaded", r.clique.pages_loaded}};
    j["pages_analyzed"] = nlohmann::json::array();
    for (const Link& p : r.pages_analyzed) j["pages_analyzed"].push_back(p.str());
    j["pages_skipped"] = nlohmann::json::array();
    for (const SkippedPage& s : r.pages_skipped)
        j["pages_skipped"].push_back({{"url", s.url.str()}, {"reason", s.reason}});
    j["template_node_count"] = r.template_node_count;
    j["key_node_count"] = r.key_node_count;
    j["pages_loaded_total"] = r.pages_loaded_total;
    j["elapsed_ms"] = r.elapsed.count();
    j["warnings"] = r.warnings;
    return j;
}

RunReport report_from_json(const nlohmann::json& j) {
    RunReport r;
    r.key_url = parse_link_or_throw(j.at("key_url"));
    for (const auto& m : j.at("clique").at("members"))
        r.clique.members.push_back(parse_link_or_throw(m));
    r.clique.complete = j.at("clique").at("complete").get<bool>();
    r.clique.pages_loaded = j.at("clique").at("pages_loaded").get<std::size_t>();
    for (const auto& p : j.at("pages_analyzed")) r.pages_analyzed.push_back(parse_link_or_throw(p));
    for (const auto& s : j.at("pages_skipped"))
        r.pages_skipped.push_back({parse_link_or_throw(s.at("url")), s.at("reason").get<std::string>()});
    r.template_node_count = j.at("template_node_count").get<std::size_t>();
    r.key_node_count = j.at("key_node_count").get<std::size_t>();
    r.pages_loaded_total = j.at("pages_loaded_total").get<std::size_t>();
    r.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<long long>());
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

RunResult run(const Link& initial, const EqualityConfig& cfg, std::size_t n,
              PageLoader& loader, std::size_t budget) {
    const auto started = std::chrono::steady_clock::now();
    const std::size_t fetches_at_start = loader.fetch_count();

    RunResult result;
    RunReport& report = result.report;
    report.key_url = initial;

    report.clique = find_n_cs(initial, n, loader, budget);
    for (const std::string& d : report.clique.diagnostics) report.warnings.push_back(d);

    LoadedPage key = loader.load(initial);  // memo hit; no extra fetch

    std::vector<std::shared_ptr<const DomTree>> pages;
    for (const Link& member : report.clique.members) {
        if (member == initial || member == key.tree->source_url()) {
            report.pages_skipped.push_back({member, "the key page itself"});
            continue;
        }
        pages.push_back(loader.load(member).tree);
    }

    result.extracted = extract_template(key.tree, pages, cfg, &report.pages_skipped);

    if (report.clique.members.empty())
        report.warnings.push_back(
            "no mutually linked pages found; the template is the whole key page");
    else if (!report.clique.complete)
        report.warnings.push_back("only " + std::to_string(report.clique.members.size()) +
                                  " mutually linked page(s) found instead of " +
                                  std::to_string(n) + "; confidence reduced");
    if (!pages.empty() && result.extracted.sources.empty())
        report.warnings.push_back("every clique page was skipped (root mismatch); the template "
                                  "is the whole key page -- consider lowering the threshold");

    report.pages_analyzed = result.extracted.sources;
    report.template_node_count = result.extracted.kept.size();
    report.key_node_count = key.tree->size();
    report.pages_loaded_total = loader.fetch_count() - fetches_at_start;
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    return result;
}

} // namespace templar
