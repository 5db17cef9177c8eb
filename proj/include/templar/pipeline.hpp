#ifndef TEMPLAR_PIPELINE_HPP_
#define TEMPLAR_PIPELINE_HPP_

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "templar/clique.hpp"
#include "templar/equality.hpp"
#include "templar/etdm.hpp"
#include "templar/loader.hpp"
#include "templar/url.hpp"

namespace templar {

struct RunReport {
    Link key_url;
    CliqueResult clique;
    std::vector<Link> pages_analyzed;
    std::vector<SkippedPage> pages_skipped;
    std::size_t template_node_count = 0;
    std::size_t key_node_count = 0;
    std::size_t pages_loaded_total = 0;
    std::chrono::milliseconds elapsed{0};
    std::vector<std::string> warnings;
};

nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

struct RunResult {
    Template extracted;
    RunReport report;
};

// End-to-end extraction: discovers an n-page mutually linked set around the
// key page, then intersects the key page with every member. Clique members
// are already in the loader's memo, so this phase performs no extra fetches.
// Propagates the key page's LoadError; anything else degrades to the whole
// key page with a warning.
RunResult run(const Link& initial, const EqualityConfig& cfg, std::size_t n,
              PageLoader& loader, std::size_t budget = 50);

} // namespace templar

#endif
