#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "templar/clique.hpp"
#include "templar/errors.hpp"
#include "templar/harness/oracles.hpp"
#include "test_util.hpp"

using namespace templar;
using testutil::link;

namespace {

class StubLoader : public PageLoader {
public:
    void add(const Link& url, std::vector<Link> links) { pages_[url] = std::move(links); }
    void fail(const Link& url) { failing_.insert(url); }

protected:
    LoadedPage fetch(const Link& url) override {
        if (failing_.count(url)) throw LoadError(url.str() + ": stubbed failure");
        auto it = pages_.find(url);
        if (it == pages_.end()) throw LoadError(url.str() + ": not stubbed");
        LoadedPage page;
        TreeBuilder b(url);
        b.push("html");
        b.pop();
        page.tree = std::make_shared<DomTree>(b.finish());
        page.links = it->second;
        return page;
    }

private:
    std::map<Link, std::vector<Link>> pages_;
    std::set<Link> failing_;
};

Link url(const std::string& name) { return link("http://f.test/" + name); }

bool contains(const std::vector<Link>& v, const Link& l) {
    return std::find(v.begin(), v.end(), l) != v.end();
}

} // namespace

TEST_CASE("a planted 4-clique is found with at most key+4 loads") {
    Link key = url("");
    std::vector<Link> clique{url("p1"), url("p2"), url("p3"), url("p4")};
    Link extra = url("p5");

    StubLoader loader;
    std::vector<Link> key_links = clique;
    key_links.push_back(extra);
    loader.add(key, key_links);
    for (const Link& m : clique) loader.add(m, key_links);  // members link everything
    loader.add(extra, {});

    CliqueResult r = find_n_cs(key, 4, loader, 50);
    CHECK(r.complete);
    std::vector<Link> expected = clique;
    std::sort(expected.begin(), expected.end());
    CHECK(r.members == expected);
    CHECK(r.pages_loaded <= 5);
    CHECK(loader.fetch_count() == 5);  // the extra page is never fetched
}

TEST_CASE("a star-shaped site yields only a singleton best CS") {
    Link key = url("");
    std::vector<Link> spokes{url("p1"), url("p2"), url("p3"), url("p4")};
    StubLoader loader;
    loader.add(key, spokes);
    for (const Link& s : spokes) loader.add(s, {});

    CliqueResult r = find_n_cs(key, 4, loader, 50);
    CHECK_FALSE(r.complete);
    CHECK(r.members.size() == 1);
    CHECK(r.pages_loaded == 5);  // key + all four spokes
    CHECK(r.pages_loaded <= 1 + spokes.size());
}

TEST_CASE("early exit stops fetching once the n-CS is complete") {
    Link key = url("");
    std::vector<Link> order{url("a"), url("b"), url("c"), url("z1"), url("z2"), url("z3")};
    StubLoader loader;
    loader.add(key, order);
    std::vector<Link> triangle{order[0], order[1], order[2]};
    for (const Link& t : triangle) loader.add(t, triangle);
    for (std::size_t i = 3; i < order.size(); ++i) loader.add(order[i], {});

    CliqueResult r = find_n_cs(key, 3, loader, 50);
    CHECK(r.complete);
    CHECK(r.members.size() == 3);
    CHECK(loader.fetch_count() == 4);  // key + a + b + c, never z1..z3
}

TEST_CASE("failed link loads are skipped with diagnostics") {
    Link key = url("");
    Link dead = url("dead");
    Link a = url("a");
    Link b = url("b");
    StubLoader loader;
    loader.add(key, {dead, a, b});
    loader.fail(dead);
    loader.add(a, {b, dead});
    loader.add(b, {a});

    CliqueResult r = find_n_cs(key, 2, loader, 50);
    CHECK(r.complete);
    CHECK(r.members == std::vector<Link>{a, b});
    CHECK_FALSE(contains(r.members, dead));
    REQUIRE_FALSE(r.diagnostics.empty());
    CHECK(r.diagnostics[0].find("dead") != std::string::npos);
}

TEST_CASE("an unloadable key page is fatal") {
    StubLoader loader;
    loader.fail(url(""));
    CHECK_THROWS_AS(find_n_cs(url(""), 4, loader, 50), LoadError);
}

TEST_CASE("the budget caps fetches and is reported") {
    Link key = url("");
    std::vector<Link> many;
    for (int i = 0; i < 10; ++i) many.push_back(url("p" + std::to_string(i)));
    StubLoader loader;
    loader.add(key, many);
    for (const Link& m : many) loader.add(m, many);  // a big clique we cannot afford

    CliqueResult r = find_n_cs(key, 8, loader, 3);
    CHECK(loader.fetch_count() == 3);
    CHECK(r.pages_loaded == 3);
    CHECK_FALSE(r.complete);
    bool mentioned = false;
    for (const std::string& d : r.diagnostics)
        if (d.find("budget") != std::string::npos) mentioned = true;
    CHECK(mentioned);
}

TEST_CASE("budget of one loads only the key page") {
    Link key = url("");
    StubLoader loader;
    loader.add(key, {url("a")});
    loader.add(url("a"), {});
    CliqueResult r = find_n_cs(key, 2, loader, 1);
    CHECK(r.members.empty());
    CHECK_FALSE(r.complete);
    CHECK(r.pages_loaded == 1);
}

TEST_CASE("preconditions on n and budget") {
    StubLoader loader;
    loader.add(url(""), {});
    CHECK_THROWS_AS(find_n_cs(url(""), 1, loader, 50), ContractViolation);
    CHECK_THROWS_AS(find_n_cs(url(""), 4, loader, 0), ContractViolation);
}

TEST_CASE("repeated loads hit the memo without refetching") {
    StubLoader loader;
    loader.add(url("x"), {url("y")});
    LoadedPage first = loader.load(url("x"));
    LoadedPage second = loader.load(url("x"));
    CHECK(loader.fetch_count() == 1);
    CHECK(first.tree == second.tree);

    loader.fail(url("boom"));
    CHECK_THROWS_AS(loader.load(url("boom")), LoadError);
    CHECK_THROWS_AS(loader.load(url("boom")), LoadError);  // replayed from memo
    CHECK(loader.fetch_count() == 2);
}

TEST_CASE("with an unlimited budget the result is the true maximum mutual clique") {
    std::mt19937 rng(131);
    std::uniform_real_distribution<double> coin(0, 1);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t n = 4 + rng() % 9;  // 4..12 reachable links
        std::vector<Link> nodes;
        for (std::size_t i = 0; i < n; ++i) nodes.push_back(url("r" + std::to_string(i)));
        std::vector<std::vector<Link>> outbound(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && coin(rng) < 0.5) outbound[i].push_back(nodes[j]);

        Link key = url("");
        StubLoader loader;
        loader.add(key, nodes);
        for (std::size_t i = 0; i < n; ++i) loader.add(nodes[i], outbound[i]);

        const std::size_t want = 4;
        CliqueResult r = find_n_cs(key, want, loader, 1000);

        // Oracle: the maximum mutual clique over the fully processed graph.
        SiteGraph g;
        g.set_reachable(nodes);
        for (std::size_t i = 0; i < n; ++i) g.add_processed(nodes[i], outbound[i]);
        std::size_t truth = 0;
        for (const Link& l : nodes)
            truth = std::max(truth, harness::brute_force_cs(g, l).size());

        CHECK(r.members.size() == std::min(want, truth));
        CHECK(r.complete == (truth >= want));
        for (std::size_t i = 0; i < r.members.size(); ++i)
            for (std::size_t j = i + 1; j < r.members.size(); ++j)
                CHECK(g.mutually_connected(r.members[i], r.members[j]));
        CHECK(r.pages_loaded <= 1 + n);
    }
}
