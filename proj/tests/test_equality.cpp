#include <doctest.h>

#include <random>

#include "templar/equality.hpp"
#include "templar/errors.hpp"
#include "templar/harness/treegen.hpp"
#include "test_util.hpp"

using namespace templar;

namespace {

DomNode elem(std::string tag, std::string cls, std::vector<Attr> attrs, std::size_t children,
             std::size_t index) {
    DomNode n;
    n.kind = NodeKind::Element;
    n.tag = std::move(tag);
    n.classname = std::move(cls);
    n.attrs = std::move(attrs);
    n.child_ids.resize(children);
    n.sibling_index = index;
    return n;
}

DomNode text(std::string value, std::size_t index) {
    DomNode n;
    n.kind = NodeKind::Text;
    n.text = std::move(value);
    n.sibling_index = index;
    return n;
}

const EqualityConfig kDefault{};

} // namespace

TEST_CASE("default config is valid and matches the documented defaults") {
    kDefault.validate();
    CHECK(kDefault.w_tag == doctest::Approx(0.40));
    CHECK(kDefault.w_class == doctest::Approx(0.20));
    CHECK(kDefault.w_attrs == doctest::Approx(0.15));
    CHECK(kDefault.w_children == doctest::Approx(0.15));
    CHECK(kDefault.w_position == doctest::Approx(0.10));
    CHECK(kDefault.threshold == doctest::Approx(0.70));
}

TEST_CASE("similarity of a node with itself is 1") {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        DomTree t = harness::random_tree(rng);
        for (const DomNode& n : t.nodes())
            CHECK(similarity(n, n, kDefault) == doctest::Approx(1.0));
    }
}

TEST_CASE("same class, attrs, child count and position but different tag scores 0.60") {
    // Hand evaluation: tag term 0, class 0.20, empty-vs-empty attrs 0.15,
    // equal child counts 0.15, equal positions 0.10.
    DomNode a = elem("div", "x", {}, 2, 0);
    DomNode b = elem("span", "x", {}, 2, 0);
    CHECK(similarity(a, b, kDefault) == doctest::Approx(0.60));
    CHECK_FALSE(nodes_equal(a, b, kDefault));
}

TEST_CASE("fully disjoint nodes score 0") {
    DomNode a = elem("table", "a", {{"data-x", "1"}}, 3, 0);
    DomNode b = elem("div", "b", {{"data-y", "2"}}, 0, 1);
    CHECK(similarity(a, b, kDefault) == doctest::Approx(0.0));
}

TEST_CASE("attribute Jaccard term gives partial credit") {
    DomNode a = elem("div", "", {{"id", "x"}, {"href", "h"}}, 0, 0);
    DomNode b = elem("div", "", {{"href", "h"}}, 0, 0);
    CHECK(attr_jaccard(a, b) == doctest::Approx(0.5));
    // 0.4 + 0.2 + 0.15*0.5 + 0.15 + 0.1
    CHECK(similarity(a, b, kDefault) == doctest::Approx(0.925));

    DomNode c = elem("div", "", {{"id", "x"}}, 0, 0);
    DomNode d = elem("div", "", {{"id", "y"}}, 0, 0);
    CHECK(attr_jaccard(c, d) == doctest::Approx(0.0));
}

TEST_CASE("class attribute stays out of the Jaccard term") {
    DomNode a = elem("div", "x", {{"class", "x"}}, 0, 0);
    DomNode b = elem("div", "y", {{"class", "y"}}, 0, 0);
    CHECK(attr_jaccard(a, b) == doctest::Approx(1.0));  // both empty without class
}

TEST_CASE("child count term degrades with the relative difference") {
    DomNode a = elem("div", "", {}, 4, 0);
    DomNode b = elem("div", "", {}, 1, 0);
    // 0.4 + 0.2 + 0.15 + 0.15 * (1 - 3/4) + 0.1
    CHECK(similarity(a, b, kDefault) == doctest::Approx(0.8875));
}

TEST_CASE("text nodes compare by exact normalized text in place of the tag term") {
    DomNode a = text("hello world", 0);
    DomNode b = text("hello world", 0);
    DomNode c = text("different", 0);
    CHECK(similarity(a, b, kDefault) == doctest::Approx(1.0));
    CHECK(similarity(a, c, kDefault) == doctest::Approx(0.60));
    CHECK(nodes_equal(a, b, kDefault));
    CHECK_FALSE(nodes_equal(a, c, kDefault));
}

TEST_CASE("text never equals an element") {
    DomNode a = text("div", 0);
    DomNode b = elem("div", "", {}, 0, 0);
    CHECK_FALSE(nodes_equal(a, b, kDefault));
    CHECK(similarity(a, b, kDefault) < 0.7);
}

TEST_CASE("tag identity is a hard gate regardless of threshold") {
    DomNode a = elem("table", "x", {{"id", "k"}}, 2, 0);
    DomNode b = elem("div", "x", {{"id", "k"}}, 2, 0);
    EqualityConfig loose = kDefault;
    loose.threshold = 0.01;
    CHECK(similarity(a, b, loose) == doctest::Approx(0.60));
    CHECK_FALSE(nodes_equal(a, b, loose));
}

TEST_CASE("same-tag nodes just below the threshold are not equal") {
    // 0.4 + 0.15 (children) + 0.1 (position) = 0.65 < 0.70
    DomNode a = elem("div", "x", {{"data-a", "1"}}, 1, 0);
    DomNode b = elem("div", "y", {{"data-b", "2"}}, 1, 0);
    CHECK(similarity(a, b, kDefault) == doctest::Approx(0.65));
    CHECK_FALSE(nodes_equal(a, b, kDefault));
    CHECK(nodes_equal(a, a, kDefault));
}

TEST_CASE("similarity is symmetric and bounded over random node pairs") {
    std::mt19937 rng(23);
    DomTree t1 = harness::random_tree(rng);
    DomTree t2 = harness::random_tree(rng);
    for (const DomNode& a : t1.nodes()) {
        for (const DomNode& b : t2.nodes()) {
            double ab = similarity(a, b, kDefault);
            double ba = similarity(b, a, kDefault);
            CHECK(ab == doctest::Approx(ba));
            CHECK(ab >= 0.0);
            CHECK(ab <= 1.0);
            if (nodes_equal(a, b, kDefault)) CHECK(a.tag == b.tag);
        }
    }
}

TEST_CASE("config validation rejects bad weights and thresholds") {
    EqualityConfig cfg;
    cfg.w_tag = 0.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = EqualityConfig{};
    cfg.threshold = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.threshold = 1.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = EqualityConfig{};
    cfg.w_class = -0.1;
    cfg.w_tag = 0.7;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    CHECK_THROWS_AS(cfg.set("w_bogus", 0.1), ConfigError);
}

TEST_CASE("config files use key=value lines with comments") {
    testutil::TempDir dir("eqcfg");
    auto path = dir.path / "weights.cfg";
    testutil::write_file(path,
                         "# custom profile\n"
                         "w_tag = 0.5\n"
                         "w_class=0.3\n"
                         "w_attrs=0.2\n"
                         "w_children=0\n"
                         "w_position=0\n"
                         "threshold=0.8  # stricter\n");
    EqualityConfig cfg = EqualityConfig::from_file(path);
    CHECK(cfg.w_tag == doctest::Approx(0.5));
    CHECK(cfg.w_class == doctest::Approx(0.3));
    CHECK(cfg.threshold == doctest::Approx(0.8));

    testutil::write_file(dir.path / "bad.cfg", "w_tag 0.5\n");
    CHECK_THROWS_AS(EqualityConfig::from_file(dir.path / "bad.cfg"), ConfigError);
    testutil::write_file(dir.path / "sum.cfg", "w_tag=0.9\n");
    CHECK_THROWS_AS(EqualityConfig::from_file(dir.path / "sum.cfg"), ConfigError);
    CHECK_THROWS_AS(EqualityConfig::from_file(dir.path / "missing.cfg"), ConfigError);
}
