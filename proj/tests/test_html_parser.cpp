#include <doctest.h>

#include <map>

#include "templar/errors.hpp"
#include "templar/html_parser.hpp"
#include "test_util.hpp"

using namespace templar;
using testutil::link;

namespace {

const Link kBase = *Link::parse("http://s.com/a");

DomTree parse(const std::string& html, const Link& base = kBase, ParseOptions opts = {}) {
    DomTree t = parse_html(html, base, opts);
    t.check_invariants();
    return t;
}

std::vector<std::string> tag_sequence(const DomTree& t) {
    std::vector<std::string> tags;
    for (const DomNode& n : t.nodes()) tags.push_back(n.is_text() ? "#text" : n.tag);
    return tags;
}

} // namespace

TEST_CASE("basic document structure") {
    DomTree t = parse("<html><body><p>hi</p></body></html>");
    REQUIRE(t.size() == 4);
    CHECK(tag_sequence(t) == std::vector<std::string>{"html", "body", "p", "#text"});
    CHECK(t.node(3).text == "hi");
    CHECK(t.root().tag == "html");
    CHECK_FALSE(t.root().parent_id.has_value());
}

TEST_CASE("nested elements become parent and child") {
    DomTree t = parse("<div><div></div></div>");
    REQUIRE(t.size() == 2);
    CHECK(t.node(0).tag == "div");
    CHECK(t.node(1).tag == "div");
    CHECK(*t.node(1).parent_id == t.root_id());
}

TEST_CASE("script, style and comments are dropped") {
    DomTree t = parse(
        "<html><head><style>.x{}</style><script>let a = '<div>';</script></head>"
        "<body><!-- note -->text</body></html>");
    for (const DomNode& n : t.nodes()) {
        CHECK(n.tag != "script");
        CHECK(n.tag != "style");
    }
    CHECK(tag_sequence(t) == std::vector<std::string>{"html", "head", "body", "#text"});
}

TEST_CASE("keep_scripts retains script elements and their raw text") {
    ParseOptions opts;
    opts.keep_scripts = true;
    DomTree t = parse("<body><script>var x = 1;</script></body>", kBase, opts);
    REQUIRE(t.size() == 3);
    CHECK(t.node(1).tag == "script");
    CHECK(t.node(2).text == "var x = 1;");
}

TEST_CASE("whitespace-only text is dropped, other text collapsed") {
    DomTree t = parse("<div>\n  <p>  a \t b\nc  </p>\n  </div>");
    REQUIRE(t.size() == 3);
    CHECK(t.node(2).text == "a b c");
}

TEST_CASE("entities are decoded in text and attributes") {
    DomTree t = parse("<p title=\"a&quot;b&amp;c\">x &lt;y&gt; &#65;&#x42; &nbsp;z &unknown; t</p>");
    CHECK(*t.node(0).attr("title") == "a\"b&c");
    CHECK(t.node(1).text == "x <y> AB \xc2\xa0z &unknown; t");
}

TEST_CASE("attribute forms: quoted, unquoted, bare, duplicate") {
    DomTree t = parse("<input type=email id='mail' required data-x=1 type=text>");
    const DomNode& n = t.node(0);
    CHECK(*n.attr("type") == "email");  // first duplicate wins
    CHECK(*n.attr("id") == "mail");
    CHECK(*n.attr("required") == "");
    CHECK(*n.attr("data-x") == "1");
    CHECK(n.attrs.size() == 4);
}

TEST_CASE("class attribute populates classname") {
    DomTree t = parse("<div class=\"a b\"><span></span></div>");
    CHECK(t.node(0).classname == "a b");
    CHECK(t.node(1).classname == "");
}

TEST_CASE("anchor hrefs are rewritten to absolute URLs") {
    DomTree t = parse("<body><a href=\"/b\">x</a><a href=\"c/d.html\">y</a>"
                      "<a href=\"mailto:z\">m</a></body>",
                      link("http://s.com/sub/page.html"));
    CHECK(*t.node(1).attr("href") == "http://s.com/b");
    CHECK(*t.node(3).attr("href") == "http://s.com/sub/c/d.html");
    CHECK(*t.node(5).attr("href") == "mailto:z");  // non-http hrefs stay as written
}

TEST_CASE("void elements take no children") {
    DomTree t = parse("<p>a<br>b<img src=\"x.png\"></p>");
    CHECK(tag_sequence(t) == std::vector<std::string>{"p", "#text", "br", "#text", "img"});
    CHECK(t.node(2).child_ids.empty());
    CHECK(*t.node(4).parent_id == 0);
}

TEST_CASE("implied close of repeated li") {
    DomTree t = parse("<ul><li>a<li>b<li>c</ul>");
    const DomNode& ul = t.node(0);
    REQUIRE(ul.child_ids.size() == 3);
    for (NodeId c : ul.child_ids) CHECK(t.node(c).tag == "li");
}

TEST_CASE("stray close tags are ignored, unclosed tags recover") {
    DomTree t = parse("<div></span><p>a</div>");
    CHECK(tag_sequence(t) == std::vector<std::string>{"div", "p", "#text"});
    DomTree t2 = parse("<div><p>a");
    CHECK(tag_sequence(t2) == std::vector<std::string>{"div", "p", "#text"});
}

TEST_CASE("multiple top-level nodes get a synthetic html root") {
    DomTree t = parse("<p>a</p><p>b</p>");
    CHECK(t.root().tag == "html");
    CHECK(t.root().child_ids.size() == 2);

    DomTree t2 = parse("just text");
    CHECK(t2.root().tag == "html");
    CHECK(t2.node(1).text == "just text");
}

TEST_CASE("self-closing syntax closes non-void elements") {
    DomTree t = parse("<div><span/><b>x</b></div>");
    CHECK(t.node(1).tag == "span");
    CHECK(t.node(1).child_ids.empty());
    CHECK(*t.node(2).parent_id == 0);
}

TEST_CASE("empty or element-free input raises ParseError") {
    CHECK_THROWS_AS(parse_html("", kBase), ParseError);
    CHECK_THROWS_AS(parse_html("   \n  ", kBase), ParseError);
    CHECK_THROWS_AS(parse_html("<!-- only a comment -->", kBase), ParseError);
    try {
        parse_html("", kBase);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("node count matches the reference-parser oracle") {
    // Frozen output of tests/oracles/count_nodes.py tests/data/realpage.html.
    std::string html = testutil::read_file(std::string(TEMPLAR_TEST_DATA_DIR) + "/realpage.html");
    DomTree t = parse(html, link("http://ledger.test/"));

    std::size_t elements = 0, texts = 0;
    std::map<std::string, std::size_t> per_tag;
    for (const DomNode& n : t.nodes()) {
        if (n.is_text()) {
            ++texts;
        } else {
            ++elements;
            ++per_tag[n.tag];
        }
    }
    CHECK(elements == 61);
    CHECK(texts == 31);
    CHECK(t.size() == 92);
    CHECK(per_tag["a"] == 16);
    CHECK(per_tag["li"] == 7);
    CHECK(per_tag["p"] == 7);
    CHECK(per_tag["div"] == 3);
    CHECK(per_tag["meta"] == 2);
    CHECK(per_tag.count("script") == 0);
    CHECK(per_tag.count("style") == 0);
}

TEST_CASE("extract_links applies dedupe, self-link, scheme and domain rules") {
    DomTree t = parse("<body><a href=\"/b\">1</a><a href=\"/b\">2</a><a href=\"/a\">3</a>"
                      "<a href=\"mailto:x\">4</a></body>");
    LinkDiagnostics diag;
    std::vector<Link> links = extract_links(t, &diag);
    REQUIRE(links.size() == 1);
    CHECK(links[0].str() == "http://s.com/b");
    CHECK(diag.duplicates == 1);
    CHECK(diag.self_links == 1);
    CHECK(diag.non_http_scheme == 1);
}

TEST_CASE("extract_links drops cross-domain links but keeps subdomains") {
    DomTree t = parse("<body><a href=\"http://other.com/x\">1</a>"
                      "<a href=\"http://news.s.com/y\">2</a></body>");
    LinkDiagnostics diag;
    std::vector<Link> links = extract_links(t, &diag);
    REQUIRE(links.size() == 1);
    CHECK(links[0].str() == "http://news.s.com/y");
    CHECK(diag.cross_domain == 1);
}

TEST_CASE("extract_links keeps document order of first occurrence") {
    DomTree t = parse("<body><a href=\"/z\">1</a><a href=\"/m\">2</a><a href=\"/z\">3</a>"
                      "<a href=\"/a1\">4</a></body>");
    std::vector<Link> links = extract_links(t);
    REQUIRE(links.size() == 3);
    CHECK(links[0].str() == "http://s.com/z");
    CHECK(links[1].str() == "http://s.com/m");
    CHECK(links[2].str() == "http://s.com/a1");
}

TEST_CASE("extract_links output is duplicate-, self- and cross-domain-free") {
    std::string html = testutil::read_file(std::string(TEMPLAR_TEST_DATA_DIR) + "/realpage.html");
    DomTree t = parse(html, link("http://ledger.test/"));
    std::vector<Link> links = extract_links(t);
    std::set<Link> seen;
    for (const Link& l : links) {
        CHECK(seen.insert(l).second);
        CHECK(l != t.source_url());
        CHECK(l.same_site(t.source_url()));
    }
    CHECK(links.size() > 5);
}
