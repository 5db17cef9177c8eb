#include "templar/html_parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <unordered_map>

#include "templar/errors.hpp"

namespace templar {

namespace {

bool is_ws(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool is_void_element(std::string_view tag) {
    static const std::set<std::string_view> kVoid = {
        "area", "base", "br",     "col",  "embed", "hr",    "img",
        "input", "link", "meta", "param", "source", "track", "wbr"};
    return kVoid.count(tag) > 0;
}

// Elements whose repeated opening implies closing the previous sibling.
bool closes_same_tag(std::string_view tag) {
    static const std::set<std::string_view> kAutoClose = {"li", "p",  "tr", "td",
                                                          "th", "dt", "dd", "option"};
    return kAutoClose.count(tag) > 0;
}

void append_utf8(std::string& out, unsigned long cp) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

const std::unordered_map<std::string, const char*>& named_entities() {
    static const std::unordered_map<std::string, const char*> kEntities = {
        {"amp", "&"},        {"lt", "<"},        {"gt", ">"},      {"quot", "\""},
        {"apos", "'"},       {"nbsp", "\xc2\xa0"}, {"copy", "\xc2\xa9"},
        {"reg", "\xc2\xae"}, {"deg", "\xc2\xb0"},  {"middot", "\xc2\xb7"},
        {"laquo", "\xc2\xab"}, {"raquo", "\xc2\xbb"}, {"plusmn", "\xc2\xb1"},
        {"sect", "\xc2\xa7"},  {"para", "\xc2\xb6"},  {"times", "\xc3\x97"},
        {"szlig", "\xc3\x9f"}, {"agrave", "\xc3\xa0"}, {"eacute", "\xc3\xa9"},
        {"egrave", "\xc3\xa8"}, {"ccedil", "\xc3\xa7"}, {"auml", "\xc3\xa4"},
        {"ouml", "\xc3\xb6"},  {"uuml", "\xc3\xbc"},  {"ndash", "\xe2\x80\x93"},
        {"mdash", "\xe2\x80\x94"}, {"lsquo", "\xe2\x80\x98"}, {"rsquo", "\xe2\x80\x99"},
        {"ldquo", "\xe2\x80\x9c"}, {"rdquo", "\xe2\x80\x9d"}, {"bull", "\xe2\x80\xa2"},
        {"hellip", "\xe2\x80\xa6"}, {"dagger", "\xe2\x80\xa0"}, {"trade", "\xe2\x84\xa2"},
        {"euro", "\xe2\x82\xac"},
    };
    return kEntities;
}

} // namespace

std::string decode_entities(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c != '&') {
            out.push_back(c);
            ++i;
            continue;
        }
        std::size_t semi = text.find(';', i + 1);
        if (semi == std::string_view::npos || semi == i + 1 || semi - i > 12) {
            out.push_back('&');
            ++i;
            continue;
        }
        std::string_view body = text.substr(i + 1, semi - i - 1);
        if (body[0] == '#') {
            std::string_view digits = body.substr(1);
            int base = 10;
            if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
                base = 16;
                digits.remove_prefix(1);
            }
            if (!digits.empty()) {
                unsigned long cp = 0;
                bool ok = true;
                for (char d : digits) {
                    int v;
                    if (d >= '0' && d <= '9') v = d - '0';
                    else if (base == 16 && d >= 'a' && d <= 'f') v = d - 'a' + 10;
                    else if (base == 16 && d >= 'A' && d <= 'F') v = d - 'A' + 10;
                    else { ok = false; break; }
                    cp = cp * base + static_cast<unsigned long>(v);
                    if (cp > 0x10FFFF) { cp = 0xFFFD; }
                }
                if (ok) {
                    append_utf8(out, cp);
                    i = semi + 1;
                    continue;
                }
            }
        } else {
            auto it = named_entities().find(std::string(body));
            if (it != named_entities().end()) {
                out += it->second;
                i = semi + 1;
                continue;
            }
        }
        out.push_back('&');
        ++i;
    }
    return out;
}

std::string normalize_whitespace(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (is_ws(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(c);
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view input, const Link& base, const ParseOptions& opts)
        : in_(input), base_(base), opts_(opts), builder_(base) {}

    DomTree run() {
        if (in_.empty()) throw ParseError("empty input at byte 0");
        while (pos_ < in_.size()) step();
        flush_text();
        try {
            return builder_.finish();
        } catch (const ParseError&) {
            throw ParseError("no elements or text found in " + std::to_string(in_.size()) +
                             " bytes of input");
        }
    }

private:
    void step() {
        char c = in_[pos_];
        if (c != '<') {
            text_ += c;
            ++pos_;
            return;
        }
        if (starts_with("<!--")) {
            skip_until("-->");
            return;
        }
        if (starts_with("<!") || starts_with("<?")) {
            skip_until(">");
            return;
        }
        if (starts_with("</")) {
            handle_close_tag();
            return;
        }
        if (pos_ + 1 < in_.size() && std::isalpha(static_cast<unsigned char>(in_[pos_ + 1]))) {
            handle_open_tag();
            return;
        }
        // Stray '<' that introduces no markup: literal text.
        text_ += c;
        ++pos_;
    }

    bool starts_with(std::string_view s) const { return in_.substr(pos_, s.size()) == s; }

    void skip_until(std::string_view terminator) {
        flush_text();
        std::size_t at = in_.find(terminator, pos_);
        pos_ = at == std::string_view::npos ? in_.size() : at + terminator.size();
    }

    void flush_text() {
        if (text_.empty()) return;
        std::string value = normalize_whitespace(decode_entities(text_));
        text_.clear();
        if (!value.empty()) builder_.text(std::move(value));
    }

    void handle_close_tag() {
        flush_text();
        pos_ += 2;
        std::string tag = read_tag_name();
        std::size_t end = in_.find('>', pos_);
        pos_ = end == std::string_view::npos ? in_.size() : end + 1;
        if (tag.empty()) return;
        // Close the innermost matching element and everything above it;
        // ignore the tag if nothing matches.
        auto it = std::find(open_tags_.rbegin(), open_tags_.rend(), tag);
        if (it == open_tags_.rend()) return;
        std::size_t keep = open_tags_.rend() - it - 1;
        while (open_tags_.size() > keep) {
            builder_.pop();
            open_tags_.pop_back();
        }
    }

    void handle_open_tag() {
        flush_text();
        ++pos_;
        std::string tag = read_tag_name();
        auto [attrs, self_closed] = read_attrs();

        if ((tag == "script" || tag == "style") && !opts_.keep_scripts) {
            if (!self_closed) skip_raw_content(tag);
            return;
        }

        if (closes_same_tag(tag) && !open_tags_.empty() && open_tags_.back() == tag) {
            builder_.pop();
            open_tags_.pop_back();
        }

        if (tag == "a") resolve_href(attrs);

        if (is_void_element(tag) || self_closed) {
            builder_.leaf(std::move(tag), std::move(attrs));
            return;
        }
        if (tag == "script" || tag == "style") {
            builder_.push(tag, std::move(attrs));
            std::string raw = capture_raw_content(tag);
            std::string value = normalize_whitespace(raw);
            if (!value.empty()) builder_.text(std::move(value));
            builder_.pop();
            return;
        }
        builder_.push(tag, std::move(attrs));
        open_tags_.push_back(std::move(tag));
    }

    std::string read_tag_name() {
        std::string name;
        while (pos_ < in_.size()) {
            char c = in_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == ':') {
                name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
                ++pos_;
            } else {
                break;
            }
        }
        return name;
    }

    std::pair<std::vector<Attr>, bool> read_attrs() {
        std::vector<Attr> attrs;
        bool self_closed = false;
        while (pos_ < in_.size()) {
            while (pos_ < in_.size() && is_ws(in_[pos_])) ++pos_;
            if (pos_ >= in_.size()) break;
            char c = in_[pos_];
            if (c == '>') {
                ++pos_;
                break;
            }
            if (c == '/') {
                ++pos_;
                if (pos_ < in_.size() && in_[pos_] == '>') {
                    ++pos_;
                    self_closed = true;
                    break;
                }
                continue;
            }
            std::string name;
            while (pos_ < in_.size() && !is_ws(in_[pos_]) && in_[pos_] != '=' &&
                   in_[pos_] != '>' && in_[pos_] != '/') {
                name.push_back(
                    static_cast<char>(std::tolower(static_cast<unsigned char>(in_[pos_]))));
                ++pos_;
            }
            while (pos_ < in_.size() && is_ws(in_[pos_])) ++pos_;
            std::string value;
            if (pos_ < in_.size() && in_[pos_] == '=') {
                ++pos_;
                while (pos_ < in_.size() && is_ws(in_[pos_])) ++pos_;
                if (pos_ < in_.size() && (in_[pos_] == '"' || in_[pos_] == '\'')) {
                    char quote = in_[pos_++];
                    std::size_t end = in_.find(quote, pos_);
                    if (end == std::string_view::npos) end = in_.size();
                    value = decode_entities(in_.substr(pos_, end - pos_));
                    pos_ = end < in_.size() ? end + 1 : in_.size();
                } else {
                    std::size_t start = pos_;
                    while (pos_ < in_.size() && !is_ws(in_[pos_]) && in_[pos_] != '>') ++pos_;
                    value = decode_entities(in_.substr(start, pos_ - start));
                }
            }
            if (!name.empty()) {
                bool duplicate = std::any_of(attrs.begin(), attrs.end(),
                                             [&](const Attr& a) { return a.name == name; });
                if (!duplicate) attrs.push_back({std::move(name), std::move(value)});
            }
        }
        return {std::move(attrs), self_closed};
    }

    // Consumes everything up to and including "</tag ...>" without parsing.
    std::string capture_raw_content(std::string_view tag) {
        std::string close = "</" + std::string(tag);
        std::string lower = ascii_lower(in_.substr(pos_));
        std::size_t at = lower.find(close);
        std::string content;
        if (at == std::string::npos) {
            content = std::string(in_.substr(pos_));
            pos_ = in_.size();
            return content;
        }
        content = std::string(in_.substr(pos_, at));
        pos_ += at;
        std::size_t end = in_.find('>', pos_);
        pos_ = end == std::string_view::npos ? in_.size() : end + 1;
        return content;
    }

    void skip_raw_content(std::string_view tag) { capture_raw_content(tag); }

    void resolve_href(std::vector<Attr>& attrs) {
        for (Attr& a : attrs) {
            if (a.name != "href") continue;
            auto resolved = Link::resolve(base_, a.value);
            if (resolved.status == HrefStatus::Ok) a.value = resolved.link->str();
            return;
        }
    }

    std::string_view in_;
    Link base_;
    ParseOptions opts_;
    TreeBuilder builder_;
    std::vector<std::string> open_tags_;
    std::string text_;
    std::size_t pos_ = 0;
};

} // namespace

DomTree parse_html(std::string_view bytes, const Link& base_url, const ParseOptions& opts) {
    Parser parser(bytes, base_url, opts);
    return parser.run();
}

std::vector<Link> extract_links(const DomTree& tree, LinkDiagnostics* diag) {
    LinkDiagnostics local;
    LinkDiagnostics& d = diag ? *diag : local;
    std::vector<Link> out;
    std::set<Link> seen;
    for (const DomNode& n : tree.nodes()) {
        if (!n.is_element() || n.tag != "a") continue;
        const std::string* href = n.attr("href");
        if (!href) continue;
        auto resolved = Link::resolve(tree.source_url(), *href);
        if (resolved.status == HrefStatus::NonHttpScheme) {
            ++d.non_http_scheme;
            continue;
        }
        if (resolved.status == HrefStatus::Malformed) {
            ++d.malformed;
            continue;
        }
        const Link& link = *resolved.link;
        if (link == tree.source_url()) {
            ++d.self_links;
            continue;
        }
        if (!link.same_site(tree.source_url())) {
            ++d.cross_domain;
            continue;
        }
        if (!seen.insert(link).second) {
            ++d.duplicates;
            continue;
        }
        out.push_back(link);
    }
    return out;
}

} // namespace templar
