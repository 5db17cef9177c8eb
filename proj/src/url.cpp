#include "templar/url.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <vector>

namespace templar {

namespace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Browsers strip tab/CR/LF anywhere in a URL and surrounding spaces.
std::string clean_whitespace(std::string_view raw) {
    std::size_t b = 0, e = raw.size();
    while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
    std::string out;
    out.reserve(e - b);
    for (std::size_t i = b; i < e; ++i) {
        char c = raw[i];
        if (c == '\t' || c == '\r' || c == '\n') continue;
        out.push_back(c);
    }
    return out;
}

bool is_scheme_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool is_scheme_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '+' || c == '-' || c == '.';
}

// Returns the length of "scheme:" at the start of s, 0 if none.
std::size_t scheme_prefix_len(std::string_view s) {
    if (s.empty() || !is_scheme_start(s[0])) return 0;
    std::size_t i = 1;
    while (i < s.size() && is_scheme_char(s[i])) ++i;
    if (i < s.size() && s[i] == ':') return i + 1;
    return 0;
}

std::string encode_spaces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == ' ')
            out += "%20";
        else
            out.push_back(c);
    }
    return out;
}

bool looks_like_ipv4(const std::string& host) {
    return !host.empty() &&
           host.find_first_not_of("0123456789.") == std::string::npos;
}

// Common multi-label public suffixes; enough for same-site grouping on
// mainstream hosts without shipping the full suffix list.
constexpr std::array<std::string_view, 44> kMultiLabelSuffixes = {
    "co.uk",  "org.uk", "me.uk",  "net.uk", "ac.uk",  "gov.uk", "sch.uk",
    "co.jp",  "ne.jp",  "or.jp",  "ac.jp",  "go.jp",
    "co.kr",  "or.kr",
    "com.au", "net.au", "org.au", "edu.au", "gov.au",
    "co.nz",  "net.nz", "org.nz",
    "co.in",  "net.in", "org.in",
    "co.za",  "org.za",
    "com.br", "net.br", "org.br",
    "com.cn", "net.cn", "org.cn",
    "com.mx", "com.ar", "com.tr", "com.sg", "com.hk", "com.tw", "com.my",
    "co.th",  "co.id",  "co.il",  "com.ua",
};

} // namespace

std::string remove_dot_segments(std::string_view path) {
    std::string input(path);
    std::string output;
    while (!input.empty()) {
        if (input.rfind("../", 0) == 0) {
            input.erase(0, 3);
        } else if (input.rfind("./", 0) == 0) {
            input.erase(0, 2);
        } else if (input.rfind("/./", 0) == 0) {
            input.erase(0, 2); // keep leading '/'
        } else if (input == "/.") {
            input = "/";
        } else if (input.rfind("/../", 0) == 0 || input == "/..") {
            input.erase(0, input == "/.." ? 3 : 3);
            if (input.empty()) input = "/";
            auto pos = output.find_last_of('/');
            output.erase(pos == std::string::npos ? 0 : pos);
        } else if (input == "." || input == "..") {
            input.clear();
        } else {
            std::size_t start = input[0] == '/' ? 1 : 0;
            std::size_t next = input.find('/', start);
            std::string segment =
                next == std::string::npos ? std::move(input) : input.substr(0, next);
            if (next == std::string::npos)
                input.clear();
            else
                input.erase(0, next);
            output += segment;
        }
    }
    return output;
}

std::optional<Link> Link::from_parts(std::string scheme, std::string authority,
                                     std::string path, std::string query, bool has_query) {
    scheme = to_lower(scheme);
    if (scheme != "http" && scheme != "https") return std::nullopt;

    // Drop userinfo; crawler identity does not depend on credentials.
    if (auto at = authority.find('@'); at != std::string::npos) authority.erase(0, at + 1);
    if (authority.empty()) return std::nullopt;

    std::string host;
    std::string port;
    if (authority[0] == '[') { // IPv6 literal
        auto close = authority.find(']');
        if (close == std::string::npos) return std::nullopt;
        host = to_lower(authority.substr(0, close + 1));
        std::string rest = authority.substr(close + 1);
        if (!rest.empty()) {
            if (rest[0] != ':') return std::nullopt;
            port = rest.substr(1);
        }
    } else {
        auto colon = authority.find(':');
        if (colon == std::string::npos) {
            host = to_lower(authority);
        } else {
            host = to_lower(authority.substr(0, colon));
            port = authority.substr(colon + 1);
        }
    }
    if (host.empty()) return std::nullopt;
    if (!port.empty() && port.find_first_not_of("0123456789") != std::string::npos)
        return std::nullopt;
    if ((scheme == "http" && port == "80") || (scheme == "https" && port == "443")) port.clear();

    if (path.empty()) path = "/";
    if (path[0] != '/') path.insert(path.begin(), '/');
    path = encode_spaces(remove_dot_segments(path));
    query = encode_spaces(query);

    Link link;
    link.scheme_ = std::move(scheme);
    link.host_ = std::move(host);
    link.port_ = std::move(port);
    link.path_ = std::move(path);
    link.query_ = std::move(query);
    link.has_query_ = has_query;
    link.canonical_ = link.scheme_ + "://" + link.host_;
    if (!link.port_.empty()) link.canonical_ += ":" + link.port_;
    link.canonical_ += link.path_;
    if (link.has_query_) link.canonical_ += "?" + link.query_;
    return link;
}

std::optional<Link> Link::parse(std::string_view absolute) {
    std::string url = clean_whitespace(absolute);
    std::size_t sp = scheme_prefix_len(url);
    if (sp == 0) return std::nullopt;
    std::string scheme = url.substr(0, sp - 1);
    std::string rest = url.substr(sp);
    if (rest.rfind("//", 0) != 0) return std::nullopt;
    rest.erase(0, 2);

    // Fragment first, then query, then the authority/path split.
    if (auto hash = rest.find('#'); hash != std::string::npos) rest.erase(hash);
    std::string query;
    bool has_query = false;
    if (auto q = rest.find('?'); q != std::string::npos) {
        query = rest.substr(q + 1);
        rest.erase(q);
        has_query = true;
    }
    auto slash = rest.find('/');
    std::string authority = slash == std::string::npos ? rest : rest.substr(0, slash);
    std::string path = slash == std::string::npos ? "" : rest.substr(slash);
    return from_parts(std::move(scheme), std::move(authority), std::move(path),
                      std::move(query), has_query);
}

Resolved Link::resolve(const Link& base, std::string_view href) {
    std::string ref = clean_whitespace(href);
    if (ref.empty() || ref[0] == '#') {
        // Same-document reference.
        return {base, HrefStatus::Ok};
    }

    if (std::size_t sp = scheme_prefix_len(ref); sp > 0) {
        std::string scheme = to_lower(ref.substr(0, sp - 1));
        if (scheme != "http" && scheme != "https") return {std::nullopt, HrefStatus::NonHttpScheme};
        auto link = parse(ref);
        if (!link) return {std::nullopt, HrefStatus::Malformed};
        return {std::move(link), HrefStatus::Ok};
    }

    if (ref.rfind("//", 0) == 0) {
        auto link = parse(base.scheme() + ":" + ref);
        if (!link) return {std::nullopt, HrefStatus::Malformed};
        return {std::move(link), HrefStatus::Ok};
    }

    // Split ref into path and query, drop any fragment.
    if (auto hash = ref.find('#'); hash != std::string::npos) ref.erase(hash);
    std::string ref_query;
    bool ref_has_query = false;
    if (auto q = ref.find('?'); q != std::string::npos) {
        ref_query = ref.substr(q + 1);
        ref.erase(q);
        ref_has_query = true;
    }

    std::string authority = base.host_;
    if (!base.port_.empty()) authority += ":" + base.port_;

    std::string merged;
    if (ref.empty()) {
        merged = base.path_;
        if (!ref_has_query) {
            ref_query = base.query_;
            ref_has_query = base.has_query_;
        }
    } else if (ref[0] == '/') {
        merged = ref;
    } else {
        auto last = base.path_.find_last_of('/');
        merged = base.path_.substr(0, last + 1) + ref;
    }

    auto link = from_parts(base.scheme_, std::move(authority), std::move(merged),
                           std::move(ref_query), ref_has_query);
    if (!link) return {std::nullopt, HrefStatus::Malformed};
    return {std::move(link), HrefStatus::Ok};
}

std::string Link::origin() const {
    std::string out = scheme_ + "://" + host_;
    if (!port_.empty()) out += ":" + port_;
    return out;
}

std::string Link::target() const {
    std::string out = path_;
    if (has_query_) out += "?" + query_;
    return out;
}

std::string Link::registrable_domain() const {
    const std::string& h = host_;
    if (h.empty() || h[0] == '[' || looks_like_ipv4(h)) return h;

    std::vector<std::size_t> dots;
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] == '.') dots.push_back(i);
    if (dots.empty()) return h;

    // Suffix made of the final two labels.
    std::string_view tail2 =
        dots.size() >= 2 ? std::string_view(h).substr(dots[dots.size() - 2] + 1)
                         : std::string_view(h);
    bool multi = std::find(kMultiLabelSuffixes.begin(), kMultiLabelSuffixes.end(), tail2) !=
                 kMultiLabelSuffixes.end();
    std::size_t labels_wanted = multi ? 3 : 2;
    if (dots.size() + 1 <= labels_wanted) return h;
    return h.substr(dots[dots.size() - labels_wanted] + 1);
}

bool Link::same_site(const Link& other) const {
    return registrable_domain() == other.registrable_domain();
}

} // namespace templar
