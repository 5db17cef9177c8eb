#ifndef TEMPLAR_URL_HPP_
#define TEMPLAR_URL_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace templar {

// Why an href was rejected by Link::resolve.
enum class HrefStatus { Ok, NonHttpScheme, Malformed };

struct Resolved;

// An absolute, normalized http(s) URL. Normal form is canonical: lowercase
// scheme and host, default port elided, fragment stripped, dot segments
// resolved, empty path rendered as "/". Query strings are kept. Two links
// denote the same page iff their canonical strings are equal.
class Link {
public:
    Link() = default;

    // Parses an absolute http(s) URL; nullopt on anything else.
    static std::optional<Link> parse(std::string_view absolute);

    // Resolves an href (absolute, scheme-relative, root-relative, relative,
    // query-only or fragment-only) against a base page URL.
    static Resolved resolve(const Link& base, std::string_view href);

    const std::string& str() const { return canonical_; }
    bool empty() const { return canonical_.empty(); }

    const std::string& scheme() const { return scheme_; }
    const std::string& host() const { return host_; }
    const std::string& port() const { return port_; }  // empty when default
    const std::string& path() const { return path_; }

    // "scheme://host[:port]" — the http client endpoint.
    std::string origin() const;
    // "path[?query]" — the request target.
    std::string target() const;

    // Best-effort public-suffix-aware site identity: "news.example.co.uk"
    // and "www.example.co.uk" both yield "example.co.uk". Uses a built-in
    // table of common multi-label suffixes rather than the full suffix list.
    std::string registrable_domain() const;
    bool same_site(const Link& other) const;

    friend bool operator==(const Link& a, const Link& b) { return a.canonical_ == b.canonical_; }
    friend std::strong_ordering operator<=>(const Link& a, const Link& b) {
        return a.canonical_ <=> b.canonical_;
    }

private:
    std::string canonical_;
    std::string scheme_;
    std::string host_;
    std::string port_;
    std::string path_;
    std::string query_;
    bool has_query_ = false;

    static std::optional<Link> from_parts(std::string scheme, std::string authority,
                                          std::string path, std::string query, bool has_query);
};

struct Resolved {
    std::optional<Link> link;
    HrefStatus status = HrefStatus::Malformed;
};

// RFC 3986 remove_dot_segments, exposed for tests.
std::string remove_dot_segments(std::string_view path);

} // namespace templar

template <>
struct std::hash<templar::Link> {
    std::size_t operator()(const templar::Link& l) const noexcept {
        return std::hash<std::string>{}(l.str());
    }
};

#endif
