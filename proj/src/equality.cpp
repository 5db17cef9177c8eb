#include "templar/equality.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <vector>

#include "templar/errors.hpp"

namespace templar {

void EqualityConfig::validate() const {
    const double weights[] = {w_tag, w_class, w_attrs, w_children, w_position};
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw ConfigError("weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ConfigError("weights must sum to 1 (got " + std::to_string(sum) + ")");
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw ConfigError("threshold must be in (0, 1]");
}

void EqualityConfig::set(std::string_view key, double value) {
    if (key == "w_tag") w_tag = value;
    else if (key == "w_class") w_class = value;
    else if (key == "w_attrs") w_attrs = value;
    else if (key == "w_children") w_children = value;
    else if (key == "w_position") w_position = value;
    else if (key == "threshold") threshold = value;
    else throw ConfigError("unknown config key: " + std::string(key));
}

EqualityConfig EqualityConfig::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    EqualityConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
        line.erase(std::remove_if(line.begin(), line.end(), is_space), line.end());
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key=value on line " + std::to_string(lineno));
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        char* end = nullptr;
        double value = std::strtod(val.c_str(), &end);
        if (end == val.c_str() || *end != '\0')
            throw ConfigError("bad numeric value on line " + std::to_string(lineno));
        cfg.set(key, value);
    }
    cfg.validate();
    return cfg;
}

double attr_jaccard(const DomNode& a, const DomNode& b) {
    auto relevant = [](const DomNode& n) {
        std::vector<const Attr*> out;
        for (const Attr& attr : n.attrs)
            if (attr.name != "class") out.push_back(&attr);
        return out;
    };
    std::vector<const Attr*> av = relevant(a);
    std::vector<const Attr*> bv = relevant(b);
    if (av.empty() && bv.empty()) return 1.0;

    std::size_t common = 0;
    for (const Attr* x : av)
        for (const Attr* y : bv)
            if (x->name == y->name && x->value == y->value) {
                ++common;
                break;
            }
    std::size_t uni = av.size() + bv.size() - common;
    return static_cast<double>(common) / static_cast<double>(uni);
}

double similarity(const DomNode& a, const DomNode& b, const EqualityConfig& cfg) {
    bool identity;
    if (a.kind != b.kind) {
        identity = false;
    } else if (a.is_text()) {
        identity = a.text == b.text;
    } else {
        identity = a.tag == b.tag;
    }

    std::size_t ka = a.child_count();
    std::size_t kb = b.child_count();
    double span = static_cast<double>(std::max({ka, kb, std::size_t{1}}));
    double children = 1.0 - static_cast<double>(ka > kb ? ka - kb : kb - ka) / span;

    double score = 0.0;
    if (identity) score += cfg.w_tag;
    if (a.classname == b.classname) score += cfg.w_class;
    score += cfg.w_attrs * attr_jaccard(a, b);
    score += cfg.w_children * children;
    if (a.sibling_index == b.sibling_index) score += cfg.w_position;
    return score;
}

bool nodes_equal(const DomNode& a, const DomNode& b, const EqualityConfig& cfg) {
    if (a.tag != b.tag) return false;
    return similarity(a, b, cfg) >= cfg.threshold;
}

} // namespace templar
