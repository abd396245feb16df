#pragma once

// Shared helpers for the test suites: fixture loading and random model
// generation with a fixed-seed engine.

#include "mcrisk/mcrisk.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace mcrisk::testing {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string data_path(const std::string& name) { return std::string(MCRISK_DATA_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(MCRISK_GOLDEN_DIR) + "/" + name; }

inline ArchitectureModel healthcare_model() {
    auto r = dsl::parse(slurp(data_path("healthcare-portal.mcarch")));
    if (!r.ok()) throw std::runtime_error("healthcare fixture does not parse");
    return std::move(*r.model);
}

inline ArchitectureModel parse_or_throw(std::string_view src) {
    auto r = dsl::parse(src);
    if (!r.ok()) throw std::runtime_error(r.errors.front().format());
    return std::move(*r.model);
}

struct Gen {
    std::mt19937_64 rng;

    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

    template <typename T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, int(v.size()) - 1))]; }

    std::string ident(const std::string& prefix) {
        static const std::string tail = "abcdefghijklmnopqrstuvwxyz0123456789_-.";
        std::string s = prefix;
        const int n = uniform(0, 4);
        for (int i = 0; i < n; ++i) s += tail[static_cast<std::size_t>(uniform(0, int(tail.size()) - 1))];
        return s;
    }

    // Free text with characters that need escaping and some multi-byte UTF-8.
    std::string text() {
        static const std::vector<std::string> pieces = {"a", "Z", " ", "\"", "\\", "\n", "\t",
                                                        "é", "東", "#", "{", ",", ";", "0"};
        std::string s;
        const int n = uniform(1, 8);
        for (int i = 0; i < n; ++i) s += pick(pieces);
        return s;
    }
};

struct ModelShape {
    int max_jurisdictions = 4;
    int max_providers = 5;
    int max_nodes = 8;
    int max_links = 10;
};

/// Random well-formed parts: unique ids, every reference resolves.
inline ArchitectureParts random_parts(Gen& g, ModelShape shape = {}) {
    ArchitectureParts p;
    if (g.coin()) p.name = g.text();

    const int nj = g.uniform(1, shape.max_jurisdictions);
    for (int i = 0; i < nj; ++i) {
        Jurisdiction j;
        j.code = "J" + std::to_string(i) + g.ident("");
        j.display_name = g.coin() ? j.code : g.text();
        p.jurisdictions.push_back(j);
    }
    const int np = g.uniform(1, shape.max_providers);
    static const std::vector<std::string> iams = {"iam-a", "iam-b", "iam-c"};
    for (int i = 0; i < np; ++i) {
        Provider pr;
        pr.id = "p" + std::to_string(i) + g.ident("");
        pr.display_name = g.coin() ? pr.id : g.text();
        pr.jurisdiction = g.pick(p.jurisdictions).code;
        pr.iam_domain = g.coin() ? pr.id : g.pick(iams);
        p.providers.push_back(pr);
    }
    const int nn = g.uniform(1, shape.max_nodes);
    for (int i = 0; i < nn; ++i) {
        Node n;
        n.id = "n" + std::to_string(i) + g.ident("");
        n.tier = static_cast<Tier>(g.uniform(0, 3));
        n.provider = g.pick(p.providers).id;
        n.subnet = g.coin() ? Subnet::Public : Subnet::Private;
        n.virtualized = g.coin(0.7);
        n.orchestrated = g.coin(0.3);
        p.nodes.push_back(n);
    }
    const int nl = g.uniform(0, shape.max_links);
    for (int i = 0; i < nl; ++i) {
        LinkSpec l;
        l.id = "l" + std::to_string(i) + g.ident("");
        l.from = g.pick(p.nodes).id;
        l.to = g.pick(p.nodes).id;
        l.kind = static_cast<LinkKind>(g.uniform(0, 3));
        if (g.coin(0.7)) l.encryption = g.coin() ? std::string("TLS 1.3") : g.text();
        p.links.push_back(l);
    }
    p.automation_enabled = g.coin();
    std::shuffle(p.providers.begin(), p.providers.end(), g.rng);
    std::shuffle(p.nodes.begin(), p.nodes.end(), g.rng);
    return p;
}

}  // namespace mcrisk::testing

namespace mcrisk::testing {

/// Random edit of a source text: byte flips, deletions, duplications and
/// token insertions.
inline std::string mutate(Gen& g, std::string s) {
    static const std::vector<std::string> tokens = {
        "{", "}", ":", ",", ";", "\"", "#", "\n", "\r", "\\", "node", "link", "provider",
        "jurisdiction", "automation", "architecture", "tier", "web", "none", "true", "\xff",
        "\xc3", "東", "\0", "x{", "\"\\", "9"};
    const int edits = g.uniform(1, 6);
    for (int e = 0; e < edits; ++e) {
        const std::size_t pos = s.empty() ? 0 : static_cast<std::size_t>(g.uniform(0, int(s.size())));
        switch (g.uniform(0, 3)) {
            case 0:
                if (pos < s.size()) s[pos] = static_cast<char>(g.uniform(0, 255));
                break;
            case 1:
                if (pos < s.size()) s.erase(pos, static_cast<std::size_t>(g.uniform(1, 20)));
                break;
            case 2:
                if (pos < s.size()) {
                    const std::string chunk = s.substr(pos, static_cast<std::size_t>(g.uniform(1, 40)));
                    s.insert(static_cast<std::size_t>(g.uniform(0, int(s.size()))), chunk);
                }
                break;
            default: {
                const std::string& t = g.pick(tokens);
                s.insert(pos, t.empty() ? std::string(1, '\0') : t);
            }
        }
    }
    return s;
}

inline std::string random_bytes(Gen& g) {
    std::string s(static_cast<std::size_t>(g.uniform(0, 256)), '\0');
    for (auto& c : s) c = static_cast<char>(g.uniform(0, 255));
    return s;
}

/// Checks one parse of `src`; returns an empty string when every parser
/// invariant holds, otherwise a description of the violation.
inline std::string check_parse(std::string_view src) {
    dsl::ParseResult r;
    try {
        r = dsl::parse(src);
    } catch (const std::exception& e) {
        return std::string("parse threw: ") + e.what();
    }
    if (r.ok() != r.errors.empty()) return "ok() disagrees with error list";
    for (const auto& e : r.errors) {
        if (e.span.offset > src.size()) return "error span past end of input";
        if (e.span.line < 1 || e.span.column < 1) return "error span not 1-based";
        if (e.message.empty()) return "empty error message";
    }
    if (r.ok()) {
        try {
            auto again = dsl::parse(dsl::serialize(*r.model));
            if (!again.ok() || !(*again.model == *r.model)) return "accepted input does not round-trip";
        } catch (const std::exception& e) {
            return std::string("serialize threw: ") + e.what();
        }
    }
    return {};
}

}  // namespace mcrisk::testing
