#pragma once

// Architecture model: providers, tiers, links and jurisdictions of a
// multi-cloud deployment, plus the placement lint that checks a model
// against the three-tier blueprint.

#include "mcrisk/error.hpp"
#include "mcrisk/text.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace mcrisk {

enum class Tier { Web, App, Db, Storage };
enum class Subnet { Public, Private };
enum class LinkKind { Api, Vpn, StorageIo, UserSession };

inline std::string_view to_string(Tier t) noexcept {
    switch (t) {
        case Tier::Web: return "web";
        case Tier::App: return "app";
        case Tier::Db: return "db";
        case Tier::Storage: return "storage";
    }
    return "web";
}

inline std::string_view to_string(Subnet s) noexcept {
    return s == Subnet::Public ? "public" : "private";
}

inline std::string_view to_string(LinkKind k) noexcept {
    switch (k) {
        case LinkKind::Api: return "api";
        case LinkKind::Vpn: return "vpn";
        case LinkKind::StorageIo: return "storage_io";
        case LinkKind::UserSession: return "user_session";
    }
    return "api";
}

inline std::optional<Tier> parse_tier(std::string_view s) noexcept {
    for (Tier t : {Tier::Web, Tier::App, Tier::Db, Tier::Storage}) {
        if (s == to_string(t)) return t;
    }
    return std::nullopt;
}

inline std::optional<Subnet> parse_subnet(std::string_view s) noexcept {
    if (s == "public") return Subnet::Public;
    if (s == "private") return Subnet::Private;
    return std::nullopt;
}

inline std::optional<LinkKind> parse_link_kind(std::string_view s) noexcept {
    for (LinkKind k : {LinkKind::Api, LinkKind::Vpn, LinkKind::StorageIo, LinkKind::UserSession}) {
        if (s == to_string(k)) return k;
    }
    return std::nullopt;
}

struct Jurisdiction {
    std::string code;
    std::string display_name;

    friend bool operator==(const Jurisdiction&, const Jurisdiction&) = default;
};

struct Provider {
    std::string id;
    std::string display_name;
    std::string jurisdiction;  // code of a declared Jurisdiction
    std::string iam_domain;

    friend bool operator==(const Provider&, const Provider&) = default;
};

struct Node {
    std::string id;
    Tier tier = Tier::Web;
    std::string provider;
    Subnet subnet = Subnet::Private;
    bool virtualized = true;
    bool orchestrated = false;

    friend bool operator==(const Node&, const Node&) = default;
};

/// Raw link as declared. Cross-provider/jurisdiction flags are not part of the
/// declaration; the model derives them (see ArchitectureModel::Link).
struct LinkSpec {
    std::string id;
    std::string from;
    std::string to;
    LinkKind kind = LinkKind::Api;
    std::optional<std::string> encryption;  // nullopt means "none"

    friend bool operator==(const LinkSpec&, const LinkSpec&) = default;
};

struct Link : LinkSpec {
    bool crosses_provider = false;
    bool crosses_jurisdiction = false;

    friend bool operator==(const Link&, const Link&) = default;
};

/// Unvalidated input to build_architecture.
struct ArchitectureParts {
    std::string name;
    std::vector<Jurisdiction> jurisdictions;
    std::vector<Provider> providers;
    std::vector<Node> nodes;
    std::vector<LinkSpec> links;
    bool automation_enabled = false;
};

enum class ElementKind { Model, Jurisdiction, Provider, Node, Link };

inline std::string_view to_string(ElementKind k) noexcept {
    switch (k) {
        case ElementKind::Model: return "model";
        case ElementKind::Jurisdiction: return "jurisdiction";
        case ElementKind::Provider: return "provider";
        case ElementKind::Node: return "node";
        case ElementKind::Link: return "link";
    }
    return "model";
}

/// Identity or reference problem that prevents a model from being built.
struct StructuralError {
    enum class Code { DuplicateId, DanglingRef, EmptyModel };

    Code code = Code::DanglingRef;
    ElementKind kind = ElementKind::Model;
    std::size_t index = 0;   // position of the offending element in its ArchitectureParts collection
    std::string element_id;
    std::string field;       // "id" for duplicates, the reference field otherwise
    std::string reference;   // the missing or duplicated identifier
    std::string message;
};

inline std::string_view to_string(StructuralError::Code c) noexcept {
    switch (c) {
        case StructuralError::Code::DuplicateId: return "DUP_ID";
        case StructuralError::Code::DanglingRef: return "DANGLING_REF";
        case StructuralError::Code::EmptyModel: return "EMPTY_MODEL";
    }
    return "DANGLING_REF";
}

class ModelError : public std::runtime_error {
public:
    explicit ModelError(std::vector<StructuralError> errors)
        : std::runtime_error(summarize(errors)), errors_(std::move(errors)) {}

    const std::vector<StructuralError>& errors() const noexcept { return errors_; }

private:
    static std::string summarize(const std::vector<StructuralError>& errors) {
        std::string out;
        for (const auto& e : errors) {
            if (!out.empty()) out += "; ";
            out += std::string(to_string(e.code)) + ": " + e.message;
        }
        return out;
    }

    std::vector<StructuralError> errors_;
};

class ArchitectureModel;
ArchitectureModel build_architecture(ArchitectureParts parts);

/// Immutable, referentially intact architecture. Collections are sorted by id.
class ArchitectureModel {
public:
    const std::string& name() const noexcept { return name_; }
    const std::vector<Jurisdiction>& jurisdictions() const noexcept { return jurisdictions_; }
    const std::vector<Provider>& providers() const noexcept { return providers_; }
    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    const std::vector<Link>& links() const noexcept { return links_; }
    bool automation_enabled() const noexcept { return automation_enabled_; }

    const Jurisdiction* find_jurisdiction(std::string_view code) const noexcept {
        for (const auto& j : jurisdictions_) {
            if (text::iequals(j.code, code)) return &j;
        }
        return nullptr;
    }

    const Provider* find_provider(std::string_view id) const noexcept {
        return find_by_id(providers_, id);
    }

    const Node* find_node(std::string_view id) const noexcept { return find_by_id(nodes_, id); }

    const Link* find_link(std::string_view id) const noexcept { return find_by_id(links_, id); }

    /// Jurisdiction code of the provider hosting `node_id`.
    const std::string& jurisdiction_of(const Node& node) const {
        return find_provider(node.provider)->jurisdiction;
    }

    /// Reconstructs the raw parts this model was built from (canonical order).
    ArchitectureParts parts() const {
        ArchitectureParts p;
        p.name = name_;
        p.jurisdictions = jurisdictions_;
        p.providers = providers_;
        p.nodes = nodes_;
        for (const auto& l : links_) p.links.push_back(static_cast<const LinkSpec&>(l));
        p.automation_enabled = automation_enabled_;
        return p;
    }

    friend bool operator==(const ArchitectureModel&, const ArchitectureModel&) = default;

private:
    friend ArchitectureModel build_architecture(ArchitectureParts parts);
    ArchitectureModel() = default;

    template <typename T>
    static const T* find_by_id(const std::vector<T>& items, std::string_view id) noexcept {
        auto it = std::lower_bound(items.begin(), items.end(), id,
                                   [](const T& item, std::string_view key) { return item.id < key; });
        return (it != items.end() && it->id == id) ? &*it : nullptr;
    }

    std::string name_;
    std::vector<Jurisdiction> jurisdictions_;
    std::vector<Provider> providers_;
    std::vector<Node> nodes_;
    std::vector<Link> links_;
    bool automation_enabled_ = false;
};

/// Builds a model from raw parts, deriving link flags and sorting every
/// collection by id. Throws ModelError listing every duplicate id, dangling
/// reference, or an empty node set.
inline ArchitectureModel build_architecture(ArchitectureParts parts) {
    std::vector<StructuralError> errors;
    auto dangling = [&](ElementKind kind, std::size_t index, const std::string& id,
                        std::string field, const std::string& ref) {
        errors.push_back({StructuralError::Code::DanglingRef, kind, index, id, field, ref,
                          std::string(to_string(kind)) + " '" + id + "' references unknown " +
                              field + " '" + ref + "'"});
    };
    auto duplicate = [&](ElementKind kind, std::size_t index, const std::string& id) {
        errors.push_back({StructuralError::Code::DuplicateId, kind, index, id, "id", id,
                          "duplicate " + std::string(to_string(kind)) + " id '" + id + "'"});
    };

    // Jurisdiction codes compare case-insensitively; maps lower-case code to declared code.
    std::map<std::string, std::string> jurisdiction_codes;
    for (std::size_t i = 0; i < parts.jurisdictions.size(); ++i) {
        const auto& j = parts.jurisdictions[i];
        if (!jurisdiction_codes.emplace(text::lower(j.code), j.code).second) {
            duplicate(ElementKind::Jurisdiction, i, j.code);
        }
    }

    std::map<std::string, std::size_t> provider_ids;
    for (std::size_t i = 0; i < parts.providers.size(); ++i) {
        auto& p = parts.providers[i];
        if (!provider_ids.emplace(p.id, i).second) duplicate(ElementKind::Provider, i, p.id);
        auto it = jurisdiction_codes.find(text::lower(p.jurisdiction));
        if (it == jurisdiction_codes.end()) {
            dangling(ElementKind::Provider, i, p.id, "region", p.jurisdiction);
        } else {
            p.jurisdiction = it->second;
        }
    }

    // Nodes and links share one id namespace: both appear as threat targets.
    std::set<std::string> element_ids;
    for (std::size_t i = 0; i < parts.nodes.size(); ++i) {
        const auto& n = parts.nodes[i];
        if (!element_ids.insert(n.id).second) duplicate(ElementKind::Node, i, n.id);
        if (!provider_ids.count(n.provider)) {
            dangling(ElementKind::Node, i, n.id, "provider", n.provider);
        }
    }
    std::set<std::string> node_ids;
    for (const auto& n : parts.nodes) node_ids.insert(n.id);
    for (std::size_t i = 0; i < parts.links.size(); ++i) {
        const auto& l = parts.links[i];
        if (!element_ids.insert(l.id).second) duplicate(ElementKind::Link, i, l.id);
        if (!node_ids.count(l.from)) dangling(ElementKind::Link, i, l.id, "from", l.from);
        if (!node_ids.count(l.to)) dangling(ElementKind::Link, i, l.id, "to", l.to);
    }
    if (parts.nodes.empty()) {
        errors.push_back({StructuralError::Code::EmptyModel, ElementKind::Model, 0, parts.name,
                          "", "", "architecture declares no nodes"});
    }
    if (!errors.empty()) throw ModelError(std::move(errors));

    ArchitectureModel m;
    m.name_ = std::move(parts.name);
    m.automation_enabled_ = parts.automation_enabled;
    m.jurisdictions_ = std::move(parts.jurisdictions);
    m.providers_ = std::move(parts.providers);
    m.nodes_ = std::move(parts.nodes);
    std::sort(m.jurisdictions_.begin(), m.jurisdictions_.end(),
              [](const Jurisdiction& a, const Jurisdiction& b) {
                  return std::pair(text::lower(a.code), a.code) <
                         std::pair(text::lower(b.code), b.code);
              });
    auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
    std::sort(m.providers_.begin(), m.providers_.end(), by_id);
    std::sort(m.nodes_.begin(), m.nodes_.end(), by_id);

    for (auto& spec : parts.links) {
        Link link;
        static_cast<LinkSpec&>(link) = std::move(spec);
        const Provider* from = m.find_provider(m.find_node(link.from)->provider);
        const Provider* to = m.find_provider(m.find_node(link.to)->provider);
        link.crosses_provider = from->id != to->id;
        link.crosses_jurisdiction = !text::iequals(from->jurisdiction, to->jurisdiction);
        m.links_.push_back(std::move(link));
    }
    std::sort(m.links_.begin(), m.links_.end(), by_id);
    return m;
}

// ---------------------------------------------------------------------------
// Placement lint

enum class FindingRule {
    AppPrivate,
    DanglingRef,
    DbPrivate,
    DupId,
    StoragePrivate,
    WebPublic,
    XprovEncrypted,
};

enum class Severity { Error, Warning };

inline std::string_view to_string(FindingRule r) noexcept {
    switch (r) {
        case FindingRule::AppPrivate: return "APP_PRIVATE";
        case FindingRule::DanglingRef: return "DANGLING_REF";
        case FindingRule::DbPrivate: return "DB_PRIVATE";
        case FindingRule::DupId: return "DUP_ID";
        case FindingRule::StoragePrivate: return "STORAGE_PRIVATE";
        case FindingRule::WebPublic: return "WEB_PUBLIC";
        case FindingRule::XprovEncrypted: return "XPROV_ENCRYPTED";
    }
    return "DANGLING_REF";
}

inline std::string_view to_string(Severity s) noexcept {
    return s == Severity::Error ? "error" : "warning";
}

struct ValidationFinding {
    FindingRule rule_id = FindingRule::WebPublic;
    Severity severity = Severity::Warning;
    std::string subject;
    std::string message;

    friend bool operator==(const ValidationFinding&, const ValidationFinding&) = default;
};

/// Blueprint placement checks. Findings come back sorted by severity (errors
/// first), rule id, then subject.
inline std::vector<ValidationFinding> validate_architecture(const ArchitectureModel& model) {
    std::vector<ValidationFinding> findings;
    for (const auto& n : model.nodes()) {
        switch (n.tier) {
            case Tier::Web:
                if (n.subnet == Subnet::Private) {
                    findings.push_back({FindingRule::WebPublic, Severity::Warning, n.id,
                                        "web node '" + n.id + "' is in a private subnet"});
                }
                break;
            case Tier::App:
                if (n.subnet == Subnet::Public) {
                    findings.push_back({FindingRule::AppPrivate, Severity::Error, n.id,
                                        "app node '" + n.id + "' must sit in a private subnet"});
                }
                break;
            case Tier::Db:
                if (n.subnet == Subnet::Public) {
                    findings.push_back({FindingRule::DbPrivate, Severity::Error, n.id,
                                        "db node '" + n.id + "' must sit in a private subnet"});
                }
                break;
            case Tier::Storage:
                if (n.subnet == Subnet::Public) {
                    findings.push_back({FindingRule::StoragePrivate, Severity::Error, n.id,
                                        "storage node '" + n.id +
                                            "' must sit in a private subnet"});
                }
                break;
        }
    }
    for (const auto& l : model.links()) {
        if (l.crosses_provider && !l.encryption) {
            findings.push_back({FindingRule::XprovEncrypted, Severity::Error, l.id,
                                "link '" + l.id + "' crosses providers without encryption"});
        }
    }
    std::sort(findings.begin(), findings.end(),
              [](const ValidationFinding& a, const ValidationFinding& b) {
                  return std::tuple(a.severity, to_string(a.rule_id), std::string_view(a.subject)) <
                         std::tuple(b.severity, to_string(b.rule_id), std::string_view(b.subject));
              });
    return findings;
}

inline bool has_errors(const std::vector<ValidationFinding>& findings) noexcept {
    return std::any_of(findings.begin(), findings.end(),
                       [](const ValidationFinding& f) { return f.severity == Severity::Error; });
}

}  // namespace mcrisk
