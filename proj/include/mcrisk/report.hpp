#pragma once

// Report rendering: CSV reproductions of the registry tables and assessment
// reports in Markdown, CSV and structured JSON.
//
// CSV dialect: comma separated, fields containing a comma, quote, CR or LF
// are double-quoted with embedded quotes doubled, LF line endings, one
// header row.

#include "mcrisk/model.hpp"
#include "mcrisk/registry.hpp"
#include "mcrisk/scoring.hpp"
#include "mcrisk/surface.hpp"
#include "mcrisk/text.hpp"
#include "mcrisk/version.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcrisk {

enum class ReportFormat { Markdown, Csv, Structured };

inline std::string_view to_string(ReportFormat f) noexcept {
    switch (f) {
        case ReportFormat::Markdown: return "md";
        case ReportFormat::Csv: return "csv";
        case ReportFormat::Structured: return "structured";
    }
    return "md";
}

class UnknownFormat : public std::invalid_argument {
public:
    explicit UnknownFormat(const std::string& name)
        : std::invalid_argument("unknown report format '" + name +
                                "' (expected md, csv or structured)") {}
};

inline ReportFormat parse_format(std::string_view s) {
    if (s == "md" || s == "markdown") return ReportFormat::Markdown;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "structured") return ReportFormat::Structured;
    throw UnknownFormat(std::string(s));
}

// ---------------------------------------------------------------------------
// Registry tables

struct PaperTables {
    std::string risk_analysis;          // scores per threat
    std::string countermeasures;        // countermeasures and ATT&CK mitigations
    std::string stride_categorization;  // STRIDE category per threat
};

inline constexpr std::string_view kRiskAnalysisFile = "table1_risk_analysis.csv";
inline constexpr std::string_view kCountermeasuresFile = "table2_countermeasures.csv";
inline constexpr std::string_view kStrideFile = "table3_stride_categorization.csv";

/// "ALL" when every category is present, otherwise display names joined by "; ".
inline std::string stride_cell(const StrideSet& stride) {
    if (stride.size() == kAllStride.size()) return "ALL";
    std::vector<std::string> names;
    for (StrideCategory c : stride) names.emplace_back(display_name(c));
    return text::join(names, "; ");
}

inline PaperTables render_paper_tables(const Registry& registry) {
    PaperTables t;
    t.risk_analysis = text::csv_row({"Description of Threat", "Total Risk Score", "Legal Damage",
                                     "Reputation Damage", "Productivity Damage", "Reproducability",
                                     "Exploitability", "Affected Users", "Discoverability"});
    t.countermeasures =
        text::csv_row({"Description of Threat", "Countermeasures", "MITRE ATT&CK Mitigation"});
    t.stride_categorization = text::csv_row({"Description of Threat", "STRIDE Framework Category"});

    for (const auto& d : registry.threats()) {
        const RiskScore s = d.score();
        t.risk_analysis += text::csv_row(
            {d.name, s.total_display, std::to_string(d.damage.legal),
             std::to_string(d.damage.reputation), std::to_string(d.damage.productivity),
             std::to_string(d.attributes.reproducibility), std::to_string(d.attributes.exploitability),
             std::to_string(d.attributes.affected_users), std::to_string(d.attributes.discoverability)});

        const MitigationEntry* m = registry.find_mitigation(d.id);
        t.countermeasures += text::csv_row(
            {d.name, m ? m->countermeasures : "", m ? text::join(m->attack_mitigations, ", ") : ""});

        t.stride_categorization += text::csv_row({d.name, stride_cell(d.stride)});
    }
    return t;
}

// ---------------------------------------------------------------------------
// Assessment reports

struct AssessmentInput {
    std::string generated_for;
    std::vector<ThreatInstance> instances;  // already ranked
    std::vector<ValidationFinding> findings;
    std::vector<ConsistencyDiscrepancy> discrepancies;
};

struct RenderOptions {
    bool version_header = true;
};

struct ReportDocument {
    std::string title;
    std::string generated_for;
    std::vector<std::string> sections;
    ReportFormat format = ReportFormat::Markdown;
    std::string body;
};

namespace detail {

inline std::string md_escape_cell(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

inline std::vector<std::string> stride_names(const StrideSet& stride) {
    std::vector<std::string> out;
    for (StrideCategory c : stride) out.emplace_back(to_string(c));
    return out;
}

inline std::map<Band, std::size_t> band_counts(const std::vector<ThreatInstance>& instances) {
    std::map<Band, std::size_t> counts;
    for (Band b : kAllBands) counts[b] = 0;
    for (const auto& i : instances) ++counts[i.score.band];
    return counts;
}

inline std::string render_markdown(const AssessmentInput& in, const Registry& registry,
                                   const RenderOptions& opts, ReportDocument& doc) {
    std::string out;
    if (opts.version_header) out += "<!-- generated by mcrisk " + std::string(kVersion) + " -->\n";
    out += "# " + doc.title + "\n\n";

    const auto counts = band_counts(in.instances);
    out += "Threat instances: " + std::to_string(in.instances.size()) + " (Critical " +
           std::to_string(counts.at(Band::Critical)) + ", High " +
           std::to_string(counts.at(Band::High)) + ", Medium " +
           std::to_string(counts.at(Band::Medium)) + ", Low " +
           std::to_string(counts.at(Band::Low)) + ")\n";

    if (in.instances.empty()) {
        doc.sections.emplace_back("No applicable threats");
        out += "\n## No applicable threats\n\nNo registry threat applies to this architecture.\n";
    }
    static constexpr Band kOrder[] = {Band::Critical, Band::High, Band::Medium, Band::Low};
    for (Band band : kOrder) {
        if (counts.at(band) == 0) continue;
        doc.sections.emplace_back(to_string(band));
        out += "\n## " + std::string(to_string(band)) + "\n";
        for (std::size_t rank = 0; rank < in.instances.size(); ++rank) {
            const ThreatInstance& inst = in.instances[rank];
            if (inst.score.band != band) continue;
            const ThreatDefinition& d = inst.threat;
            out += "\n### " + d.name + " — " + inst.score.total_display + "\n\n";
            out += "- Rank: " + std::to_string(rank + 1) + "\n";
            out += "- Threat: `" + d.id + "` (" + std::string(to_string(d.family)) + ")\n";
            out += "- STRIDE: " + text::join(stride_names(d.stride), ", ") + "\n";
            std::vector<std::string> targets;
            for (const auto& t : inst.targets) targets.push_back("`" + t + "`");
            out += "- Targets: " + text::join(targets, ", ") + "\n";
            out += "- DREAD: damage " + std::to_string(d.damage.legal) + "/" +
                   std::to_string(d.damage.reputation) + "/" + std::to_string(d.damage.productivity) +
                   " (average " + format_fixed2(inst.score.average_damage) + "), reproducibility " +
                   std::to_string(d.attributes.reproducibility) + ", exploitability " +
                   std::to_string(d.attributes.exploitability) + ", affected users " +
                   std::to_string(d.attributes.affected_users) + ", discoverability " +
                   std::to_string(d.attributes.discoverability) + "\n";
            if (const MitigationEntry* m = registry.find_mitigation(d.id)) {
                out += "- Countermeasures: " + m->countermeasures + "\n";
                out += "- ATT&CK mitigations: " +
                       (m->attack_mitigations.empty() ? std::string("none listed")
                                                      : text::join(m->attack_mitigations, ", ")) +
                       "\n";
            } else {
                out += "- Countermeasures: none recorded\n";
            }
        }
    }

    doc.sections.emplace_back("Validation findings");
    out += "\n## Validation findings\n\n";
    if (in.findings.empty()) {
        out += "No validation findings.\n";
    } else {
        out += "| Severity | Rule | Subject | Message |\n|---|---|---|---|\n";
        for (const auto& f : in.findings) {
            out += "| " + std::string(to_string(f.severity)) + " | " + std::string(to_string(f.rule_id)) +
                   " | " + md_escape_cell(f.subject) + " | " + md_escape_cell(f.message) + " |\n";
        }
    }

    doc.sections.emplace_back("Priority label discrepancies");
    out += "\n## Priority label discrepancies\n\n";
    if (in.discrepancies.empty()) {
        out += "No discrepancies between stored labels and computed bands.\n";
    } else {
        out += "| Threat | Total | Stored label | Computed band |\n|---|---|---|---|\n";
        for (const auto& d : in.discrepancies) {
            out += "| " + md_escape_cell(d.threat_id) + " | " + d.total_display + " | " +
                   std::string(to_string(d.paper_label)) + " | " +
                   std::string(to_string(d.computed_band)) + " |\n";
        }
    }
    return out;
}

inline std::string render_csv(const AssessmentInput& in, const Registry& registry,
                              ReportDocument& doc) {
    doc.sections.emplace_back("Threat instances");
    std::string out = text::csv_row(
        {"rank", "threat_id", "threat", "family", "stride", "band", "total", "average_damage",
         "legal", "reputation", "productivity", "reproducibility", "exploitability",
         "affected_users", "discoverability", "targets", "countermeasures", "attack_mitigations"});
    for (std::size_t i = 0; i < in.instances.size(); ++i) {
        const ThreatInstance& inst = in.instances[i];
        const ThreatDefinition& d = inst.threat;
        const MitigationEntry* m = registry.find_mitigation(d.id);
        out += text::csv_row({std::to_string(i + 1), d.id, d.name, std::string(to_string(d.family)),
                              text::join(stride_names(d.stride), ";"),
                              std::string(to_string(inst.score.band)), inst.score.total_display,
                              format_fixed2(inst.score.average_damage),
                              std::to_string(d.damage.legal), std::to_string(d.damage.reputation),
                              std::to_string(d.damage.productivity),
                              std::to_string(d.attributes.reproducibility),
                              std::to_string(d.attributes.exploitability),
                              std::to_string(d.attributes.affected_users),
                              std::to_string(d.attributes.discoverability),
                              text::join(inst.targets, ";"), m ? m->countermeasures : "",
                              m ? text::join(m->attack_mitigations, "; ") : ""});
    }
    return out;
}

inline nlohmann::ordered_json rational_json(const Rational& r) {
    return {{"numerator", r.numerator()}, {"denominator", r.denominator()}};
}

inline std::string render_structured(const AssessmentInput& in, const Registry& registry,
                                     const RenderOptions& opts, ReportDocument& doc) {
    using json = nlohmann::ordered_json;
    json root;
    root["schema"] = "mcrisk.assessment.v1";
    if (opts.version_header) root["generator"] = "mcrisk " + std::string(kVersion);
    root["title"] = doc.title;
    root["generated_for"] = doc.generated_for;

    json summary;
    summary["instances"] = in.instances.size();
    json bands = json::object();
    const auto counts = band_counts(in.instances);
    for (Band b : {Band::Critical, Band::High, Band::Medium, Band::Low}) {
        bands[std::string(to_string(b))] = counts.at(b);
    }
    summary["bands"] = std::move(bands);
    root["summary"] = std::move(summary);

    json instances = json::array();
    for (std::size_t i = 0; i < in.instances.size(); ++i) {
        const ThreatInstance& inst = in.instances[i];
        const ThreatDefinition& d = inst.threat;
        json j;
        j["rank"] = i + 1;
        j["threat_id"] = d.id;
        j["name"] = d.name;
        j["family"] = to_string(d.family);
        j["stride"] = stride_names(d.stride);
        j["targets"] = inst.targets;
        j["damage"] = {{"legal", d.damage.legal},
                       {"reputation", d.damage.reputation},
                       {"productivity", d.damage.productivity}};
        j["attributes"] = {{"reproducibility", d.attributes.reproducibility},
                           {"exploitability", d.attributes.exploitability},
                           {"affected_users", d.attributes.affected_users},
                           {"discoverability", d.attributes.discoverability}};
        j["score"] = {{"average_damage", rational_json(inst.score.average_damage)},
                      {"average_damage_display", format_fixed2(inst.score.average_damage)},
                      {"total", rational_json(inst.score.total)},
                      {"total_display", inst.score.total_display},
                      {"band", to_string(inst.score.band)}};
        if (const MitigationEntry* m = registry.find_mitigation(d.id)) {
            j["mitigation"] = {{"countermeasures", m->countermeasures},
                               {"attack_mitigations", m->attack_mitigations}};
        } else {
            j["mitigation"] = nullptr;
        }
        instances.push_back(std::move(j));
    }
    doc.sections.emplace_back("instances");
    root["instances"] = std::move(instances);

    json findings = json::array();
    for (const auto& f : in.findings) {
        findings.push_back({{"rule_id", to_string(f.rule_id)},
                            {"severity", to_string(f.severity)},
                            {"subject", f.subject},
                            {"message", f.message}});
    }
    doc.sections.emplace_back("findings");
    root["findings"] = std::move(findings);

    json discrepancies = json::array();
    for (const auto& d : in.discrepancies) {
        discrepancies.push_back({{"threat_id", d.threat_id},
                                 {"paper_label", to_string(d.paper_label)},
                                 {"computed_band", to_string(d.computed_band)},
                                 {"total_display", d.total_display}});
    }
    doc.sections.emplace_back("discrepancies");
    root["discrepancies"] = std::move(discrepancies);
    return root.dump(2) + "\n";
}

}  // namespace detail

inline ReportDocument render_assessment(const AssessmentInput& input, const Registry& registry,
                                        ReportFormat format, const RenderOptions& opts = {}) {
    ReportDocument doc;
    doc.format = format;
    doc.generated_for = input.generated_for;
    doc.title = "Threat assessment: " + input.generated_for;
    switch (format) {
        case ReportFormat::Markdown:
            doc.body = detail::render_markdown(input, registry, opts, doc);
            break;
        case ReportFormat::Csv:
            doc.body = detail::render_csv(input, registry, doc);
            break;
        case ReportFormat::Structured:
            doc.body = detail::render_structured(input, registry, opts, doc);
            break;
    }
    return doc;
}

/// Findings as plain text lines ("error DB_PRIVATE db1: ...") or a JSON array.
inline std::string render_findings(const std::vector<ValidationFinding>& findings,
                                   bool structured) {
    if (structured) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& f : findings) {
            arr.push_back({{"rule_id", to_string(f.rule_id)},
                           {"severity", to_string(f.severity)},
                           {"subject", f.subject},
                           {"message", f.message}});
        }
        return nlohmann::ordered_json{{"findings", std::move(arr)}}.dump(2) + "\n";
    }
    std::string out;
    for (const auto& f : findings) {
        out += std::string(to_string(f.severity)) + " " + std::string(to_string(f.rule_id)) + " " +
               f.subject + ": " + f.message + "\n";
    }
    return out;
}

}  // namespace mcrisk
