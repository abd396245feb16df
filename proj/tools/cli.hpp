#pragma once

// mcrisk command-line frontend. run() takes the argument list and output
// streams explicitly; tools/mcrisk.cpp wires it to the process.

#include "mcrisk/mcrisk.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mcrisk::cli {

enum ExitStatus : int {
    kSuccess = 0,
    kFindings = 1,
    kInputError = 2,
    kInternalError = 3,
};

inline constexpr const char* kExitCodeHelp =
    "Exit status:\n"
    "  0  success\n"
    "  1  validation findings of severity error present (validate)\n"
    "  2  parse, schema, I/O or usage error\n"
    "  3  internal contract violation\n";

/// Thrown for bad input files or flags; mapped to exit status 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Environment {
    std::optional<std::string> registry_path;  // MCRISK_REGISTRY
};

inline Environment process_environment() {
    Environment env;
    if (const char* v = std::getenv("MCRISK_REGISTRY"); v && *v) env.registry_path = v;
    return env;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "': " + std::strerror(errno));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + path.string() + "': " + std::strerror(errno));
    out << body;
}

class Command {
public:
    Command(std::ostream& out, std::ostream& err, Environment env)
        : out_(out), err_(err), env_(std::move(env)) {}

    int run(std::vector<std::string> args) {
        CLI::App app{"mcrisk: multi-cloud threat modeling with STRIDE categories and DREAD scores",
                     "mcrisk"};
        app.footer(kExitCodeHelp);
        app.set_version_flag("--version", "mcrisk " + std::string(kVersion));
        app.require_subcommand(1);

        std::string path;
        std::string registry_flag;
        std::string format;
        std::string min_band;
        std::string out_path;
        std::string out_dir;
        std::string threat_id;
        bool no_header = false;

        auto* validate = app.add_subcommand("validate", "Lint an architecture against the three-tier blueprint");
        validate->add_option("path", path, "Architecture file (.mcarch)")->required();
        validate->add_option("--format", format, "human or structured")
            ->check(CLI::IsMember({"human", "structured"}))
            ->default_val("human");

        auto* assess_cmd = app.add_subcommand("assess", "Enumerate, score and rank threats for an architecture");
        assess_cmd->add_option("path", path, "Architecture file (.mcarch)")->required();
        assess_cmd->add_option("--registry", registry_flag, "Registry file (JSON); overrides MCRISK_REGISTRY");
        assess_cmd->add_option("--format", format, "md, csv or structured")
            ->check(CLI::IsMember({"md", "markdown", "csv", "structured"}))
            ->default_val("md");
        assess_cmd->add_option("--min-band", min_band, "Drop instances below this band (low, medium, high, critical)");
        assess_cmd->add_option("--out", out_path, "Write the report to a file instead of standard output");
        assess_cmd->add_flag("--no-header", no_header, "Omit the version header");

        auto* tables = app.add_subcommand("paper-tables", "Write the registry tables as CSV files");
        tables->add_option("--out-dir", out_dir, "Destination directory")->required();
        tables->add_option("--registry", registry_flag, "Registry file (JSON)");

        auto* consistency = app.add_subcommand(
            "check-consistency", "Compare stored priority labels with computed bands");
        consistency->add_option("--registry", registry_flag, "Registry file (JSON)");

        auto* fmt = app.add_subcommand("fmt", "Print an architecture file in canonical form");
        fmt->add_option("path", path, "Architecture file (.mcarch)")->required();

        auto* registry_cmd = app.add_subcommand("registry", "Inspect the threat registry");
        registry_cmd->require_subcommand(1);
        registry_cmd->add_option("--registry", registry_flag, "Registry file (JSON)");
        auto* show = registry_cmd->add_subcommand("show", "Print one threat definition and its mitigations");
        show->add_option("threat_id", threat_id, "Threat id, e.g. arch.dos")->required();
        show->fallthrough();
        registry_cmd->add_subcommand("dump", "Print the registry as JSON")->fallthrough();

        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return kSuccess;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return kSuccess;
        } catch (const CLI::CallForVersion& e) {
            out_ << e.what() << "\n";
            return kSuccess;
        } catch (const CLI::ParseError& e) {
            err_ << "mcrisk: " << e.what() << "\n";
            return kInputError;
        }

        try {
            if (*validate) return cmd_validate(path, format == "structured");
            if (*assess_cmd) {
                return cmd_assess(path, registry_flag, parse_format(format), min_band, out_path,
                                  no_header);
            }
            if (*tables) return cmd_paper_tables(out_dir, registry_flag);
            if (*consistency) return cmd_check_consistency(registry_flag);
            if (*fmt) return cmd_fmt(path);
            if (*registry_cmd) {
                if (*show) return cmd_registry_show(registry_flag, threat_id);
                out_ << serialize_registry(load(registry_flag));
                return kSuccess;
            }
        } catch (const InputError& e) {
            err_ << "mcrisk: " << e.what() << "\n";
            return kInputError;
        } catch (const RegistryError& e) {
            err_ << "mcrisk: registry error: " << e.what() << "\n";
            return kInputError;
        } catch (const UnknownThreat& e) {
            err_ << "mcrisk: " << e.what() << "\n";
            return kInputError;
        } catch (const UnknownFormat& e) {
            err_ << "mcrisk: " << e.what() << "\n";
            return kInputError;
        } catch (const std::exception& e) {
            err_ << "mcrisk: internal error: " << e.what() << "\n";
            return kInternalError;
        }
        return kInternalError;
    }

private:
    Registry load(const std::string& flag) const {
        std::string path = flag;
        if (path.empty() && env_.registry_path) path = *env_.registry_path;
        if (path.empty()) return canonical_registry();
        return load_registry(read_file(path));
    }

    ArchitectureModel load_model(const std::string& path) const {
        const std::string source = read_file(path);
        dsl::ParseResult parsed = dsl::parse(source);
        if (!parsed.ok()) {
            for (const auto& e : parsed.errors) err_ << e.format(path) << "\n";
            throw InputError(std::to_string(parsed.errors.size()) + " error(s) in '" + path + "'");
        }
        return std::move(*parsed.model);
    }

    static std::string model_label(const ArchitectureModel& m, const std::string& path) {
        if (!m.name().empty()) return m.name();
        return std::filesystem::path(path).stem().string();
    }

    int cmd_validate(const std::string& path, bool structured) {
        const ArchitectureModel model = load_model(path);
        const auto findings = validate_architecture(model);
        out_ << render_findings(findings, structured);
        return has_errors(findings) ? kFindings : kSuccess;
    }

    int cmd_assess(const std::string& path, const std::string& registry_flag, ReportFormat format,
                   const std::string& min_band, const std::string& out_path, bool no_header) {
        std::optional<Band> threshold;
        if (!min_band.empty()) {
            threshold = parse_band(min_band);
            if (!threshold) {
                throw InputError("unknown band '" + min_band +
                                 "' (expected low, medium, high or critical)");
            }
        }
        const Registry registry = load(registry_flag);
        const ArchitectureModel model = load_model(path);

        AssessmentInput input;
        input.generated_for = model_label(model, path);
        input.instances = assess(model, registry);
        if (threshold) {
            std::erase_if(input.instances,
                          [&](const ThreatInstance& i) { return i.score.band < *threshold; });
        }
        input.findings = validate_architecture(model);
        input.discrepancies = check_band_consistency(registry);

        const ReportDocument doc =
            render_assessment(input, registry, format, RenderOptions{!no_header});
        if (out_path.empty()) {
            out_ << doc.body;
        } else {
            write_file(out_path, doc.body);
        }
        return kSuccess;
    }

    int cmd_paper_tables(const std::string& out_dir, const std::string& registry_flag) {
        const PaperTables tables = render_paper_tables(load(registry_flag));
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) throw InputError("cannot create '" + out_dir + "': " + ec.message());
        const std::filesystem::path dir(out_dir);
        write_file(dir / kRiskAnalysisFile, tables.risk_analysis);
        write_file(dir / kCountermeasuresFile, tables.countermeasures);
        write_file(dir / kStrideFile, tables.stride_categorization);
        for (auto name : {kRiskAnalysisFile, kCountermeasuresFile, kStrideFile}) {
            out_ << (dir / name).string() << "\n";
        }
        return kSuccess;
    }

    int cmd_check_consistency(const std::string& registry_flag) {
        for (const auto& d : check_band_consistency(load(registry_flag))) {
            out_ << d.threat_id << ": stored label " << to_string(d.paper_label)
                 << ", computed " << to_string(d.computed_band) << " (" << d.total_display << ")\n";
        }
        return kSuccess;
    }

    int cmd_fmt(const std::string& path) {
        out_ << dsl::serialize(load_model(path));
        return kSuccess;
    }

    int cmd_registry_show(const std::string& registry_flag, const std::string& id) {
        const Registry registry = load(registry_flag);
        const ThreatDefinition* d = registry.find_threat(id);
        if (!d) throw UnknownThreat(id);
        const RiskScore s = d->score();
        std::vector<std::string> stride;
        for (StrideCategory c : d->stride) stride.emplace_back(to_string(c));

        out_ << d->id << "  " << d->name << "\n";
        out_ << "  family:          " << to_string(d->family) << "\n";
        out_ << "  stride:          " << text::join(stride, ", ") << "\n";
        out_ << "  damage:          legal " << d->damage.legal << ", reputation "
             << d->damage.reputation << ", productivity " << d->damage.productivity
             << " (average " << format_fixed2(s.average_damage) << ")\n";
        out_ << "  attributes:      reproducibility " << d->attributes.reproducibility
             << ", exploitability " << d->attributes.exploitability << ", affected users "
             << d->attributes.affected_users << ", discoverability "
             << d->attributes.discoverability << "\n";
        out_ << "  total risk:      " << s.total_display << " (" << to_string(s.band) << ")\n";
        if (d->paper_priority_label) {
            out_ << "  stored label:    " << to_string(*d->paper_priority_label) << "\n";
        }
        out_ << "  applies to:      " << d->applicability_rule << "\n";
        if (const MitigationEntry* m = registry.find_mitigation(d->id)) {
            out_ << "  countermeasures: " << m->countermeasures << "\n";
            out_ << "  ATT&CK:          "
                 << (m->attack_mitigations.empty() ? std::string("N/A")
                                                   : text::join(m->attack_mitigations, ", "))
                 << "\n";
        }
        return kSuccess;
    }

    std::ostream& out_;
    std::ostream& err_;
    Environment env_;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               Environment env) {
    return Command(out, err, std::move(env)).run(args);
}

}  // namespace mcrisk::cli
