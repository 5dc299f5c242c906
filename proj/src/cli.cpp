#include "hbk/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hbk/batch.hpp"
#include "hbk/catalog.hpp"
#include "hbk/grammar.hpp"

namespace hbk {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string capitalized(Ternary t) {
    switch (t) {
        case Ternary::Equivalent: return "Equivalent";
        case Ternary::Inequivalent: return "Inequivalent";
        case Ternary::Unknown: return "Unknown";
    }
    return "Unknown";
}

struct Cli {
    std::string format = "text";
    std::string catalog_path;
    std::ostream* out = nullptr;
    int exit_code = 0;

    bool json() const { return format == "json"; }

    Catalog load_catalog() const {
        return catalog_path.empty() ? Catalog::load_default() : Catalog::load_file(catalog_path);
    }

    ordered_json report_head(const std::string& command) const {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = command;
        return j;
    }

    void emit_json(const ordered_json& j) const { *out << j.dump(2) << "\n"; }
};

ordered_json json_citations(const std::vector<std::string>& citations) {
    return ordered_json(citations);
}

ordered_json json_census(const AnnulusCensus& census) {
    ordered_json j;
    j["count"] = std::string(to_string(census.count));
    ordered_json slopes = ordered_json::array();
    for (const Fraction& s : census.slopes) slopes.push_back(s.str());
    j["slopes"] = std::move(slopes);
    return j;
}

ordered_json json_entry(const CatalogEntry& e) {
    ordered_json j;
    j["name"] = e.name;
    j["spec"] = e.spec ? ordered_json(format_spec(*e.spec)) : ordered_json(nullptr);
    if (!e.figure.empty()) j["figure"] = e.figure;
    if (!e.source.empty()) j["source"] = e.source;
    auto sourced = [](const auto& value, const std::string& source) {
        ordered_json s;
        s["value"] = value;
        s["source"] = source;
        return s;
    };
    if (e.symmetry_pos) j["symmetry_pos"] = sourced(e.symmetry_pos->value, e.symmetry_pos->source);
    if (e.symmetry_full) j["symmetry_full"] = sourced(e.symmetry_full->value, e.symmetry_full->source);
    if (e.chirality)
        j["chirality"] = sourced(std::string(to_string(e.chirality->value)), e.chirality->source);
    if (e.census) j["census"] = sourced(json_census(e.census->value), e.census->source);
    auto names = [&sourced](const std::vector<Sourced<std::string>>& list) {
        ordered_json arr = ordered_json::array();
        for (const auto& t : list) arr.push_back(sourced(t.value, t.source));
        return arr;
    };
    if (!e.inequivalent_to.empty()) j["inequivalent_to"] = names(e.inequivalent_to);
    if (!e.exterior_homeo_to.empty()) j["exterior_homeo_to"] = names(e.exterior_homeo_to);
    return j;
}

void cmd_eval(Cli& cli, const std::string& word_text) {
    const TwistWord word = TwistWord::parse(word_text);
    const Fraction value = cf_eval(word);
    const ModZClass cls = modz_normalize(value);
    const std::optional<Int> n = is_one_over_n(cls);
    const EndpointPairing pairing = endpoint_pairing(word);
    const TwistWord canonical = cf_expand(value);

    if (cli.json()) {
        ordered_json j = cli.report_head("eval");
        j["word"] = word.str();
        j["value"] = value.str();
        j["class"] = cls.str();
        j["one_over_n"] = n ? ordered_json(n->str()) : ordered_json(nullptr);
        j["pairing"] = pairing.str();
        j["disk_to_boundary"] = pairing.disk_to_boundary();
        j["canonical_word"] = canonical.str();
        cli.emit_json(j);
        return;
    }
    *cli.out << "value: " << value.str() << "\n";
    *cli.out << "class: " << cls.str() << " (mod Z)\n";
    *cli.out << "one-over-n: " << (n ? "n = " + n->str() : std::string("no")) << "\n";
    *cli.out << "pairing: " << pairing.str()
             << (pairing.disk_to_boundary() ? " (disk endpoints joined to y,z)"
                                            : " (disk endpoints joined to each other)")
             << "\n";
    *cli.out << "canonical word: " << (canonical.empty() ? std::string("(empty)") : canonical.str()) << "\n";
}

void cmd_census(Cli& cli, const std::string& spec_text) {
    const HbkSpec spec = parse_spec(spec_text);
    const AnnulusCensus result = census(spec);
    if (cli.json()) {
        ordered_json j = cli.report_head("census");
        j["spec"] = format_spec(spec);
        j["census"] = json_census(result);
        cli.emit_json(j);
        return;
    }
    *cli.out << result.str() << "\n";
}

void cmd_equiv(Cli& cli, const std::string& a_text, const std::string& b_text, bool up_to_mirror,
               bool strict) {
    const HbkSpec a = parse_spec(a_text);
    const HbkSpec b = parse_spec(b_text);
    const EquivVerdict v = up_to_mirror ? equivalent_up_to_mirror(a, b) : equivalent(a, b);
    if (cli.json()) {
        ordered_json j = cli.report_head("equiv");
        j["spec_a"] = format_spec(a);
        j["spec_b"] = format_spec(b);
        j["mode"] = up_to_mirror ? "up-to-mirror" : "direct";
        j["status"] = std::string(to_string(v.status));
        j["reason"] = v.reason;
        j["citations"] = json_citations(v.citations);
        cli.emit_json(j);
    } else {
        *cli.out << capitalized(v.status) << " (" << v.reason << ")\n";
        *cli.out << "citations: ";
        for (std::size_t i = 0; i < v.citations.size(); ++i) {
            if (i > 0) *cli.out << "; ";
            *cli.out << v.citations[i];
        }
        *cli.out << "\n";
    }
    if (strict && v.status == Ternary::Unknown) {
        cli.exit_code = 3;
    }
}

void cmd_symmetry(Cli& cli, const std::string& spec_text) {
    const HbkSpec spec = parse_spec(spec_text);
    const SymmetryReport r = symmetry_group(spec);
    if (cli.json()) {
        ordered_json j = cli.report_head("symmetry");
        j["spec"] = format_spec(spec);
        j["group"] = std::string(to_string(r.group));
        j["reason"] = r.reason;
        cli.emit_json(j);
        return;
    }
    *cli.out << to_string(r.group) << " (" << r.reason << ")\n";
}

void cmd_chirality(Cli& cli, const std::string& spec_text) {
    const HbkSpec spec = parse_spec(spec_text);
    const ChiralityReport r = chirality(spec);
    if (cli.json()) {
        ordered_json j = cli.report_head("chirality");
        j["spec"] = format_spec(spec);
        j["verdict"] = std::string(to_string(r.verdict));
        j["reason"] = r.reason;
        cli.emit_json(j);
        return;
    }
    *cli.out << to_string(r.verdict) << " (" << r.reason << ")\n";
}

void cmd_catalog_list(Cli& cli) {
    const Catalog catalog = cli.load_catalog();
    if (cli.json()) {
        ordered_json j = cli.report_head("catalog list");
        ordered_json entries = ordered_json::array();
        for (const CatalogEntry& e : catalog.entries()) {
            ordered_json item;
            item["name"] = e.name;
            item["spec"] = e.spec ? ordered_json(format_spec(*e.spec)) : ordered_json(nullptr);
            entries.push_back(std::move(item));
        }
        j["entries"] = std::move(entries);
        cli.emit_json(j);
        return;
    }
    for (const CatalogEntry& e : catalog.entries()) {
        *cli.out << e.name;
        if (e.spec) {
            *cli.out << "  " << format_spec(*e.spec);
        } else {
            *cli.out << "  (literature-only)";
        }
        *cli.out << "\n";
    }
}

void cmd_catalog_show(Cli& cli, const std::string& name) {
    const Catalog catalog = cli.load_catalog();
    const CatalogEntry& entry = catalog.lookup(name);
    if (cli.json()) {
        ordered_json j = cli.report_head("catalog show");
        j["entry"] = json_entry(entry);
        cli.emit_json(j);
        return;
    }
    *cli.out << format_entry(entry);
}

void emit_verify_text(Cli& cli, const VerifySummary& summary) {
    for (const VerifyReport& r : summary.reports) {
        *cli.out << r.name;
        if (!r.has_spec) {
            *cli.out << ": skipped (literature-only entry)\n";
            continue;
        }
        *cli.out << "\n";
        for (const FieldCheck& c : r.checks) {
            *cli.out << "  " << c.field << ": " << to_string(c.status);
            switch (c.status) {
                case CheckStatus::Pass:
                    *cli.out << " (engine: " << c.engine_value << ")";
                    break;
                case CheckStatus::Fail:
                    *cli.out << " (engine: " << c.engine_value << ", expected: " << c.expected_value
                             << ", source: " << c.source << ")";
                    break;
                case CheckStatus::Skipped:
                    *cli.out << " (" << c.note << ")";
                    break;
            }
            *cli.out << "\n";
        }
    }
    *cli.out << "checks: " << summary.passed() << " passed, " << summary.failed() << " failed, "
             << summary.skipped() << " skipped\n";
}

ordered_json json_verify(const VerifySummary& summary) {
    ordered_json reports = ordered_json::array();
    for (const VerifyReport& r : summary.reports) {
        ordered_json jr;
        jr["name"] = r.name;
        jr["has_spec"] = r.has_spec;
        ordered_json checks = ordered_json::array();
        for (const FieldCheck& c : r.checks) {
            ordered_json jc;
            jc["field"] = c.field;
            jc["status"] = std::string(to_string(c.status));
            jc["engine"] = c.engine_value;
            jc["expected"] = c.expected_value;
            jc["source"] = c.source;
            if (!c.note.empty()) jc["note"] = c.note;
            checks.push_back(std::move(jc));
        }
        jr["checks"] = std::move(checks);
        reports.push_back(std::move(jr));
    }
    return reports;
}

void cmd_catalog_verify(Cli& cli, const std::string& name, bool all) {
    const Catalog catalog = cli.load_catalog();
    VerifySummary summary;
    if (all) {
        summary = catalog.verify_all();
    } else {
        summary.reports.push_back(catalog.verify(name));
    }
    if (cli.json()) {
        ordered_json j = cli.report_head("catalog verify");
        j["reports"] = json_verify(summary);
        ordered_json totals;
        totals["passed"] = summary.passed();
        totals["failed"] = summary.failed();
        totals["skipped"] = summary.skipped();
        j["summary"] = std::move(totals);
        cli.emit_json(j);
    } else {
        emit_verify_text(cli, summary);
    }
    if (!summary.clean()) {
        cli.exit_code = 1;
    }
}

void cmd_batch(Cli& cli, const std::string& pairs_path, const std::string& out_path) {
    std::ifstream in(pairs_path);
    if (!in) {
        throw Error("cannot open batch input: " + pairs_path);
    }
    const std::vector<BatchRow> rows = run_batch(in);

    std::ofstream file;
    std::ostream* sink = cli.out;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) {
            throw Error("cannot open batch output: " + out_path);
        }
        sink = &file;
    }

    if (cli.json()) {
        ordered_json j = cli.report_head("batch");
        ordered_json jrows = ordered_json::array();
        for (const BatchRow& r : rows) {
            ordered_json jr;
            jr["row"] = r.row;
            jr["spec_a"] = r.spec_a;
            jr["spec_b"] = r.spec_b;
            jr["mode"] = r.mode;
            if (r.ok()) {
                jr["status"] = r.status;
                jr["reason"] = r.reason;
                jr["citations"] = json_citations(r.citations);
            } else {
                jr["error"] = r.error;
            }
            jrows.push_back(std::move(jr));
        }
        j["rows"] = std::move(jrows);
        *sink << j.dump(2) << "\n";
        return;
    }
    for (const BatchRow& r : rows) {
        *sink << "row " << r.row << ": ";
        if (r.ok()) {
            *sink << r.mode << " -> " << r.status << " (" << r.reason << ")";
        } else {
            *sink << "error: " << r.error;
        }
        *sink << "\n";
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Cli cli;
    cli.out = &out;

    CLI::App app{"exact annulus census, equivalence, chirality and symmetry decisions\n"
                 "for the twisted tangle-replacement family of genus-two handlebody-knots"};
    app.require_subcommand(1);
    app.add_option("--format", cli.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--catalog", cli.catalog_path, "catalog file (overrides HBK_CATALOG)");

    std::string word_text;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a twist word");
    eval_cmd->add_option("word", word_text, "comma-separated twist counts, empty for the trivial word");
    eval_cmd->callback([&] { cmd_eval(cli, word_text); });

    std::string census_spec;
    auto* census_cmd = app.add_subcommand("census", "essential annuli of a spec");
    census_cmd->add_option("spec", census_spec)->required();
    census_cmd->callback([&] { cmd_census(cli, census_spec); });

    std::string equiv_a, equiv_b;
    bool up_to_mirror = false;
    bool strict = false;
    auto* equiv_cmd = app.add_subcommand("equiv", "decide equivalence of two specs");
    equiv_cmd->add_option("spec_a", equiv_a)->required();
    equiv_cmd->add_option("spec_b", equiv_b)->required();
    equiv_cmd->add_flag("--up-to-mirror", up_to_mirror, "also try the mirror of spec_b");
    equiv_cmd->add_flag("--strict", strict, "exit 3 when the verdict is unknown");
    equiv_cmd->callback([&] { cmd_equiv(cli, equiv_a, equiv_b, up_to_mirror, strict); });

    std::string symmetry_spec;
    auto* symmetry_cmd = app.add_subcommand("symmetry", "symmetry group of a spec");
    symmetry_cmd->add_option("spec", symmetry_spec)->required();
    symmetry_cmd->callback([&] { cmd_symmetry(cli, symmetry_spec); });

    std::string chirality_spec;
    auto* chirality_cmd = app.add_subcommand("chirality", "chirality of a spec");
    chirality_cmd->add_option("spec", chirality_spec)->required();
    chirality_cmd->callback([&] { cmd_chirality(cli, chirality_spec); });

    auto* catalog_cmd = app.add_subcommand("catalog", "named handlebody-knots and verification");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "list entries");
    list_cmd->callback([&] { cmd_catalog_list(cli); });
    std::string show_name;
    auto* show_cmd = catalog_cmd->add_subcommand("show", "print one entry");
    show_cmd->add_option("name", show_name)->required();
    show_cmd->callback([&] { cmd_catalog_show(cli, show_name); });
    std::string verify_name;
    bool verify_all = false;
    auto* verify_cmd = catalog_cmd->add_subcommand("verify", "cross-check engine output against the catalog");
    verify_cmd->add_option("name", verify_name);
    verify_cmd->add_flag("--all", verify_all, "verify every spec-bearing entry");
    verify_cmd->callback([&] {
        if (!verify_all && verify_name.empty()) {
            throw CLI::ValidationError("catalog verify", "needs a name or --all");
        }
        cmd_catalog_verify(cli, verify_name, verify_all);
    });

    std::string pairs_path, out_path;
    auto* batch_cmd = app.add_subcommand("batch", "process a CSV of spec pairs");
    batch_cmd->add_option("--pairs", pairs_path, "CSV with header spec_a,spec_b,mode")->required();
    batch_cmd->add_option("--out", out_path, "report path; - or omitted for stdout");
    batch_cmd->callback([&] { cmd_batch(cli, pairs_path, out_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const TrivialTangleError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidConnectivityError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfiniteValueError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return cli.exit_code;
}

}  // namespace hbk
