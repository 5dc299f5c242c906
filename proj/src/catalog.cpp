#include "hbk/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hbk/grammar.hpp"

#ifndef HBK_SHIPPED_CATALOG
#define HBK_SHIPPED_CATALOG "data/catalog.hbk"
#endif

namespace hbk {

std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

bool VerifyReport::failed() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const FieldCheck& c) { return c.status == CheckStatus::Fail; });
}

namespace {

int count_status(const VerifySummary& s, CheckStatus status) {
    int n = 0;
    for (const VerifyReport& r : s.reports) {
        for (const FieldCheck& c : r.checks) {
            if (c.status == status) ++n;
        }
    }
    return n;
}

}  // namespace

int VerifySummary::passed() const { return count_status(*this, CheckStatus::Pass); }
int VerifySummary::failed() const { return count_status(*this, CheckStatus::Fail); }
int VerifySummary::skipped() const { return count_status(*this, CheckStatus::Skipped); }

namespace {

constexpr std::string_view kHeader = "hbk-catalog v1";

struct Line {
    std::string_view text;
    std::size_t number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t start = 0;
    std::size_t number = 1;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            // No final newline: the remainder is a line only if nonempty.
            if (start < text.size()) {
                lines.push_back({text.substr(start), number});
            }
            break;
        }
        lines.push_back({text.substr(start, nl - start), number});
        start = nl + 1;
        ++number;
    }
    return lines;
}

Chirality parse_chirality(std::string_view text, std::size_t line) {
    if (text == "chiral") return Chirality::Chiral;
    if (text == "amphichiral") return Chirality::Amphichiral;
    throw ParseError("catalog chirality must be chiral or amphichiral", std::string(text), line);
}

// "value | source"; the source is mandatory for expected fields.
std::pair<std::string_view, std::string_view> split_sourced(std::string_view value, std::size_t line) {
    const auto bar = value.find(" | ");
    if (bar == std::string_view::npos) {
        throw ParseError("expected catalog field needs a | source citation", std::string(value), line);
    }
    return {value.substr(0, bar), value.substr(bar + 3)};
}

}  // namespace

Catalog Catalog::parse(std::string_view text) {
    const std::vector<Line> lines = split_lines(text);
    if (lines.empty() || lines[0].text != kHeader) {
        throw ParseError("catalog must start with \"" + std::string(kHeader) + "\"",
                         lines.empty() ? "" : std::string(lines[0].text), 1);
    }

    std::vector<CatalogEntry> entries;
    std::size_t i = 1;
    while (i < lines.size()) {
        if (!lines[i].text.empty()) {
            throw ParseError("expected a blank line before an entry", std::string(lines[i].text),
                             lines[i].number);
        }
        ++i;
        if (i >= lines.size()) break;  // trailing blank line is not part of the format
        if (!lines[i].text.starts_with("entry ")) {
            throw ParseError("expected \"entry <name>\"", std::string(lines[i].text), lines[i].number);
        }
        CatalogEntry entry;
        entry.name = std::string(lines[i].text.substr(6));
        if (entry.name.empty()) {
            throw ParseError("entry needs a name", "", lines[i].number);
        }
        ++i;
        for (; i < lines.size() && !lines[i].text.empty(); ++i) {
            const std::string_view line = lines[i].text;
            if (!line.starts_with("  ")) {
                throw ParseError("entry fields are indented by two spaces", std::string(line),
                                 lines[i].number);
            }
            const std::string_view field = line.substr(2);
            const auto colon = field.find(": ");
            if (colon == std::string_view::npos) {
                throw ParseError("entry field needs \"key: value\"", std::string(field), lines[i].number);
            }
            const std::string_view key = field.substr(0, colon);
            const std::string_view value = field.substr(colon + 2);
            const std::size_t ln = lines[i].number;
            if (key == "spec") {
                entry.spec = parse_spec(value);
            } else if (key == "figure") {
                entry.figure = std::string(value);
            } else if (key == "source") {
                entry.source = std::string(value);
            } else if (key == "symmetry_pos") {
                auto [v, s] = split_sourced(value, ln);
                entry.symmetry_pos = Sourced<std::string>{std::string(v), std::string(s)};
            } else if (key == "symmetry_full") {
                auto [v, s] = split_sourced(value, ln);
                entry.symmetry_full = Sourced<std::string>{std::string(v), std::string(s)};
            } else if (key == "chirality") {
                auto [v, s] = split_sourced(value, ln);
                entry.chirality = Sourced<Chirality>{parse_chirality(v, ln), std::string(s)};
            } else if (key == "census") {
                auto [v, s] = split_sourced(value, ln);
                entry.census = Sourced<AnnulusCensus>{AnnulusCensus::parse(v), std::string(s)};
            } else if (key == "inequivalent_to") {
                auto [v, s] = split_sourced(value, ln);
                entry.inequivalent_to.push_back({std::string(v), std::string(s)});
            } else if (key == "exterior_homeo_to") {
                auto [v, s] = split_sourced(value, ln);
                entry.exterior_homeo_to.push_back({std::string(v), std::string(s)});
            } else {
                throw ParseError("unknown catalog key", std::string(key), ln);
            }
        }
        entries.push_back(std::move(entry));
    }
    return Catalog(std::move(entries));
}

std::string format_entry(const CatalogEntry& e) {
    std::string out = "entry " + e.name + "\n";
    if (e.spec) out += "  spec: " + format_spec(*e.spec) + "\n";
    if (!e.figure.empty()) out += "  figure: " + e.figure + "\n";
    if (!e.source.empty()) out += "  source: " + e.source + "\n";
    if (e.symmetry_pos) out += "  symmetry_pos: " + e.symmetry_pos->value + " | " + e.symmetry_pos->source + "\n";
    if (e.symmetry_full)
        out += "  symmetry_full: " + e.symmetry_full->value + " | " + e.symmetry_full->source + "\n";
    if (e.chirality)
        out += "  chirality: " + std::string(to_string(e.chirality->value)) + " | " + e.chirality->source + "\n";
    if (e.census) out += "  census: " + e.census->value.str() + " | " + e.census->source + "\n";
    for (const auto& t : e.inequivalent_to) out += "  inequivalent_to: " + t.value + " | " + t.source + "\n";
    for (const auto& t : e.exterior_homeo_to)
        out += "  exterior_homeo_to: " + t.value + " | " + t.source + "\n";
    return out;
}

std::string Catalog::serialize() const {
    std::string out(kHeader);
    out += "\n";
    for (const CatalogEntry& e : entries_) {
        out += "\n";
        out += format_entry(e);
    }
    return out;
}

Catalog Catalog::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open catalog file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::string Catalog::default_path() {
    if (const char* env = std::getenv("HBK_CATALOG")) {
        return env;
    }
    return HBK_SHIPPED_CATALOG;
}

Catalog Catalog::load_default() {
    return load_file(default_path());
}

const CatalogEntry& Catalog::lookup(std::string_view name) const {
    for (const CatalogEntry& e : entries_) {
        if (e.name == name) return e;
    }
    throw UnknownNameError("no catalog entry named \"" + std::string(name) + "\"");
}

namespace {

FieldCheck compare_field(std::string field, std::string engine_value, std::string expected_value,
                         std::string source, bool engine_decided) {
    FieldCheck check{std::move(field), CheckStatus::Pass, std::move(engine_value),
                     std::move(expected_value), std::move(source), ""};
    if (!engine_decided) {
        check.status = CheckStatus::Skipped;
        check.note = "engine undecided; catalog value kept as literature data";
        return check;
    }
    if (check.engine_value != check.expected_value) {
        check.status = CheckStatus::Fail;
    }
    return check;
}

}  // namespace

VerifyReport Catalog::verify(std::string_view name) const {
    const CatalogEntry& entry = lookup(name);
    if (!entry.spec) {
        throw MissingSpecError("entry \"" + entry.name + "\" is literature-only: no spec to verify");
    }
    VerifyReport report{entry.name, true, {}};
    const HbkSpec& spec = *entry.spec;

    if (entry.census) {
        const AnnulusCensus engine = census(spec);
        report.checks.push_back(compare_field("census", engine.str(), entry.census->value.str(),
                                              entry.census->source, true));
    }
    if (entry.chirality) {
        const ChiralityReport engine = chirality(spec);
        report.checks.push_back(compare_field("chirality", std::string(to_string(engine.verdict)),
                                              std::string(to_string(entry.chirality->value)),
                                              entry.chirality->source,
                                              engine.verdict != Chirality::Unknown));
    }
    if (entry.symmetry_pos || entry.symmetry_full) {
        const SymmetryReport engine = symmetry_group(spec);
        const bool decided = engine.group != SymmetryGroup::Unknown;
        if (entry.symmetry_pos) {
            report.checks.push_back(compare_field("symmetry_pos", std::string(to_string(engine.group)),
                                                  entry.symmetry_pos->value, entry.symmetry_pos->source,
                                                  decided));
        }
        if (entry.symmetry_full) {
            report.checks.push_back(compare_field("symmetry_full", std::string(to_string(engine.group)),
                                                  entry.symmetry_full->value, entry.symmetry_full->source,
                                                  decided));
        }
    }

    for (const auto& target : entry.inequivalent_to) {
        const CatalogEntry* other = nullptr;
        for (const CatalogEntry& e : entries_) {
            if (e.name == target.value) other = &e;
        }
        if (!other) {
            report.checks.push_back({"inequivalent_to " + target.value, CheckStatus::Fail, "", "inequivalent",
                                     target.source, "unknown catalog name"});
            continue;
        }
        if (!other->spec) {
            report.checks.push_back({"inequivalent_to " + target.value, CheckStatus::Skipped, "",
                                     "inequivalent", target.source, "target entry has no spec"});
            continue;
        }
        const EquivVerdict direct = equivalent(spec, *other->spec);
        report.checks.push_back(compare_field("inequivalent_to " + target.value,
                                              std::string(to_string(direct.status)), "inequivalent",
                                              target.source, direct.status != Ternary::Unknown));
        const EquivVerdict mirrored = equivalent_up_to_mirror(spec, *other->spec);
        FieldCheck check = compare_field("inequivalent_to " + target.value + " (up to mirror)",
                                         std::string(to_string(mirrored.status)), "inequivalent",
                                         target.source, mirrored.status != Ternary::Unknown);
        if (check.status == CheckStatus::Skipped) {
            check.note = mirrored.reason;
        }
        report.checks.push_back(std::move(check));
    }

    for (const auto& target : entry.exterior_homeo_to) {
        const CatalogEntry* other = nullptr;
        for (const CatalogEntry& e : entries_) {
            if (e.name == target.value) other = &e;
        }
        if (!other || !other->spec) {
            report.checks.push_back({"exterior_homeo_to " + target.value, CheckStatus::Skipped, "", "true",
                                     target.source, other ? "target entry has no spec" : "unknown catalog name"});
            continue;
        }
        const ExteriorReport engine = exterior_homeomorphic(spec, *other->spec);
        report.checks.push_back(compare_field("exterior_homeo_to " + target.value,
                                              std::string(to_string(engine.verdict)), "true", target.source,
                                              engine.verdict != ExteriorVerdict::Unknown));
    }
    return report;
}

VerifySummary Catalog::verify_all() const {
    VerifySummary summary;
    for (const CatalogEntry& e : entries_) {
        if (!e.spec) {
            summary.reports.push_back({e.name, false, {}});
            continue;
        }
        summary.reports.push_back(verify(e.name));
    }
    return summary;
}

}  // namespace hbk
