#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbk/engine.hpp"

namespace hbk {

// An expected value together with the citation backing it. Every expected
// field in the catalog carries one.
template <typename T>
struct Sourced {
    T value;
    std::string source;

    friend bool operator==(const Sourced&, const Sourced&) = default;
};

// A named handlebody-knot. Entries without a spec are literature rows:
// they are kept for their cited data and skipped by engine verification.
// Symmetry groups are stored as text because the literature values can be
// richer (Z2xZ2) than anything the engine emits.
struct CatalogEntry {
    std::string name;
    std::optional<HbkSpec> spec;
    std::string figure;
    std::string source;
    std::optional<Sourced<std::string>> symmetry_pos;
    std::optional<Sourced<std::string>> symmetry_full;
    std::optional<Sourced<Chirality>> chirality;
    std::optional<Sourced<AnnulusCensus>> census;
    std::vector<Sourced<std::string>> inequivalent_to;
    std::vector<Sourced<std::string>> exterior_homeo_to;

    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s);

struct FieldCheck {
    std::string field;
    CheckStatus status;
    std::string engine_value;
    std::string expected_value;
    std::string source;
    std::string note;
};

struct VerifyReport {
    std::string name;
    bool has_spec = false;
    std::vector<FieldCheck> checks;

    bool failed() const;
};

struct VerifySummary {
    std::vector<VerifyReport> reports;

    int passed() const;
    int failed() const;
    int skipped() const;
    bool clean() const { return failed() == 0; }
};

// One entry in the catalog text format, "entry <name>" plus its fields.
std::string format_entry(const CatalogEntry& entry);

class Catalog {
public:
    Catalog() = default;
    explicit Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {}

    // Canonical text format; see data/catalog.hbk. serialize() of a parsed
    // catalog reproduces its input byte for byte.
    static Catalog parse(std::string_view text);  // throws ParseError
    std::string serialize() const;

    static Catalog load_file(const std::string& path);
    // HBK_CATALOG environment variable, else the shipped file.
    static std::string default_path();
    static Catalog load_default();

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    std::vector<CatalogEntry>& entries() { return entries_; }

    const CatalogEntry& lookup(std::string_view name) const;  // throws UnknownNameError

    // Cross-checks the engine against every expected field of the entry:
    // census, chirality, symmetry groups, and the pairwise equivalence /
    // mirror-equivalence / exterior checks implied by the lists. Fields the
    // engine cannot decide are reported as skipped, never as failures.
    VerifyReport verify(std::string_view name) const;  // throws UnknownNameError, MissingSpecError

    VerifySummary verify_all() const;

private:
    std::vector<CatalogEntry> entries_;
};

}  // namespace hbk
