#include "hbk/batch.hpp"

#include <istream>

#include "hbk/grammar.hpp"

namespace hbk {

namespace {

std::vector<std::string> parse_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

}  // namespace

std::vector<BatchRow> run_batch(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("batch input is empty; expected header spec_a,spec_b,mode");
    }
    strip_cr(line);
    if (line != "spec_a,spec_b,mode") {
        throw ParseError("batch header must be spec_a,spec_b,mode", line, 1);
    }

    std::vector<BatchRow> rows;
    std::size_t number = 1;
    while (std::getline(in, line)) {
        ++number;
        strip_cr(line);
        if (line.empty()) continue;

        BatchRow row;
        row.row = number;
        try {
            const std::vector<std::string> fields = parse_csv_row(line);
            if (fields.size() != 3) {
                throw ParseError("expected 3 fields spec_a,spec_b,mode", line, number);
            }
            row.spec_a = fields[0];
            row.spec_b = fields[1];
            row.mode = fields[2];
            const HbkSpec a = parse_spec(row.spec_a);
            const HbkSpec b = parse_spec(row.spec_b);
            if (row.mode == "equiv" || row.mode == "equiv-mirror") {
                const EquivVerdict v =
                    row.mode == "equiv" ? equivalent(a, b) : equivalent_up_to_mirror(a, b);
                row.status = std::string(to_string(v.status));
                row.reason = v.reason;
                row.citations = v.citations;
            } else if (row.mode == "exterior") {
                const ExteriorReport r = exterior_homeomorphic(a, b);
                row.status = std::string(to_string(r.verdict));
                row.reason = r.reason;
            } else {
                throw ParseError("mode must be equiv, equiv-mirror or exterior", row.mode, number);
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hbk
