#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hbk/engine.hpp"

namespace hbk {

// One processed row of a batch input. A malformed row carries its error
// and no result; it never aborts the run.
struct BatchRow {
    std::size_t row = 0;  // line number in the input, header included
    std::string spec_a;
    std::string spec_b;
    std::string mode;
    std::string status;
    std::string reason;
    std::vector<std::string> citations;
    std::string error;

    bool ok() const { return error.empty(); }
};

// Reads CSV with header spec_a,spec_b,mode and runs the requested check per
// row. Modes: equiv, equiv-mirror, exterior. Fields may be double-quoted
// (composite specs contain commas).
std::vector<BatchRow> run_batch(std::istream& in);

}  // namespace hbk
