#pragma once

#include <optional>
#include <string>
#include <vector>

#include "necklace/core.hpp"

namespace necklace::tables {

struct TableRow {
    int a, b, n;
    BigInt count;
};

// Parses "a,b,n,count" CSV text (with header line).
std::vector<TableRow> parse_counts_csv(const std::string& text);

// All embedded reference counts, merged and sorted by (a, b, n).
const std::vector<TableRow>& reference_counts();

// Lookup of a single reference cell.
std::optional<BigInt> reference_count(int a, int b, int n);

} // namespace necklace::tables
