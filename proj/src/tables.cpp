#include "necklace/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "embedded_tables.hpp"

namespace necklace::tables {

std::vector<TableRow> parse_counts_csv(const std::string& text) {
    std::vector<TableRow> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            if (line != "a,b,n,count")
                throw std::invalid_argument("counts CSV: bad header: " + line);
            header = false;
            continue;
        }
        std::istringstream ls(line);
        std::string field;
        TableRow row{0, 0, 0, BigInt(0)};
        int* ints[3] = {&row.a, &row.b, &row.n};
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(ls, field, ','))
                throw std::invalid_argument("counts CSV: short row: " + line);
            *ints[i] = std::stoi(field);
        }
        if (!std::getline(ls, field))
            throw std::invalid_argument("counts CSV: short row: " + line);
        row.count = BigInt(field);
        rows.push_back(std::move(row));
    }
    return rows;
}

const std::vector<TableRow>& reference_counts() {
    static const std::vector<TableRow> rows = [] {
        std::vector<TableRow> all = parse_counts_csv(embedded::counts_table1);
        auto t2 = parse_counts_csv(embedded::counts_table2);
        all.insert(all.end(), t2.begin(), t2.end());
        std::sort(all.begin(), all.end(), [](const TableRow& x, const TableRow& y) {
            return std::tie(x.a, x.b, x.n) < std::tie(y.a, y.b, y.n);
        });
        return all;
    }();
    return rows;
}

std::optional<BigInt> reference_count(int a, int b, int n) {
    for (const TableRow& row : reference_counts())
        if (row.a == a && row.b == b && row.n == n) return row.count;
    return std::nullopt;
}

} // namespace necklace::tables
