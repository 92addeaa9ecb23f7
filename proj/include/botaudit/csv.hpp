#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace botaudit {

// RFC-4180 table: header row required, all rows must match the header width.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column index by name, or -1.
    int column(std::string_view name) const;
};

CsvTable parse_csv(std::string_view text);
CsvTable read_csv(const std::filesystem::path& path);

std::string csv_field(std::string_view value);
std::string to_csv(const CsvTable& table);
void write_csv(const std::filesystem::path& path, const CsvTable& table);

} // namespace botaudit
