// io.hpp — CSV output with round-trip precision and content digests

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace pijq {

// %.17g, shortest representation that round-trips a double
std::string format_double(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    std::string to_string() const;
};

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

// FNV-1a 64-bit content digest, hex encoded
std::string fnv1a_digest(const std::string& content);

}  // namespace pijq
