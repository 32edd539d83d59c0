#pragma once

#include <filesystem>
#include <string>

#include "rislink/experiments.hpp"

namespace rislink {

/// Shortest text form of a double that parses back to the same value.
std::string format_double(double value);

/// RFC-4180 field quoting: fields containing commas, quotes, or line breaks
/// are wrapped in double quotes with embedded quotes doubled.
std::string csv_escape(const std::string& field);

/// Render a sweep as CSV: header row, then one row per grid cell with the
/// axis coordinates followed by the value columns.
std::string to_csv(const SweepResult& result);

/// Render a sweep as a JSON document: axes, row-major value arrays per
/// column, and the metadata block.
nlohmann::json to_json_doc(const SweepResult& result);

struct SweepFilePaths {
    std::filesystem::path csv;
    std::filesystem::path json;
};

/// Write `<stem>.csv` and `<stem>.json` under `dir` (created if missing).
/// Throws std::ios_base::failure when the directory or files cannot be
/// written.
SweepFilePaths write_sweep_files(const SweepResult& result,
                                 const std::filesystem::path& dir,
                                 const std::string& stem);

}  // namespace rislink
