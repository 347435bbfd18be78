/// @file report.hpp
/// @brief Report assembly and serialization. Reports are ordered JSON with
///        floats written at 17 significant digits, so the same config and
///        seed produce byte-identical bytes; output files are written
///        atomically (write to a temp name, then rename).
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace orlicz {

using ojson = nlohmann::ordered_json;

/// Deterministic two-space-indented dump with %.17g floating point fields.
std::string dump_stable(const ojson& j);

void write_file_atomic(const std::string& path, const std::string& content);

struct Artifact {
    std::string name;     // file name relative to the output directory
    std::string content;  // bytes
};

struct Report {
    std::string command;
    int exit_status = 0;
    ojson body;
    std::vector<Artifact> artifacts;  // report.json is prepended on write

    /// Serializes body (with exit_status folded in) and writes all artifacts
    /// under `dir`, creating it if needed.
    void write(const std::string& dir) const;
    std::string json() const;
};

}  // namespace orlicz
