// io.hpp — CSV/SVG/manifest output for the command-line harness. CSVs use
// LF line endings and 17-significant-digit floats so identical runs produce
// identical bytes.

#pragma once

#include <spinfloq/dynamics.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace spinfloq::cli {

std::string format_double(double value);

class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);
    void add_row(const std::vector<std::string>& cells);
    const std::string& text() const { return text_; }

  private:
    std::size_t columns_;
    std::string text_;
};

std::uint64_t fnv1a64(const std::string& bytes);
std::string to_hex(std::uint64_t value);

// Accumulates output files and finishes with one manifest referencing them.
class RunRecorder {
  public:
    RunRecorder(std::string subcommand, std::filesystem::path output_prefix);

    void set_parameters(const nlohmann::json& params);
    void set_rng(const std::string& identity, std::uint64_t seed);
    void add_warning(const std::string& warning);
    void write_file(const std::string& suffix, const std::string& bytes);

    std::filesystem::path manifest_path() const;
    void finish();  // writes <prefix>.manifest.json

  private:
    struct OutputEntry {
        std::string path;
        std::uint64_t bytes = 0;
        std::string checksum;
    };
    std::string subcommand_;
    std::filesystem::path prefix_;
    std::vector<OutputEntry> outputs_;
    std::vector<std::string> warnings_;
    std::string params_json_;  // serialized to keep json out of the header
    std::string rng_identity_;
    std::uint64_t rng_seed_ = 0;
    bool has_rng_ = false;
    std::chrono::steady_clock::time_point started_;
};

// Self-contained heatmap: one rect per cell, linear two-slope color ramp
// over [-0.5, 0.5], axis names and range labels.
std::string render_svg_heatmap(const PhaseGrid& grid);

}  // namespace spinfloq::cli
