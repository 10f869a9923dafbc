#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace spinfloq::cli {

using nlohmann::json;

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) text_ += ',';
        text_ += header[i];
    }
    text_ += '\n';
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_)
        throw std::logic_error("CsvWriter: row width != header width");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) text_ += ',';
        text_ += cells[i];
    }
    text_ += '\n';
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string to_hex(std::uint64_t value) {
    char buffer[19];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(value));
    return buffer;
}

RunRecorder::RunRecorder(std::string subcommand, std::filesystem::path output_prefix)
    : subcommand_(std::move(subcommand)),
      prefix_(std::move(output_prefix)),
      started_(std::chrono::steady_clock::now()) {
    if (prefix_.has_parent_path())
        std::filesystem::create_directories(prefix_.parent_path());
}

void RunRecorder::set_parameters(const json& params) { params_json_ = params.dump(); }

void RunRecorder::set_rng(const std::string& identity, std::uint64_t seed) {
    rng_identity_ = identity;
    rng_seed_ = seed;
    has_rng_ = true;
}

void RunRecorder::add_warning(const std::string& warning) { warnings_.push_back(warning); }

void RunRecorder::write_file(const std::string& suffix, const std::string& bytes) {
    const std::filesystem::path path = prefix_.string() + suffix;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    outputs_.push_back({path.string(), bytes.size(), to_hex(fnv1a64(bytes))});
}

std::filesystem::path RunRecorder::manifest_path() const {
    return prefix_.string() + ".manifest.json";
}

void RunRecorder::finish() {
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                       started_);
    json manifest;
    manifest["tool"] = {{"name", "spinfloq"}, {"version", spinfloq::version_string}};
    manifest["subcommand"] = subcommand_;
    manifest["parameters"] = params_json_.empty() ? json::object() : json::parse(params_json_);
    if (has_rng_) manifest["rng"] = {{"identity", rng_identity_}, {"seed", rng_seed_}};
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    manifest["timestamp_utc"] = stamp;
    manifest["duration_seconds"] = elapsed.count();
    manifest["outputs"] = json::array();
    for (const auto& entry : outputs_)
        manifest["outputs"].push_back(
            {{"path", entry.path}, {"bytes", entry.bytes}, {"fnv1a64", entry.checksum}});
    manifest["warnings"] = warnings_;

    std::ofstream out(manifest_path(), std::ios::binary);
    if (!out) throw std::runtime_error("cannot open manifest " + manifest_path().string());
    out << manifest.dump(2) << '\n';
}

namespace {

struct Rgb {
    int r, g, b;
};

// blue (-0.5) -> white (0) -> red (+0.5)
Rgb ramp_color(double value) {
    double x = value / 0.5;
    if (x < -1.0) x = -1.0;
    if (x > 1.0) x = 1.0;
    auto lerp = [](int a, int b, double t) { return int(std::lround(a + (b - a) * t)); };
    if (x < 0.0) {
        const double t = x + 1.0;  // 0 at -1, 1 at 0
        return {lerp(33, 255, t), lerp(102, 255, t), lerp(172, 255, t)};
    }
    return {lerp(255, 178, x), lerp(255, 24, x), lerp(255, 43, x)};
}

}  // namespace

std::string render_svg_heatmap(const PhaseGrid& grid) {
    const Index ny = grid.order_parameter.rows();
    const Index nx = grid.order_parameter.cols();
    const int cell = 6;
    const int margin_left = 60, margin_bottom = 40, margin_top = 20, margin_right = 20;
    const int width = margin_left + cell * int(nx) + margin_right;
    const int height = margin_top + cell * int(ny) + margin_bottom;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (Index iy = 0; iy < ny; ++iy) {
        for (Index ix = 0; ix < nx; ++ix) {
            const double v = grid.order_parameter(iy, ix);
            std::string fill;
            if (std::isnan(v)) {
                fill = "rgb(128,128,128)";
            } else {
                const Rgb c = ramp_color(v);
                fill = "rgb(" + std::to_string(c.r) + "," + std::to_string(c.g) + "," +
                       std::to_string(c.b) + ")";
            }
            // y axis grows upward: last row at the top
            const int px = margin_left + int(ix) * cell;
            const int py = margin_top + int(ny - 1 - iy) * cell;
            svg += "<rect x=\"" + std::to_string(px) + "\" y=\"" + std::to_string(py) +
                   "\" width=\"" + std::to_string(cell) + "\" height=\"" +
                   std::to_string(cell) + "\" fill=\"" + fill + "\"/>\n";
        }
    }
    const auto text = [&](int x, int y, const std::string& s, const char* anchor) {
        svg += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"" + anchor +
               "\">" + s + "</text>\n";
    };
    const int plot_bottom = margin_top + cell * int(ny);
    text(margin_left + cell * int(nx) / 2, plot_bottom + 28,
         axis_name_string(grid.x_axis.name), "middle");
    text(margin_left, plot_bottom + 14, format_double(grid.x_axis.start), "start");
    text(margin_left + cell * int(nx), plot_bottom + 14, format_double(grid.x_axis.stop),
         "end");
    svg += "<text x=\"14\" y=\"" + std::to_string(margin_top + cell * int(ny) / 2) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 14 " +
           std::to_string(margin_top + cell * int(ny) / 2) + ")\">" +
           axis_name_string(grid.y_axis.name) + "</text>\n";
    text(margin_left - 6, plot_bottom, format_double(grid.y_axis.start), "end");
    text(margin_left - 6, margin_top + 10, format_double(grid.y_axis.stop), "end");
    svg += "</svg>\n";
    return svg;
}

}  // namespace spinfloq::cli
