#include "rislink/table_io.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

namespace rislink {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string to_csv(const SweepResult& result) {
    std::string out;
    for (std::size_t i = 0; i < result.axis_names.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_escape(result.axis_names[i]);
    }
    for (const std::string& column : result.columns) {
        out += ',';
        out += csv_escape(column);
    }
    out += '\n';

    const std::size_t rows = result.rows();
    const bool two_axes = result.axes.size() == 2;
    const std::size_t inner = two_axes ? result.axes[1].size() : 1;
    for (std::size_t row = 0; row < rows; ++row) {
        out += format_double(result.axes[0][two_axes ? row / inner : row]);
        if (two_axes) {
            out += ',';
            out += format_double(result.axes[1][row % inner]);
        }
        for (const auto& column : result.values) {
            out += ',';
            out += format_double(column[row]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::json to_json_doc(const SweepResult& result) {
    nlohmann::json axes = nlohmann::json::array();
    for (std::size_t i = 0; i < result.axes.size(); ++i) {
        axes.push_back({{"name", result.axis_names[i]}, {"values", result.axes[i]}});
    }
    nlohmann::json values = nlohmann::json::object();
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
        values[result.columns[i]] = result.values[i];
    }
    return nlohmann::json{{"kind", result.kind},
                          {"axes", std::move(axes)},
                          {"columns", result.columns},
                          {"values", std::move(values)},
                          {"metadata", result.metadata}};
}

SweepFilePaths write_sweep_files(const SweepResult& result,
                                 const std::filesystem::path& dir,
                                 const std::string& stem) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::ios_base::failure("cannot create output directory: " + dir.string());
    }

    SweepFilePaths paths{dir / (stem + ".csv"), dir / (stem + ".json")};

    std::ofstream csv(paths.csv, std::ios::binary);
    csv << to_csv(result);
    if (!csv) {
        throw std::ios_base::failure("cannot write " + paths.csv.string());
    }

    std::ofstream json_out(paths.json, std::ios::binary);
    json_out << to_json_doc(result).dump(2) << '\n';
    if (!json_out) {
        throw std::ios_base::failure("cannot write " + paths.json.string());
    }
    return paths;
}

}  // namespace rislink
