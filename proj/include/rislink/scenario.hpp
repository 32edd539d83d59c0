#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rislink/geometry.hpp"
#include "rislink/link_budget.hpp"
#include "rislink/optimizers.hpp"

namespace rislink {

/// Scenario-file validation failure. `field_path` names the offending field
/// ("radio.frequency_hz", "ris.elements[3].gamma", ...).
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(std::string field_path, const std::string& message)
        : std::runtime_error(field_path + ": " + message),
          field_path_(std::move(field_path)) {}

    const std::string& field_path() const { return field_path_; }

private:
    std::string field_path_;
};

/// Parsed scenario file. Values are stored in file units (degrees, dBi) so a
/// parse -> serialize -> parse round trip reproduces the configuration
/// exactly; the *_point()/_config() accessors convert to the internal units
/// (radians, linear gains) the library works in.
struct Scenario {
    struct Body {
        double lat_deg = 0.0;
        double lon_deg = 0.0;
        double alt_m = 0.0;

        bool operator==(const Body&) const = default;
    };

    struct Gains {
        double tx_dbi = 0.0;
        double rx_dbi = 0.0;
        double ris_in_dbi = 0.0;
        double ris_out_dbi = 0.0;

        bool operator==(const Gains&) const = default;
    };

    struct Radio {
        double frequency_hz = 0.0;
        double tx_power_w = 0.0;
        Gains gains_dbi;
        double excess_loss_db = 0.0;

        bool operator==(const Radio&) const = default;
    };

    Body satellite;
    Body ris;
    Body user;
    std::vector<RisElement> ris_elements;  // compact forms expand at parse time
    bool ris_passive = true;
    Radio radio;
    double sigma_rad = 0.0;
    McConfig mc;
    BfgsConfig bfgs;
    double earth_radius_m = 6371000.0;

    bool operator==(const Scenario&) const = default;

    EarthModel earth() const { return EarthModel{earth_radius_m}; }
    GeodeticPoint satellite_point() const;
    GeodeticPoint ris_point() const;
    GeodeticPoint user_point() const;
    RadioConfig radio_config() const;
    RisArray ris_array() const;
    PhaseErrorModel error_model() const { return PhaseErrorModel{sigma_rad}; }

    PropagationDistances distances() const;
    double aggregate_magnitude() const;
    LinkBudget link_budget() const;
};

/// Parse and validate a scenario document. Throws ScenarioError naming the
/// field path on missing, mistyped, or out-of-range values.
Scenario scenario_from_json(const nlohmann::json& doc);

/// Serialize back to the file schema (degrees, dBi).
nlohmann::json scenario_to_json(const Scenario& scenario);

/// Load a scenario file from disk. Throws std::ios_base::failure when the
/// file cannot be read, nlohmann::json::parse_error on malformed JSON, and
/// ScenarioError on validation failures.
Scenario load_scenario(const std::string& path);

}  // namespace rislink
