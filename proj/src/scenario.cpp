#include "rislink/scenario.hpp"

#include <cmath>
#include <fstream>

#include "rislink/units.hpp"

namespace rislink {

namespace {

using nlohmann::json;

std::string join(const std::string& prefix, const char* key) {
    return prefix.empty() ? std::string(key) : prefix + "." + key;
}

const json& require_object(const json& doc, const std::string& path) {
    if (!doc.is_object()) {
        throw ScenarioError(path.empty() ? "(root)" : path, "expected a JSON object");
    }
    return doc;
}

double require_number(const json& parent, const std::string& prefix, const char* key) {
    const auto it = parent.find(key);
    if (it == parent.end()) {
        throw ScenarioError(join(prefix, key), "missing required field");
    }
    if (!it->is_number()) {
        throw ScenarioError(join(prefix, key), "expected a number");
    }
    return it->get<double>();
}

double number_or(const json& parent, const std::string& prefix, const char* key,
                 double fallback) {
    const auto it = parent.find(key);
    if (it == parent.end()) return fallback;
    if (!it->is_number()) {
        throw ScenarioError(join(prefix, key), "expected a number");
    }
    return it->get<double>();
}

bool bool_or(const json& parent, const std::string& prefix, const char* key,
             bool fallback) {
    const auto it = parent.find(key);
    if (it == parent.end()) return fallback;
    if (!it->is_boolean()) {
        throw ScenarioError(join(prefix, key), "expected a boolean");
    }
    return it->get<bool>();
}

void check(bool ok, const std::string& path, const char* message) {
    if (!ok) throw ScenarioError(path, message);
}

Scenario::Body parse_body(const json& doc, const std::string& prefix,
                          bool altitude_required) {
    require_object(doc, prefix);
    Scenario::Body body;
    body.lat_deg = require_number(doc, prefix, "lat_deg");
    body.lon_deg = require_number(doc, prefix, "lon_deg");
    body.alt_m = altitude_required ? require_number(doc, prefix, "alt_m")
                                   : number_or(doc, prefix, "alt_m", 0.0);
    check(std::isfinite(body.lat_deg) && body.lat_deg >= -90.0 && body.lat_deg <= 90.0,
          join(prefix, "lat_deg"), "must lie in [-90, 90]");
    check(std::isfinite(body.lon_deg) && body.lon_deg >= -180.0 && body.lon_deg <= 180.0,
          join(prefix, "lon_deg"), "must lie in [-180, 180]");
    check(std::isfinite(body.alt_m) && body.alt_m >= 0.0, join(prefix, "alt_m"),
          "must be >= 0");
    return body;
}

std::vector<RisElement> parse_elements(const json& doc, bool passive) {
    const auto it = doc.find("elements");
    if (it == doc.end()) {
        throw ScenarioError("ris.elements", "missing required field");
    }

    std::vector<RisElement> elements;
    if (it->is_array()) {
        check(!it->empty(), "ris.elements", "must be non-empty");
        elements.reserve(it->size());
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string prefix = "ris.elements[" + std::to_string(i) + "]";
            const json& entry = require_object((*it)[i], prefix);
            RisElement e;
            e.reflection_magnitude = require_number(entry, prefix, "gamma");
            e.phase_rad = require_number(entry, prefix, "phase_rad");
            check(std::isfinite(e.reflection_magnitude) && e.reflection_magnitude >= 0.0,
                  prefix + ".gamma", "must be finite and >= 0");
            check(!passive || e.reflection_magnitude <= 1.0, prefix + ".gamma",
                  "must be <= 1 for a passive RIS");
            check(std::isfinite(e.phase_rad), prefix + ".phase_rad", "must be finite");
            elements.push_back(e);
        }
        return elements;
    }

    if (it->is_object()) {
        const std::string prefix = "ris.elements";
        const double count_raw = require_number(*it, prefix, "count");
        const double gamma = require_number(*it, prefix, "gamma");
        const bool coherent = bool_or(*it, prefix, "coherent", true);
        check(count_raw >= 1.0 && count_raw == std::floor(count_raw) &&
                  count_raw <= 1e9,
              prefix + ".count", "must be a positive integer");
        check(std::isfinite(gamma) && gamma >= 0.0, prefix + ".gamma",
              "must be finite and >= 0");
        check(!passive || gamma <= 1.0, prefix + ".gamma",
              "must be <= 1 for a passive RIS");

        const auto count = static_cast<std::size_t>(count_raw);
        elements.reserve(count);
        for (std::size_t n = 0; n < count; ++n) {
            // Coherent: all elements aligned (aggregate magnitude count*gamma).
            // Otherwise phases are spread evenly over the circle, which sums
            // to zero for count >= 2.
            const double phase =
                coherent ? 0.0
                         : kTwoPi * static_cast<double>(n) / static_cast<double>(count);
            elements.push_back(RisElement{gamma, phase});
        }
        return elements;
    }

    throw ScenarioError("ris.elements", "expected an array or an object");
}

}  // namespace

GeodeticPoint Scenario::satellite_point() const {
    return GeodeticPoint{deg_to_rad(satellite.lat_deg), deg_to_rad(satellite.lon_deg),
                         satellite.alt_m};
}

GeodeticPoint Scenario::ris_point() const {
    return GeodeticPoint{deg_to_rad(ris.lat_deg), deg_to_rad(ris.lon_deg), ris.alt_m};
}

GeodeticPoint Scenario::user_point() const {
    return GeodeticPoint{deg_to_rad(user.lat_deg), deg_to_rad(user.lon_deg), user.alt_m};
}

RadioConfig Scenario::radio_config() const {
    RadioConfig config;
    config.frequency_hz = radio.frequency_hz;
    config.tx_power_w = radio.tx_power_w;
    config.gain_tx = db_to_linear(radio.gains_dbi.tx_dbi);
    config.gain_rx = db_to_linear(radio.gains_dbi.rx_dbi);
    config.gain_ris_in = db_to_linear(radio.gains_dbi.ris_in_dbi);
    config.gain_ris_out = db_to_linear(radio.gains_dbi.ris_out_dbi);
    config.excess_loss_direct_db = radio.excess_loss_db;
    return config;
}

RisArray Scenario::ris_array() const { return RisArray{ris_elements, ris_passive}; }

PropagationDistances Scenario::distances() const {
    return scenario_distances(satellite_point(), ris_point(), user_point(), earth());
}

double Scenario::aggregate_magnitude() const {
    return aggregate_reflection(ris_array()).magnitude;
}

LinkBudget Scenario::link_budget() const {
    return build_link_budget(distances(), radio_config(), aggregate_magnitude());
}

Scenario scenario_from_json(const json& doc) {
    require_object(doc, "");
    Scenario s;

    const auto section = [&doc](const char* key) -> const json& {
        const auto it = doc.find(key);
        if (it == doc.end()) {
            throw ScenarioError(key, "missing required section");
        }
        return require_object(*it, key);
    };

    s.satellite = parse_body(section("satellite"), "satellite", /*altitude_required=*/true);
    check(s.satellite.alt_m > 0.0, "satellite.alt_m", "must be > 0");

    const json& ris_doc = section("ris");
    s.ris = parse_body(ris_doc, "ris", /*altitude_required=*/false);
    s.ris_passive = bool_or(ris_doc, "ris", "passive", true);
    s.ris_elements = parse_elements(ris_doc, s.ris_passive);

    s.user = parse_body(section("user"), "user", /*altitude_required=*/false);

    const json& radio_doc = section("radio");
    s.radio.frequency_hz = require_number(radio_doc, "radio", "frequency_hz");
    s.radio.tx_power_w = require_number(radio_doc, "radio", "tx_power_w");
    check(s.radio.frequency_hz > 0.0 && std::isfinite(s.radio.frequency_hz),
          "radio.frequency_hz", "must be > 0");
    check(s.radio.tx_power_w > 0.0 && std::isfinite(s.radio.tx_power_w),
          "radio.tx_power_w", "must be > 0");
    {
        const auto it = radio_doc.find("gains_dbi");
        if (it == radio_doc.end()) {
            throw ScenarioError("radio.gains_dbi", "missing required section");
        }
        const json& gains = require_object(*it, "radio.gains_dbi");
        s.radio.gains_dbi.tx_dbi = require_number(gains, "radio.gains_dbi", "tx");
        s.radio.gains_dbi.rx_dbi = require_number(gains, "radio.gains_dbi", "rx");
        s.radio.gains_dbi.ris_in_dbi = require_number(gains, "radio.gains_dbi", "ris_in");
        s.radio.gains_dbi.ris_out_dbi =
            require_number(gains, "radio.gains_dbi", "ris_out");
    }
    s.radio.excess_loss_db = number_or(radio_doc, "radio", "excess_loss_db", 0.0);
    check(s.radio.excess_loss_db >= 0.0 && std::isfinite(s.radio.excess_loss_db),
          "radio.excess_loss_db", "must be >= 0");

    if (const auto it = doc.find("error"); it != doc.end()) {
        const json& error_doc = require_object(*it, "error");
        s.sigma_rad = number_or(error_doc, "error", "sigma_rad", 0.0);
        check(s.sigma_rad >= 0.0 && std::isfinite(s.sigma_rad), "error.sigma_rad",
              "must be >= 0");
    }

    if (const auto it = doc.find("mc"); it != doc.end()) {
        const json& mc_doc = require_object(*it, "mc");
        const double samples = number_or(mc_doc, "mc", "samples", 100000.0);
        check(samples >= 1.0 && samples == std::floor(samples) && samples <= 1e12,
              "mc.samples", "must be a positive integer");
        s.mc.sample_count = static_cast<std::size_t>(samples);
        const double seed = number_or(mc_doc, "mc", "seed", 42.0);
        check(seed >= 0.0 && seed == std::floor(seed) && seed <= 1.8446744073709552e19,
              "mc.seed", "must be a non-negative integer");
        s.mc.seed = static_cast<std::uint64_t>(seed);
    }

    if (const auto it = doc.find("bfgs"); it != doc.end()) {
        const json& bfgs_doc = require_object(*it, "bfgs");
        s.bfgs.tolerance = number_or(bfgs_doc, "bfgs", "tolerance", 1e-8);
        const double max_iter = number_or(bfgs_doc, "bfgs", "max_iterations", 200.0);
        const double multistart = number_or(bfgs_doc, "bfgs", "multistart", 4.0);
        s.bfgs.wolfe_c1 = number_or(bfgs_doc, "bfgs", "wolfe_c1", 1e-4);
        s.bfgs.wolfe_c2 = number_or(bfgs_doc, "bfgs", "wolfe_c2", 0.9);
        s.bfgs.initial_phase_rad = number_or(bfgs_doc, "bfgs", "initial_phase_rad", 0.0);
        s.bfgs.initial_hessian = number_or(bfgs_doc, "bfgs", "initial_hessian", 1.0);
        check(s.bfgs.tolerance > 0.0 && std::isfinite(s.bfgs.tolerance),
              "bfgs.tolerance", "must be > 0");
        check(max_iter >= 1.0 && max_iter == std::floor(max_iter) && max_iter <= 1e9,
              "bfgs.max_iterations", "must be a positive integer");
        s.bfgs.max_iterations = static_cast<int>(max_iter);
        check(multistart >= 1.0 && multistart == std::floor(multistart) &&
                  multistart <= 1e6,
              "bfgs.multistart", "must be a positive integer");
        s.bfgs.multistart_count = static_cast<int>(multistart);
        check(s.bfgs.wolfe_c1 > 0.0 && s.bfgs.wolfe_c1 < s.bfgs.wolfe_c2 &&
                  s.bfgs.wolfe_c2 < 1.0,
              "bfgs.wolfe_c1", "wolfe constants must satisfy 0 < c1 < c2 < 1");
        check(s.bfgs.initial_hessian > 0.0 && std::isfinite(s.bfgs.initial_hessian),
              "bfgs.initial_hessian", "must be > 0");
        check(std::isfinite(s.bfgs.initial_phase_rad), "bfgs.initial_phase_rad",
              "must be finite");
    }

    if (const auto it = doc.find("earth"); it != doc.end()) {
        const json& earth_doc = require_object(*it, "earth");
        s.earth_radius_m = number_or(earth_doc, "earth", "radius_m", 6371000.0);
        check(s.earth_radius_m > 0.0 && std::isfinite(s.earth_radius_m),
              "earth.radius_m", "must be > 0");
    }

    // Positions must be pairwise distinct; surface the rejection here with a
    // field path rather than from deep inside the geometry call.
    if (s.satellite == s.ris) throw ScenarioError("ris", "coincides with satellite position");
    if (s.satellite == s.user) throw ScenarioError("user", "coincides with satellite position");
    if (s.ris == s.user) throw ScenarioError("user", "coincides with ris position");

    return s;
}

json scenario_to_json(const Scenario& s) {
    json elements = json::array();
    for (const RisElement& e : s.ris_elements) {
        elements.push_back(
            {{"gamma", e.reflection_magnitude}, {"phase_rad", e.phase_rad}});
    }
    return json{
        {"satellite",
         {{"lat_deg", s.satellite.lat_deg},
          {"lon_deg", s.satellite.lon_deg},
          {"alt_m", s.satellite.alt_m}}},
        {"ris",
         {{"lat_deg", s.ris.lat_deg},
          {"lon_deg", s.ris.lon_deg},
          {"alt_m", s.ris.alt_m},
          {"passive", s.ris_passive},
          {"elements", std::move(elements)}}},
        {"user",
         {{"lat_deg", s.user.lat_deg},
          {"lon_deg", s.user.lon_deg},
          {"alt_m", s.user.alt_m}}},
        {"radio",
         {{"frequency_hz", s.radio.frequency_hz},
          {"tx_power_w", s.radio.tx_power_w},
          {"gains_dbi",
           {{"tx", s.radio.gains_dbi.tx_dbi},
            {"rx", s.radio.gains_dbi.rx_dbi},
            {"ris_in", s.radio.gains_dbi.ris_in_dbi},
            {"ris_out", s.radio.gains_dbi.ris_out_dbi}}},
          {"excess_loss_db", s.radio.excess_loss_db}}},
        {"error", {{"sigma_rad", s.sigma_rad}}},
        {"mc",
         {{"samples", static_cast<std::uint64_t>(s.mc.sample_count)},
          {"seed", s.mc.seed}}},
        {"bfgs",
         {{"tolerance", s.bfgs.tolerance},
          {"max_iterations", s.bfgs.max_iterations},
          {"multistart", s.bfgs.multistart_count},
          {"wolfe_c1", s.bfgs.wolfe_c1},
          {"wolfe_c2", s.bfgs.wolfe_c2},
          {"initial_phase_rad", s.bfgs.initial_phase_rad},
          {"initial_hessian", s.bfgs.initial_hessian}}},
        {"earth", {{"radius_m", s.earth_radius_m}}},
    };
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open scenario file: " + path);
    }
    json doc = json::parse(in);  // throws json::parse_error on bad syntax
    return scenario_from_json(doc);
}

}  // namespace rislink
