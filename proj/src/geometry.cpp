#include "rislink/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace rislink {

namespace {

bool all_finite(const GeodeticPoint& p) {
    return std::isfinite(p.lat_rad) && std::isfinite(p.lon_rad) && std::isfinite(p.alt_m);
}

// Longitude is periodic; fold into [-pi, pi] so callers may pass any finite value.
double normalize_longitude(double lon_rad) {
    double wrapped = wrap_two_pi(lon_rad);
    if (wrapped > kPi) wrapped -= kTwoPi;
    return wrapped;
}

}  // namespace

EcefVector to_ecef(const GeodeticPoint& point, const EarthModel& earth) {
    if (!all_finite(point)) {
        throw std::invalid_argument("geodetic point has non-finite component");
    }
    if (point.lat_rad < -kPi / 2.0 || point.lat_rad > kPi / 2.0) {
        throw std::invalid_argument("latitude outside [-pi/2, pi/2]");
    }
    if (point.alt_m < 0.0) {
        throw std::invalid_argument("altitude below surface");
    }
    if (!(earth.radius_m > 0.0) || !std::isfinite(earth.radius_m)) {
        throw std::invalid_argument("earth radius must be positive and finite");
    }

    const double lon = normalize_longitude(point.lon_rad);
    const double r = earth.radius_m + point.alt_m;
    const double cos_lat = std::cos(point.lat_rad);
    return EcefVector{r * cos_lat * std::cos(lon),
                      r * cos_lat * std::sin(lon),
                      r * std::sin(point.lat_rad)};
}

double euclidean_distance(const EcefVector& a, const EcefVector& b) {
    if (!std::isfinite(a.x_m) || !std::isfinite(a.y_m) || !std::isfinite(a.z_m) ||
        !std::isfinite(b.x_m) || !std::isfinite(b.y_m) || !std::isfinite(b.z_m)) {
        throw std::invalid_argument("ECEF vector has non-finite component");
    }
    const double dx = a.x_m - b.x_m;
    const double dy = a.y_m - b.y_m;
    const double dz = a.z_m - b.z_m;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

PropagationDistances scenario_distances(const GeodeticPoint& satellite,
                                        const GeodeticPoint& ris,
                                        const GeodeticPoint& user,
                                        const EarthModel& earth) {
    if (!(satellite.alt_m > 0.0)) {
        throw std::invalid_argument("satellite altitude must be positive");
    }
    const EcefVector sat_ecef = to_ecef(satellite, earth);
    const EcefVector ris_ecef = to_ecef(ris, earth);
    const EcefVector user_ecef = to_ecef(user, earth);

    PropagationDistances d;
    d.d_su_m = euclidean_distance(sat_ecef, user_ecef);
    d.d_sr_m = euclidean_distance(sat_ecef, ris_ecef);
    d.d_ru_m = euclidean_distance(ris_ecef, user_ecef);
    if (d.d_su_m <= 0.0 || d.d_sr_m <= 0.0 || d.d_ru_m <= 0.0) {
        throw std::invalid_argument("degenerate geometry: coincident scenario points");
    }
    return d;
}

double great_circle_bearing(const GeodeticPoint& from, const GeodeticPoint& to) {
    const double dlon = to.lon_rad - from.lon_rad;
    const double y = std::sin(dlon) * std::cos(to.lat_rad);
    const double x = std::cos(from.lat_rad) * std::sin(to.lat_rad) -
                     std::sin(from.lat_rad) * std::cos(to.lat_rad) * std::cos(dlon);
    if (x == 0.0 && y == 0.0) {
        throw std::invalid_argument("bearing undefined: points share lat/lon");
    }
    return wrap_two_pi(std::atan2(y, x));
}

GeodeticPoint destination_point(const GeodeticPoint& start, double bearing_rad,
                                double central_angle_rad) {
    const double sin_lat = std::sin(start.lat_rad);
    const double cos_lat = std::cos(start.lat_rad);
    const double sin_arc = std::sin(central_angle_rad);
    const double cos_arc = std::cos(central_angle_rad);

    const double lat2 =
        std::asin(sin_lat * cos_arc + cos_lat * sin_arc * std::cos(bearing_rad));
    const double lon2 = start.lon_rad +
                        std::atan2(std::sin(bearing_rad) * sin_arc * cos_lat,
                                   cos_arc - sin_lat * std::sin(lat2));
    return GeodeticPoint{lat2, normalize_longitude(lon2), start.alt_m};
}

}  // namespace rislink
