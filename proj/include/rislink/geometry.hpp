#pragma once

#include <compare>

#include "rislink/units.hpp"

namespace rislink {

/// Spherical Earth with configurable mean radius.
struct EarthModel {
    double radius_m = 6371000.0;

    bool operator==(const EarthModel&) const = default;
};

/// Position as geodetic latitude/longitude on (or above) the sphere.
/// Latitude in [-pi/2, pi/2], longitude in [-pi, pi], altitude >= 0.
struct GeodeticPoint {
    double lat_rad = 0.0;
    double lon_rad = 0.0;
    double alt_m = 0.0;

    bool operator==(const GeodeticPoint&) const = default;
};

/// Earth-centered, Earth-fixed Cartesian position in meters.
struct EcefVector {
    double x_m = 0.0;
    double y_m = 0.0;
    double z_m = 0.0;

    bool operator==(const EcefVector&) const = default;
};

/// The three propagation path lengths of the satellite/RIS/user triangle.
struct PropagationDistances {
    double d_su_m = 0.0;  // satellite -> user (direct)
    double d_sr_m = 0.0;  // satellite -> RIS
    double d_ru_m = 0.0;  // RIS -> user

    bool operator==(const PropagationDistances&) const = default;
};

/// Convert a geodetic point to ECEF on a sphere of radius R + altitude.
///
/// Longitude is normalized into [-pi, pi] before the trig calls, so any
/// finite longitude is accepted. Throws std::invalid_argument for non-finite
/// components, latitude outside [-pi/2, pi/2], or negative altitude.
EcefVector to_ecef(const GeodeticPoint& point, const EarthModel& earth);

/// Euclidean distance between two ECEF positions, meters.
/// Throws std::invalid_argument on non-finite input.
double euclidean_distance(const EcefVector& a, const EcefVector& b);

/// All three path lengths for a satellite/RIS/user configuration.
///
/// Requires satellite altitude > 0 and pairwise-distinct positions; a
/// coincident pair would put a zero distance into the path-loss model.
PropagationDistances scenario_distances(const GeodeticPoint& satellite,
                                        const GeodeticPoint& ris,
                                        const GeodeticPoint& user,
                                        const EarthModel& earth);

/// Initial great-circle bearing from `from` toward `to`, radians in [0, 2*pi).
/// Undefined (throws) when the two points share latitude and longitude.
double great_circle_bearing(const GeodeticPoint& from, const GeodeticPoint& to);

/// Point reached by traveling `central_angle_rad` along the great circle from
/// `start` with the given initial bearing. Altitude is preserved.
GeodeticPoint destination_point(const GeodeticPoint& start, double bearing_rad,
                                double central_angle_rad);

}  // namespace rislink
