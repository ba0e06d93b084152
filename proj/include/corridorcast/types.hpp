#ifndef CORRIDORCAST_TYPES_HPP
#define CORRIDORCAST_TYPES_HPP

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corridorcast/dates.hpp"

namespace corridorcast {

using SegmentId = std::string;

struct SpeedObservation {
    SegmentId segment_id;
    SlotIndex at;
    double speed_mph = 0.0;  // > 0

    auto operator<=>(const SpeedObservation&) const = default;
};

struct CountObservation {
    std::string sensor_id;
    SlotIndex at;
    int vehicles = 0;  // >= 0 per 5-min bin

    auto operator<=>(const CountObservation&) const = default;
};

enum class LocationTag {
    Upstream,
    Downstream,
    DownstreamFar,
    OppositeDirection,
    AlternativeRoute,
    FarUpstreamRegion,
};

enum class IncidentKind {
    Crash,
    EmergencyRoadwork,
    PlannedWorkZone,
    DisabledVehicle,
};

struct IncidentRecord {
    std::string id;
    TimestampMin start = 0;
    TimestampMin end = 0;  // >= start
    LocationTag location = LocationTag::Upstream;
    IncidentKind kind = IncidentKind::Crash;
    int lanes_closed = 0;
    int injuries = 0;
    int vehicles_involved = 0;

    /// Severe incidents are those with personal injuries reported.
    bool severe() const { return injuries > 0; }

    auto operator<=>(const IncidentRecord&) const = default;
};

enum class PrecipType { None, Rain, Snow };
enum class Pavement { Dry, Wet };

struct WeatherObservation {
    Date day;
    int hour = 0;  // 0..23
    double temp_f = 0.0;
    double wind_chill_f = 0.0;
    double precip_in_hr = 0.0;  // >= 0; 0 when precip == None
    PrecipType precip = PrecipType::None;
    double visibility_mi = 0.0;  // >= 0
    double wind_mph = 0.0;       // >= 0
    double gust_mph = 0.0;       // >= 0
    double pressure_mb = 0.0;    // > 0
    Pavement pavement = Pavement::Dry;

    TimestampMin timestamp() const {
        return static_cast<TimestampMin>(day.days) * 1440 + hour * 60;
    }

    auto operator<=>(const WeatherObservation&) const = default;
};

struct EventRecord {
    Date day;
    std::string kind;

    auto operator<=>(const EventRecord&) const = default;
};

std::string_view to_string(LocationTag tag);
std::string_view to_string(IncidentKind kind);
std::string_view to_string(PrecipType type);
std::string_view to_string(Pavement pavement);

LocationTag location_tag_from_string(std::string_view text);  // throws UnknownLocationTag
IncidentKind incident_kind_from_string(std::string_view text);
PrecipType precip_type_from_string(std::string_view text);
Pavement pavement_from_string(std::string_view text);

struct TargetSegment {
    SegmentId id;
    double length_miles = 0.0;  // > 0
};

/// Corridor configuration: the target stretch, the role of every other
/// segment relative to it, grid/window/lag settings and the count sensors
/// used for the demand proxies.
struct CorridorSpec {
    std::vector<TargetSegment> target_segments;
    std::map<SegmentId, LocationTag> segment_roles;
    std::map<SegmentId, double> free_flow_mph;  // derived during ingest

    int window_start_slot = 168;  // 14:00, half-open [start, end)
    int window_end_slot = 216;    // 18:00
    int horizon_minutes = 30;
    std::vector<int> lag_minutes = {30, 35, 40, 45, 50, 55};

    std::vector<std::string> morning_sensors;    // opposite-direction counts
    std::vector<std::string> afternoon_sensors;  // corridor-direction counts
    std::vector<SegmentId> clustering_segments;  // empty = all configured

    Date range_start;
    Date range_end;

    int horizon_slots() const { return horizon_minutes / kSlotMinutes; }
    bool is_target(const SegmentId& id) const;
    /// Targets first (declared order) then the remaining role-map segments
    /// sorted by id; the canonical column order everywhere downstream.
    std::vector<SegmentId> all_segments() const;

    void validate() const;  // throws InvalidConfig
};

CorridorSpec load_corridor_json(const std::string& path);
void save_corridor_json(const std::string& path, const CorridorSpec& spec);

/// Travel rate in minutes/mile over the target segments at one slot:
/// 60 * (sum_i L_i / v_i) / (sum_i L_i), the reciprocal of space-mean speed.
/// Throws MissingSegment / NonPositiveSpeed.
double travel_rate(const std::map<SegmentId, double>& speed_by_segment,
                   const CorridorSpec& spec);
double travel_rate(std::span<const double> speeds, std::span<const double> lengths);

struct TravelRateSample {
    SlotIndex at;
    double rate = 0.0;  // minutes/mile, > 0
};

}  // namespace corridorcast

#endif
