#ifndef CORRIDORCAST_DATASET_HPP
#define CORRIDORCAST_DATASET_HPP

#include <string>
#include <vector>

#include "corridorcast/types.hpp"

namespace corridorcast {

struct RejectedRow {
    size_t line = 0;
    std::string reason;
};

struct ParseReport {
    std::string path;
    size_t accepted = 0;
    std::vector<RejectedRow> rejected;
};

// CSV schemas (header row mandatory, ISO-8601 dates):
//   speeds.csv    segment_id,date,slot,speed_mph
//   counts.csv    sensor_id,date,slot,vehicles
//   incidents.csv id,start,end,location_tag,kind,lanes_closed,injuries,vehicles_involved
//   weather.csv   date,hour,temp_f,wind_chill_f,precip_in_hr,precip_type,visibility_mi,
//                 wind_mph,gust_mph,pressure_mb,pavement
//   events.csv    date,kind
// Well-formed rows become records; malformed rows land in the report with
// their line number and are never silently dropped.

std::vector<SpeedObservation> parse_speeds_csv(const std::string& path, ParseReport& report);
std::vector<CountObservation> parse_counts_csv(const std::string& path, ParseReport& report);
std::vector<IncidentRecord> parse_incidents_csv(const std::string& path, ParseReport& report);
std::vector<WeatherObservation> parse_weather_csv(const std::string& path, ParseReport& report);
std::vector<EventRecord> parse_events_csv(const std::string& path, ParseReport& report);

void write_speeds_csv(const std::string& path, std::span<const SpeedObservation> rows);
void write_counts_csv(const std::string& path, std::span<const CountObservation> rows);
void write_incidents_csv(const std::string& path, std::span<const IncidentRecord> rows);
void write_weather_csv(const std::string& path, std::span<const WeatherObservation> rows);
void write_events_csv(const std::string& path, std::span<const EventRecord> rows);

/// The five parsed collections plus the corridor configuration.
struct Dataset {
    std::vector<SpeedObservation> speeds;
    std::vector<CountObservation> counts;
    std::vector<IncidentRecord> incidents;
    std::vector<WeatherObservation> weather;
    std::vector<EventRecord> events;
    CorridorSpec spec;
    std::vector<ParseReport> reports;
};

struct DatasetPaths {
    std::string speeds;
    std::string counts;
    std::string incidents;
    std::string weather;
    std::string events;
    std::string corridor;
};

Dataset load_dataset(const DatasetPaths& paths);

/// Copy with every observation whose timestamp lies in (open_min, close_min]
/// removed. Speed/count timestamps are bin starts, weather timestamps are
/// hour starts, incidents go by their report (start) time, events by day
/// start. Used by the leakage audit.
Dataset censored_copy(const Dataset& data, TimestampMin open_min, TimestampMin close_min);

}  // namespace corridorcast

#endif
