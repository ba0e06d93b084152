#include "corridorcast/dataset.hpp"

#include <set>

#include "corridorcast/csv.hpp"
#include "corridorcast/errors.hpp"

namespace corridorcast {

namespace {

using Fields = std::vector<std::string>;

/// Runs one row-builder and files any Error as a rejection.
template <typename Fn>
void guarded_row(ParseReport& report, size_t line, Fn&& build) {
    try {
        build();
        ++report.accepted;
    } catch (const Error& e) {
        report.rejected.push_back({line, e.what()});
    }
}

SlotIndex parse_slot_index(const std::string& date, const std::string& slot) {
    SlotIndex at{Date::parse(date), static_cast<int>(csv::parse_int(slot))};
    if (!valid_slot(at.slot))
        throw Error(ErrorCode::InvalidArgument, "slot " + slot + " out of range 0..287");
    return at;
}

}  // namespace

std::vector<SpeedObservation> parse_speeds_csv(const std::string& path, ParseReport& report) {
    report.path = path;
    csv::Reader reader(path, {"segment_id", "date", "slot", "speed_mph"});
    std::vector<SpeedObservation> out;
    Fields f;
    while (reader.next(f)) {
        guarded_row(report, reader.line_number(), [&] {
            if (f.size() != 4) throw Error(ErrorCode::InvalidArgument, "expected 4 fields");
            SpeedObservation obs{f[0], parse_slot_index(f[1], f[2]), csv::parse_double(f[3])};
            if (obs.segment_id.empty())
                throw Error(ErrorCode::InvalidArgument, "empty segment id");
            if (obs.speed_mph <= 0.0)
                throw Error(ErrorCode::NonPositiveSpeed, "speed " + f[3]);
            out.push_back(std::move(obs));
        });
    }
    return out;
}

std::vector<CountObservation> parse_counts_csv(const std::string& path, ParseReport& report) {
    report.path = path;
    csv::Reader reader(path, {"sensor_id", "date", "slot", "vehicles"});
    std::vector<CountObservation> out;
    Fields f;
    while (reader.next(f)) {
        guarded_row(report, reader.line_number(), [&] {
            if (f.size() != 4) throw Error(ErrorCode::InvalidArgument, "expected 4 fields");
            CountObservation obs{f[0], parse_slot_index(f[1], f[2]),
                                 static_cast<int>(csv::parse_int(f[3]))};
            if (obs.sensor_id.empty()) throw Error(ErrorCode::InvalidArgument, "empty sensor id");
            if (obs.vehicles < 0)
                throw Error(ErrorCode::InvalidArgument, "negative vehicle count");
            out.push_back(std::move(obs));
        });
    }
    return out;
}

std::vector<IncidentRecord> parse_incidents_csv(const std::string& path, ParseReport& report) {
    report.path = path;
    csv::Reader reader(path, {"id", "start", "end", "location_tag", "kind", "lanes_closed",
                              "injuries", "vehicles_involved"});
    std::vector<IncidentRecord> out;
    Fields f;
    while (reader.next(f)) {
        guarded_row(report, reader.line_number(), [&] {
            if (f.size() != 8) throw Error(ErrorCode::InvalidArgument, "expected 8 fields");
            IncidentRecord rec;
            rec.id = f[0];
            rec.start = parse_timestamp(f[1]);
            rec.end = parse_timestamp(f[2]);
            rec.location = location_tag_from_string(f[3]);
            rec.kind = incident_kind_from_string(f[4]);
            rec.lanes_closed = static_cast<int>(csv::parse_int(f[5]));
            rec.injuries = static_cast<int>(csv::parse_int(f[6]));
            rec.vehicles_involved = static_cast<int>(csv::parse_int(f[7]));
            if (rec.id.empty()) throw Error(ErrorCode::InvalidArgument, "empty incident id");
            if (rec.end < rec.start)
                throw Error(ErrorCode::InvalidArgument, "incident ends before it starts");
            if (rec.lanes_closed < 0 || rec.injuries < 0 || rec.vehicles_involved < 0)
                throw Error(ErrorCode::InvalidArgument, "negative incident attribute");
            out.push_back(std::move(rec));
        });
    }
    return out;
}

std::vector<WeatherObservation> parse_weather_csv(const std::string& path, ParseReport& report) {
    report.path = path;
    csv::Reader reader(path, {"date", "hour", "temp_f", "wind_chill_f", "precip_in_hr",
                              "precip_type", "visibility_mi", "wind_mph", "gust_mph",
                              "pressure_mb", "pavement"});
    std::vector<WeatherObservation> out;
    Fields f;
    while (reader.next(f)) {
        guarded_row(report, reader.line_number(), [&] {
            if (f.size() != 11) throw Error(ErrorCode::InvalidArgument, "expected 11 fields");
            WeatherObservation obs;
            obs.day = Date::parse(f[0]);
            obs.hour = static_cast<int>(csv::parse_int(f[1]));
            obs.temp_f = csv::parse_double(f[2]);
            obs.wind_chill_f = csv::parse_double(f[3]);
            obs.precip_in_hr = csv::parse_double(f[4]);
            obs.precip = precip_type_from_string(f[5]);
            obs.visibility_mi = csv::parse_double(f[6]);
            obs.wind_mph = csv::parse_double(f[7]);
            obs.gust_mph = csv::parse_double(f[8]);
            obs.pressure_mb = csv::parse_double(f[9]);
            obs.pavement = pavement_from_string(f[10]);
            if (obs.hour < 0 || obs.hour > 23)
                throw Error(ErrorCode::InvalidArgument, "hour out of range");
            if (obs.precip_in_hr < 0.0 || obs.visibility_mi < 0.0 || obs.wind_mph < 0.0 ||
                obs.gust_mph < 0.0)
                throw Error(ErrorCode::InvalidArgument, "negative weather magnitude");
            if (obs.pressure_mb <= 0.0)
                throw Error(ErrorCode::InvalidArgument, "non-positive pressure");
            if (obs.precip == PrecipType::None && obs.precip_in_hr != 0.0)
                throw Error(ErrorCode::InvalidArgument,
                            "precip_type None with nonzero intensity");
            out.push_back(obs);
        });
    }
    return out;
}

std::vector<EventRecord> parse_events_csv(const std::string& path, ParseReport& report) {
    report.path = path;
    csv::Reader reader(path, {"date", "kind"});
    std::vector<EventRecord> out;
    std::set<std::pair<int32_t, std::string>> seen;
    Fields f;
    while (reader.next(f)) {
        guarded_row(report, reader.line_number(), [&] {
            if (f.size() != 2) throw Error(ErrorCode::InvalidArgument, "expected 2 fields");
            EventRecord rec{Date::parse(f[0]), f[1]};
            if (rec.kind.empty()) throw Error(ErrorCode::InvalidArgument, "empty event kind");
            if (!seen.insert({rec.day.days, rec.kind}).second)
                throw Error(ErrorCode::InvalidArgument,
                            "duplicate event (" + f[0] + ", " + f[1] + ")");
            out.push_back(std::move(rec));
        });
    }
    return out;
}

void write_speeds_csv(const std::string& path, std::span<const SpeedObservation> rows) {
    csv::Writer w(path);
    w.raw_line("segment_id,date,slot,speed_mph");
    for (const auto& r : rows)
        w.raw_line(r.segment_id + ',' + r.at.day.to_string() + ',' + std::to_string(r.at.slot) +
                   ',' + csv::fmt_fixed(r.speed_mph, 4));
}

void write_counts_csv(const std::string& path, std::span<const CountObservation> rows) {
    csv::Writer w(path);
    w.raw_line("sensor_id,date,slot,vehicles");
    for (const auto& r : rows)
        w.raw_line(r.sensor_id + ',' + r.at.day.to_string() + ',' + std::to_string(r.at.slot) +
                   ',' + std::to_string(r.vehicles));
}

void write_incidents_csv(const std::string& path, std::span<const IncidentRecord> rows) {
    csv::Writer w(path);
    w.raw_line("id,start,end,location_tag,kind,lanes_closed,injuries,vehicles_involved");
    for (const auto& r : rows)
        w.raw_line(r.id + ',' + format_timestamp(r.start) + ',' + format_timestamp(r.end) + ',' +
                   std::string(to_string(r.location)) + ',' + std::string(to_string(r.kind)) +
                   ',' + std::to_string(r.lanes_closed) + ',' + std::to_string(r.injuries) + ',' +
                   std::to_string(r.vehicles_involved));
}

void write_weather_csv(const std::string& path, std::span<const WeatherObservation> rows) {
    csv::Writer w(path);
    w.raw_line(
        "date,hour,temp_f,wind_chill_f,precip_in_hr,precip_type,visibility_mi,wind_mph,"
        "gust_mph,pressure_mb,pavement");
    for (const auto& r : rows)
        w.raw_line(r.day.to_string() + ',' + std::to_string(r.hour) + ',' +
                   csv::fmt_fixed(r.temp_f, 1) + ',' + csv::fmt_fixed(r.wind_chill_f, 1) + ',' +
                   csv::fmt_fixed(r.precip_in_hr, 3) + ',' + std::string(to_string(r.precip)) +
                   ',' + csv::fmt_fixed(r.visibility_mi, 2) + ',' + csv::fmt_fixed(r.wind_mph, 1) +
                   ',' + csv::fmt_fixed(r.gust_mph, 1) + ',' + csv::fmt_fixed(r.pressure_mb, 1) +
                   ',' + std::string(to_string(r.pavement)));
}

void write_events_csv(const std::string& path, std::span<const EventRecord> rows) {
    csv::Writer w(path);
    w.raw_line("date,kind");
    for (const auto& r : rows) w.raw_line(r.day.to_string() + ',' + r.kind);
}

Dataset load_dataset(const DatasetPaths& paths) {
    Dataset data;
    data.spec = load_corridor_json(paths.corridor);
    data.reports.resize(5);
    data.speeds = parse_speeds_csv(paths.speeds, data.reports[0]);
    data.counts = parse_counts_csv(paths.counts, data.reports[1]);
    data.incidents = parse_incidents_csv(paths.incidents, data.reports[2]);
    data.weather = parse_weather_csv(paths.weather, data.reports[3]);
    data.events = parse_events_csv(paths.events, data.reports[4]);
    return data;
}

Dataset censored_copy(const Dataset& data, TimestampMin open_min, TimestampMin close_min) {
    Dataset out;
    out.spec = data.spec;
    auto keep = [&](TimestampMin ts) { return ts <= open_min || ts > close_min; };
    for (const auto& r : data.speeds)
        if (keep(r.at.timestamp())) out.speeds.push_back(r);
    for (const auto& r : data.counts)
        if (keep(r.at.timestamp())) out.counts.push_back(r);
    for (const auto& r : data.incidents)
        if (keep(r.start)) out.incidents.push_back(r);
    for (const auto& r : data.weather)
        if (keep(r.timestamp())) out.weather.push_back(r);
    for (const auto& r : data.events)
        if (keep(static_cast<TimestampMin>(r.day.days) * 1440)) out.events.push_back(r);
    return out;
}

}  // namespace corridorcast
