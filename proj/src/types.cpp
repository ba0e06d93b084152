#include "corridorcast/types.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

#include "corridorcast/errors.hpp"

namespace corridorcast {

using nlohmann::json;

std::string_view to_string(LocationTag tag) {
    switch (tag) {
        case LocationTag::Upstream: return "Upstream";
        case LocationTag::Downstream: return "Downstream";
        case LocationTag::DownstreamFar: return "DownstreamFar";
        case LocationTag::OppositeDirection: return "OppositeDirection";
        case LocationTag::AlternativeRoute: return "AlternativeRoute";
        case LocationTag::FarUpstreamRegion: return "FarUpstreamRegion";
    }
    return "?";
}

std::string_view to_string(IncidentKind kind) {
    switch (kind) {
        case IncidentKind::Crash: return "Crash";
        case IncidentKind::EmergencyRoadwork: return "EmergencyRoadwork";
        case IncidentKind::PlannedWorkZone: return "PlannedWorkZone";
        case IncidentKind::DisabledVehicle: return "DisabledVehicle";
    }
    return "?";
}

std::string_view to_string(PrecipType type) {
    switch (type) {
        case PrecipType::None: return "None";
        case PrecipType::Rain: return "Rain";
        case PrecipType::Snow: return "Snow";
    }
    return "?";
}

std::string_view to_string(Pavement pavement) {
    return pavement == Pavement::Dry ? "Dry" : "Wet";
}

LocationTag location_tag_from_string(std::string_view text) {
    for (auto tag : {LocationTag::Upstream, LocationTag::Downstream, LocationTag::DownstreamFar,
                     LocationTag::OppositeDirection, LocationTag::AlternativeRoute,
                     LocationTag::FarUpstreamRegion})
        if (text == to_string(tag)) return tag;
    throw Error(ErrorCode::UnknownLocationTag, "'" + std::string(text) + "'");
}

IncidentKind incident_kind_from_string(std::string_view text) {
    for (auto kind : {IncidentKind::Crash, IncidentKind::EmergencyRoadwork,
                      IncidentKind::PlannedWorkZone, IncidentKind::DisabledVehicle})
        if (text == to_string(kind)) return kind;
    throw Error(ErrorCode::InvalidArgument, "unknown incident kind '" + std::string(text) + "'");
}

PrecipType precip_type_from_string(std::string_view text) {
    for (auto type : {PrecipType::None, PrecipType::Rain, PrecipType::Snow})
        if (text == to_string(type)) return type;
    throw Error(ErrorCode::InvalidArgument, "unknown precip type '" + std::string(text) + "'");
}

Pavement pavement_from_string(std::string_view text) {
    if (text == "Dry") return Pavement::Dry;
    if (text == "Wet") return Pavement::Wet;
    throw Error(ErrorCode::InvalidArgument, "unknown pavement '" + std::string(text) + "'");
}

bool CorridorSpec::is_target(const SegmentId& id) const {
    return std::any_of(target_segments.begin(), target_segments.end(),
                       [&](const TargetSegment& t) { return t.id == id; });
}

std::vector<SegmentId> CorridorSpec::all_segments() const {
    std::vector<SegmentId> out;
    for (const auto& t : target_segments) out.push_back(t.id);
    for (const auto& [id, tag] : segment_roles)
        if (!is_target(id)) out.push_back(id);  // map iteration is id-sorted
    return out;
}

void CorridorSpec::validate() const {
    if (target_segments.empty())
        throw Error(ErrorCode::InvalidConfig, "corridor has no target segments");
    std::set<SegmentId> seen;
    for (const auto& t : target_segments) {
        if (t.length_miles <= 0.0)
            throw Error(ErrorCode::InvalidConfig, "segment " + t.id + " has non-positive length");
        if (!seen.insert(t.id).second)
            throw Error(ErrorCode::InvalidConfig, "duplicate target segment " + t.id);
    }
    if (!valid_slot(window_start_slot) || window_end_slot <= window_start_slot ||
        window_end_slot > kSlotsPerDay)
        throw Error(ErrorCode::InvalidConfig, "bad prediction window");
    if (horizon_minutes <= 0 || horizon_minutes % kSlotMinutes != 0)
        throw Error(ErrorCode::InvalidConfig, "horizon must be a positive multiple of 5 minutes");
    if (lag_minutes.empty()) throw Error(ErrorCode::InvalidConfig, "no lags configured");
    for (int lag : lag_minutes) {
        if (lag <= 0 || lag % kSlotMinutes != 0)
            throw Error(ErrorCode::InvalidConfig, "lags must be positive multiples of 5 minutes");
        if (horizon_minutes > lag)
            throw Error(ErrorCode::InvalidConfig, "horizon exceeds lag " + std::to_string(lag));
    }
    if (range_end < range_start) throw Error(ErrorCode::InvalidConfig, "date range reversed");
    for (const auto& id : clustering_segments)
        if (!is_target(id) && !segment_roles.count(id))
            throw Error(ErrorCode::InvalidConfig, "clustering segment " + id + " not configured");
}

CorridorSpec load_corridor_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, path + ": " + e.what());
    }
    try {
        CorridorSpec spec;
        for (const auto& item : doc.at("target_segments"))
            spec.target_segments.push_back(
                {item.at("id").get<std::string>(), item.at("length_miles").get<double>()});
        for (const auto& [id, tag] : doc.at("segment_roles").items())
            spec.segment_roles[id] = location_tag_from_string(tag.get<std::string>());
        if (doc.contains("prediction_window")) {
            spec.window_start_slot = doc["prediction_window"].at(0).get<int>();
            spec.window_end_slot = doc["prediction_window"].at(1).get<int>();
        }
        spec.horizon_minutes = doc.value("horizon_minutes", 30);
        if (doc.contains("lag_minutes"))
            spec.lag_minutes = doc["lag_minutes"].get<std::vector<int>>();
        spec.morning_sensors = doc.value("morning_sensors", std::vector<std::string>{});
        spec.afternoon_sensors = doc.value("afternoon_sensors", std::vector<std::string>{});
        spec.clustering_segments = doc.value("clustering_segments", std::vector<std::string>{});
        spec.range_start = Date::parse(doc.at("date_range").at(0).get<std::string>());
        spec.range_end = Date::parse(doc.at("date_range").at(1).get<std::string>());
        spec.validate();
        return spec;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, path + ": " + e.what());
    }
}

void save_corridor_json(const std::string& path, const CorridorSpec& spec) {
    json doc;
    doc["target_segments"] = json::array();
    for (const auto& t : spec.target_segments)
        doc["target_segments"].push_back({{"id", t.id}, {"length_miles", t.length_miles}});
    json roles = json::object();
    for (const auto& [id, tag] : spec.segment_roles) roles[id] = std::string(to_string(tag));
    doc["segment_roles"] = roles;
    doc["prediction_window"] = {spec.window_start_slot, spec.window_end_slot};
    doc["horizon_minutes"] = spec.horizon_minutes;
    doc["lag_minutes"] = spec.lag_minutes;
    doc["morning_sensors"] = spec.morning_sensors;
    doc["afternoon_sensors"] = spec.afternoon_sensors;
    doc["clustering_segments"] = spec.clustering_segments;
    doc["date_range"] = {spec.range_start.to_string(), spec.range_end.to_string()};
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
    out << doc.dump(2) << '\n';
}

double travel_rate(std::span<const double> speeds, std::span<const double> lengths) {
    if (speeds.size() != lengths.size() || speeds.empty())
        throw Error(ErrorCode::InvalidArgument, "travel_rate inputs mismatched");
    double time_hours = 0.0;
    double total_length = 0.0;
    for (size_t i = 0; i < speeds.size(); ++i) {
        if (speeds[i] <= 0.0)
            throw Error(ErrorCode::NonPositiveSpeed, "speed must be positive");
        time_hours += lengths[i] / speeds[i];
        total_length += lengths[i];
    }
    return 60.0 * time_hours / total_length;
}

double travel_rate(const std::map<SegmentId, double>& speed_by_segment,
                   const CorridorSpec& spec) {
    std::vector<double> speeds, lengths;
    speeds.reserve(spec.target_segments.size());
    lengths.reserve(spec.target_segments.size());
    for (const auto& t : spec.target_segments) {
        auto it = speed_by_segment.find(t.id);
        if (it == speed_by_segment.end())
            throw Error(ErrorCode::MissingSegment, "no speed for target segment " + t.id);
        speeds.push_back(it->second);
        lengths.push_back(t.length_miles);
    }
    return travel_rate(speeds, lengths);
}

}  // namespace corridorcast
