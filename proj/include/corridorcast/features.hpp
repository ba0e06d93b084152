#ifndef CORRIDORCAST_FEATURES_HPP
#define CORRIDORCAST_FEATURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "corridorcast/align.hpp"

namespace corridorcast {

enum class FeatureTag { Speed, Incident, Weather, Event, Demand, TimeOfDay };

std::string_view to_string(FeatureTag tag);
FeatureTag feature_tag_from_string(std::string_view text);

struct FeatureColumn {
    std::string name;
    FeatureTag tag = FeatureTag::Speed;
    SegmentId segment;     // Speed columns only
    int lag_minutes = 0;   // Speed columns only
    std::vector<double> values;
};

/// Year-level calibration for the extreme-weather indicators: strictly
/// above the 80th percentile for wind and precipitation intensity, strictly
/// below the 20th percentile for visibility (low visibility is the hazard).
struct WeatherThresholds {
    double wind_p80 = 0.0;
    double visibility_p20 = 0.0;
    double precip_p80 = 0.0;
};

WeatherThresholds compute_weather_thresholds(const AlignedDataset& aligned);

/// One row per (kept day, window slot) with a complete set of cells; rows
/// with any missing cell are dropped and counted. Every feature cell is
/// information available at (row time - horizon) or earlier; the target is
/// the travel rate at the row time itself.
struct FeatureMatrix {
    std::vector<Date> row_day;
    std::vector<int> row_slot;
    std::vector<double> target;
    std::vector<FeatureColumn> columns;
    WeatherThresholds thresholds;
    size_t dropped_rows = 0;

    size_t n_rows() const { return target.size(); }
    size_t n_cols() const { return columns.size(); }
    int column_index(const std::string& name) const;  // -1 when absent
    const FeatureColumn& column(const std::string& name) const;  // throws
};

// Column builders, all evaluated on the candidate row grid
// (kept day x window slot); NaN cells cause row drops at assembly.

/// speed[SEG][-L]: speed of SEG at slot t - L/5.
std::vector<FeatureColumn> lagged_speed_columns(const AlignedDataset& aligned);

/// Binary activity columns by incident location/severity. An incident
/// counts for a row iff it had started by, and had not ended before, the
/// prediction instant t - horizon.
std::vector<FeatureColumn> incident_columns(const AlignedDataset& aligned);

/// Continuous weather channels, precip one-hots, pavement_wet and the three
/// extreme indicators; values read at the prediction instant.
std::vector<FeatureColumn> weather_columns(const AlignedDataset& aligned,
                                           const WeatherThresholds& thresholds);

/// event_<kind>: 1 on every row of a day with that event kind.
std::vector<FeatureColumn> event_columns(const AlignedDataset& aligned,
                                         std::span<const EventRecord> events);

/// morning_demand: cumulative opposite-direction counts in [04:00, T*);
/// afternoon_demand: cumulative counts from 12:00, clipped to bins observable
/// by the prediction instant and capped at 15:00.
std::vector<FeatureColumn> demand_columns(const AlignedDataset& aligned);

FeatureColumn hour_of_day_column(const AlignedDataset& aligned);

/// Assembles all builders plus the target; drops incomplete rows. Throws
/// EmptyMatrix when nothing survives. Pass pinned thresholds to rebuild a
/// matrix under censored data with the original calibration.
FeatureMatrix build_feature_matrix(const AlignedDataset& aligned,
                                   std::span<const EventRecord> events,
                                   std::optional<WeatherThresholds> pinned = std::nullopt);

void write_features_csv(const std::string& path, const FeatureMatrix& matrix);
void write_features_meta_json(const std::string& path, const FeatureMatrix& matrix);
FeatureMatrix load_features_csv(const std::string& csv_path, const std::string& meta_path);

}  // namespace corridorcast

#endif
