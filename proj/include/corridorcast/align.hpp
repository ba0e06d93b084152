#ifndef CORRIDORCAST_ALIGN_HPP
#define CORRIDORCAST_ALIGN_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "corridorcast/dataset.hpp"

namespace corridorcast {

inline constexpr int kMaxImputeGapSlots = 3;       // 15 minutes
inline constexpr int kWeatherFillMaxHours = 3;
inline constexpr int kOvernightEndSlot = 48;       // 00:00-04:00
inline constexpr int kMinFreeFlowDays = 30;
inline constexpr double kFreeFlowQuantile = 0.85;
inline constexpr double kBreakdownFraction = 0.9;  // of free-flow speed
inline constexpr int kBreakdownSearchStart = 48;   // 04:00
inline constexpr int kBreakdownSearchEnd = 144;    // noon
inline constexpr int kDefaultBreakdownSlot = 78;   // 06:30

/// Fills interior gaps of <= max_gap slots by linear interpolation between
/// the bounding observations; a longer interior gap sets `flagged`. Leading
/// and trailing missing runs stay missing (nothing to interpolate against).
void impute_series_gaps(std::span<double> day_series, int max_gap, bool& flagged,
                        size_t& imputed_cells);

/// Everything downstream works off this grid-aligned view of a Dataset.
struct AlignedDataset {
    CorridorSpec spec;  // free_flow_mph filled where derivable

    std::vector<Date> days;  // sorted speed-observation days inside the range
    std::map<Date, int> day_index;

    std::vector<SegmentId> segments;  // canonical order, see CorridorSpec
    std::map<SegmentId, int> segment_index;
    std::vector<std::vector<double>> speeds;     // [seg][day*288+slot], NaN missing
    std::vector<std::vector<char>> gap_flagged;  // [seg][day]
    std::vector<char> day_kept;                  // no target segment flagged

    std::vector<std::string> sensors;
    std::map<std::string, int> sensor_index;
    std::vector<std::vector<int>> counts;  // [sensor][day*288+slot], -1 missing

    struct WeatherGrid {
        std::vector<double> temp_f, wind_chill_f, precip_in_hr, visibility_mi, wind_mph,
            gust_mph, pressure_mb;     // NaN missing
        std::vector<int8_t> precip;    // -1 missing, else PrecipType
        std::vector<int8_t> pavement;  // -1 missing, else Pavement
        bool missing(size_t cell) const { return precip[cell] < 0; }
    };
    WeatherGrid weather;

    int breakdown_cutoff_slot = kDefaultBreakdownSlot;  // T*

    /// Travel rate over the prediction window, [day * window_width + offset];
    /// NaN where a target-segment speed is missing at that slot.
    std::vector<double> rate;

    size_t imputed_cells = 0;
    size_t duplicate_cells = 0;
    size_t unknown_segment_rows = 0;
    size_t out_of_range_rows = 0;

    int window_width() const { return spec.window_end_slot - spec.window_start_slot; }
    size_t cell(int day, int slot) const {
        return static_cast<size_t>(day) * kSlotsPerDay + static_cast<size_t>(slot);
    }
    double speed_at(int seg, int day, int slot) const { return speeds[seg][cell(day, slot)]; }
    double rate_at(int day, int window_offset) const {
        return rate[static_cast<size_t>(day) * window_width() + window_offset];
    }
    std::vector<Date> kept_days() const;
};

/// 85th percentile of overnight (00:00-04:00) speeds; requires overnight
/// data on at least kMinFreeFlowDays days. Throws InsufficientData.
double free_flow_speed(const AlignedDataset& aligned, const SegmentId& segment);

/// Earliest slot, over all days, at which any opposite-direction segment
/// drops below kBreakdownFraction of its free-flow speed (searched within
/// the morning); kDefaultBreakdownSlot when no day ever breaks down.
int breakdown_cutoff(const AlignedDataset& aligned);

/// Full ingest: place observations on the grid, impute short speed gaps,
/// flag long ones, replicate hourly weather (forward-filled up to
/// kWeatherFillMaxHours), derive free-flow speeds and T*, and compute the
/// travel-rate series for kept days.
AlignedDataset align_dataset(const Dataset& data);

}  // namespace corridorcast

#endif
