#include "corridorcast/align.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "corridorcast/errors.hpp"
#include "corridorcast/log.hpp"
#include "corridorcast/stats.hpp"

namespace corridorcast {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

void impute_series_gaps(std::span<double> day_series, int max_gap, bool& flagged,
                        size_t& imputed_cells) {
    flagged = false;
    const int n = static_cast<int>(day_series.size());
    int prev = -1;  // last observed slot
    for (int s = 0; s < n; ++s) {
        if (std::isnan(day_series[s])) continue;
        if (prev >= 0 && s - prev > 1) {
            const int gap = s - prev - 1;
            if (gap <= max_gap) {
                const double lo = day_series[prev];
                const double hi = day_series[s];
                for (int g = prev + 1; g < s; ++g) {
                    const double t = static_cast<double>(g - prev) / (s - prev);
                    day_series[g] = lo + t * (hi - lo);
                    ++imputed_cells;
                }
            } else {
                flagged = true;
            }
        }
        prev = s;
    }
}

std::vector<Date> AlignedDataset::kept_days() const {
    std::vector<Date> out;
    for (size_t d = 0; d < days.size(); ++d)
        if (day_kept[d]) out.push_back(days[d]);
    return out;
}

double free_flow_speed(const AlignedDataset& aligned, const SegmentId& segment) {
    auto it = aligned.segment_index.find(segment);
    if (it == aligned.segment_index.end())
        throw Error(ErrorCode::MissingSegment, segment + " is not configured");
    const auto& grid = aligned.speeds[it->second];

    std::vector<double> overnight;
    size_t days_with_data = 0;
    for (size_t d = 0; d < aligned.days.size(); ++d) {
        bool any = false;
        for (int s = 0; s < kOvernightEndSlot; ++s) {
            const double v = grid[aligned.cell(static_cast<int>(d), s)];
            if (!std::isnan(v)) {
                overnight.push_back(v);
                any = true;
            }
        }
        if (any) ++days_with_data;
    }
    if (days_with_data < kMinFreeFlowDays)
        throw Error(ErrorCode::InsufficientData,
                    segment + " has overnight data on only " + std::to_string(days_with_data) +
                        " days (need " + std::to_string(kMinFreeFlowDays) + ")");
    return stats::quantile(overnight, kFreeFlowQuantile);
}

int breakdown_cutoff(const AlignedDataset& aligned) {
    int earliest = kDefaultBreakdownSlot;
    bool found = false;
    for (const auto& [id, tag] : aligned.spec.segment_roles) {
        if (tag != LocationTag::OppositeDirection) continue;
        auto ff = aligned.spec.free_flow_mph.find(id);
        if (ff == aligned.spec.free_flow_mph.end()) {
            log_warn("no free-flow speed for opposite segment " + id +
                     "; skipped in breakdown search");
            continue;
        }
        const double threshold = kBreakdownFraction * ff->second;
        const auto& grid = aligned.speeds[aligned.segment_index.at(id)];
        for (size_t d = 0; d < aligned.days.size(); ++d) {
            for (int s = kBreakdownSearchStart; s < kBreakdownSearchEnd; ++s) {
                const double v = grid[aligned.cell(static_cast<int>(d), s)];
                if (!std::isnan(v) && v < threshold) {
                    if (!found || s < earliest) earliest = s;
                    found = true;
                    break;  // first breakdown of this day
                }
            }
        }
    }
    return earliest;
}

AlignedDataset align_dataset(const Dataset& data) {
    AlignedDataset out;
    out.spec = data.spec;
    out.spec.validate();

    const auto in_range = [&](Date day) {
        return day >= data.spec.range_start && day <= data.spec.range_end;
    };

    // Day universe: speed-observation days within the configured range.
    std::set<Date> day_set;
    for (const auto& obs : data.speeds)
        if (in_range(obs.at.day)) day_set.insert(obs.at.day);
    out.days.assign(day_set.begin(), day_set.end());
    for (size_t i = 0; i < out.days.size(); ++i) out.day_index[out.days[i]] = static_cast<int>(i);
    const size_t cells = out.days.size() * kSlotsPerDay;

    out.segments = out.spec.all_segments();
    for (size_t i = 0; i < out.segments.size(); ++i)
        out.segment_index[out.segments[i]] = static_cast<int>(i);
    out.speeds.assign(out.segments.size(), std::vector<double>(cells, kNaN));

    for (const auto& obs : data.speeds) {
        if (!in_range(obs.at.day)) {
            ++out.out_of_range_rows;
            continue;
        }
        auto seg = out.segment_index.find(obs.segment_id);
        if (seg == out.segment_index.end()) {
            ++out.unknown_segment_rows;
            continue;
        }
        double& cell = out.speeds[seg->second][out.cell(out.day_index[obs.at.day], obs.at.slot)];
        if (!std::isnan(cell)) {
            ++out.duplicate_cells;  // first observation wins
            continue;
        }
        cell = obs.speed_mph;
    }

    // Short-gap imputation and long-gap flagging, per (segment, day).
    out.gap_flagged.assign(out.segments.size(), std::vector<char>(out.days.size(), 0));
    for (size_t seg = 0; seg < out.segments.size(); ++seg) {
        for (size_t d = 0; d < out.days.size(); ++d) {
            bool flagged = false;
            impute_series_gaps(
                std::span<double>(out.speeds[seg]).subspan(d * kSlotsPerDay, kSlotsPerDay),
                kMaxImputeGapSlots, flagged, out.imputed_cells);
            out.gap_flagged[seg][d] = flagged ? 1 : 0;
        }
    }
    out.day_kept.assign(out.days.size(), 1);
    for (const auto& t : out.spec.target_segments) {
        const auto& flags = out.gap_flagged[out.segment_index.at(t.id)];
        for (size_t d = 0; d < out.days.size(); ++d)
            if (flags[d]) out.day_kept[d] = 0;
    }

    // Counts.
    std::set<std::string> sensor_set;
    for (const auto& obs : data.counts)
        if (in_range(obs.at.day)) sensor_set.insert(obs.sensor_id);
    out.sensors.assign(sensor_set.begin(), sensor_set.end());
    for (size_t i = 0; i < out.sensors.size(); ++i)
        out.sensor_index[out.sensors[i]] = static_cast<int>(i);
    out.counts.assign(out.sensors.size(), std::vector<int>(cells, -1));
    for (const auto& obs : data.counts) {
        if (!in_range(obs.at.day)) {
            ++out.out_of_range_rows;
            continue;
        }
        auto day = out.day_index.find(obs.at.day);
        if (day == out.day_index.end()) continue;  // no speeds that day, row unused
        int& cell = out.counts[out.sensor_index[obs.sensor_id]][out.cell(day->second, obs.at.slot)];
        if (cell >= 0) {
            ++out.duplicate_cells;
            continue;
        }
        cell = obs.vehicles;
    }

    // Weather: hourly records replicated onto their 12 slots, missing hours
    // forward-filled up to kWeatherFillMaxHours on the absolute-hour timeline.
    auto& w = out.weather;
    for (auto* field : {&w.temp_f, &w.wind_chill_f, &w.precip_in_hr, &w.visibility_mi,
                        &w.wind_mph, &w.gust_mph, &w.pressure_mb})
        field->assign(cells, kNaN);
    w.precip.assign(cells, -1);
    w.pavement.assign(cells, -1);

    std::map<int64_t, const WeatherObservation*> by_hour;  // absolute hour, first wins
    size_t weather_duplicates = 0;
    for (const auto& obs : data.weather) {
        if (!in_range(obs.day)) {
            ++out.out_of_range_rows;
            continue;
        }
        const int64_t hour = static_cast<int64_t>(obs.day.days) * 24 + obs.hour;
        if (!by_hour.emplace(hour, &obs).second) ++weather_duplicates;
    }
    out.duplicate_cells += weather_duplicates;
    for (size_t d = 0; d < out.days.size(); ++d) {
        for (int h = 0; h < 24; ++h) {
            const int64_t hour = static_cast<int64_t>(out.days[d].days) * 24 + h;
            const WeatherObservation* rec = nullptr;
            for (int back = 0; back <= kWeatherFillMaxHours; ++back) {
                auto it = by_hour.find(hour - back);
                if (it != by_hour.end()) {
                    rec = it->second;
                    break;
                }
            }
            if (!rec) continue;
            for (int s = h * 12; s < (h + 1) * 12; ++s) {
                const size_t cell = out.cell(static_cast<int>(d), s);
                w.temp_f[cell] = rec->temp_f;
                w.wind_chill_f[cell] = rec->wind_chill_f;
                w.precip_in_hr[cell] = rec->precip_in_hr;
                w.visibility_mi[cell] = rec->visibility_mi;
                w.wind_mph[cell] = rec->wind_mph;
                w.gust_mph[cell] = rec->gust_mph;
                w.pressure_mb[cell] = rec->pressure_mb;
                w.precip[cell] = static_cast<int8_t>(rec->precip);
                w.pavement[cell] = static_cast<int8_t>(rec->pavement);
            }
        }
    }

    // Free-flow speeds for every segment with enough overnight coverage.
    for (const auto& id : out.segments) {
        try {
            out.spec.free_flow_mph[id] = free_flow_speed(out, id);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InsufficientData) throw;
            log_warn(std::string(e.what()));
        }
    }

    out.breakdown_cutoff_slot = breakdown_cutoff(out);

    // Travel-rate series over the prediction window for kept days.
    const int width = out.window_width();
    out.rate.assign(out.days.size() * width, kNaN);
    std::vector<double> lengths, speeds_at;
    std::vector<int> target_idx;
    for (const auto& t : out.spec.target_segments) {
        lengths.push_back(t.length_miles);
        target_idx.push_back(out.segment_index.at(t.id));
    }
    for (size_t d = 0; d < out.days.size(); ++d) {
        if (!out.day_kept[d]) continue;
        for (int offset = 0; offset < width; ++offset) {
            const int slot = out.spec.window_start_slot + offset;
            speeds_at.clear();
            bool complete = true;
            for (int seg : target_idx) {
                const double v = out.speed_at(seg, static_cast<int>(d), slot);
                if (std::isnan(v)) {
                    complete = false;
                    break;
                }
                speeds_at.push_back(v);
            }
            if (complete) out.rate[d * width + offset] = travel_rate(speeds_at, lengths);
        }
    }

    if (out.unknown_segment_rows > 0)
        log_info(std::to_string(out.unknown_segment_rows) +
                 " speed rows referenced unconfigured segments");
    if (out.duplicate_cells > 0)
        log_info(std::to_string(out.duplicate_cells) + " duplicate grid cells ignored");
    return out;
}

}  // namespace corridorcast
