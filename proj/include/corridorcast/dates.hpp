#ifndef CORRIDORCAST_DATES_HPP
#define CORRIDORCAST_DATES_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace corridorcast {

inline constexpr int kSlotsPerDay = 288;     // 5-minute bins
inline constexpr int kSlotMinutes = 5;

/// Calendar date as days since 1970-01-01 (proleptic Gregorian).
struct Date {
    int32_t days = 0;

    static Date from_ymd(int year, int month, int day);
    void to_ymd(int& year, int& month, int& day) const;

    /// Parses strict ISO-8601 "YYYY-MM-DD".
    static Date parse(std::string_view text);
    std::string to_string() const;

    /// 0 = Sunday ... 6 = Saturday.
    int weekday() const { return static_cast<int>(((days % 7) + 11) % 7); }
    bool is_weekend() const { int w = weekday(); return w == 0 || w == 6; }
    Date next_weekday() const;

    auto operator<=>(const Date&) const = default;
};

/// Minutes since 1970-01-01 00:00, local clock (no timezone logic).
using TimestampMin = int64_t;

/// Parses strict "YYYY-MM-DDTHH:MM".
TimestampMin parse_timestamp(std::string_view text);
std::string format_timestamp(TimestampMin ts);

/// One cell of the canonical 5-minute day grid; slot 168 is 14:00.
struct SlotIndex {
    Date day;
    int slot = 0;  // 0..287

    int minutes_of_day() const { return slot * kSlotMinutes; }
    TimestampMin timestamp() const {
        return static_cast<TimestampMin>(day.days) * 1440 + minutes_of_day();
    }
    auto operator<=>(const SlotIndex&) const = default;
};

bool valid_slot(int slot);

/// "HH:MM" of slot start.
std::string slot_to_clock(int slot);
/// Inverse of slot_to_clock; minutes must be a multiple of 5.
int clock_to_slot(std::string_view hhmm);

}  // namespace corridorcast

#endif
