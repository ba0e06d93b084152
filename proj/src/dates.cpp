#include "corridorcast/dates.hpp"

#include <charconv>
#include <cstdio>

#include "corridorcast/errors.hpp"

namespace corridorcast {

namespace {

// Civil-from-days and days-from-civil (Howard Hinnant's algorithms).
int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t yr = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yr + (m <= 2));
}

int parse_int_exact(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorCode::InvalidArgument, "bad integer field '" + std::string(s) + "'");
    return value;
}

}  // namespace

Date Date::from_ymd(int year, int month, int day) {
    if (month < 1 || month > 12 || day < 1 || day > 31)
        throw Error(ErrorCode::InvalidArgument, "invalid calendar date");
    return Date{static_cast<int32_t>(days_from_civil(year, month, day))};
}

void Date::to_ymd(int& year, int& month, int& day) const {
    civil_from_days(days, year, month, day);
}

Date Date::parse(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        throw Error(ErrorCode::InvalidArgument, "bad date '" + std::string(text) + "'");
    int y = parse_int_exact(text.substr(0, 4));
    int m = parse_int_exact(text.substr(5, 2));
    int d = parse_int_exact(text.substr(8, 2));
    Date date = from_ymd(y, m, d);
    // Reject normalized-away values such as Feb 30.
    int yy, mm, dd;
    date.to_ymd(yy, mm, dd);
    if (yy != y || mm != m || dd != d)
        throw Error(ErrorCode::InvalidArgument, "bad date '" + std::string(text) + "'");
    return date;
}

std::string Date::to_string() const {
    int y, m, d;
    to_ymd(y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return buf;
}

Date Date::next_weekday() const {
    Date next{days + 1};
    while (next.is_weekend()) ++next.days;
    return next;
}

TimestampMin parse_timestamp(std::string_view text) {
    if (text.size() != 16 || text[10] != 'T' || text[13] != ':')
        throw Error(ErrorCode::InvalidArgument, "bad timestamp '" + std::string(text) + "'");
    Date date = Date::parse(text.substr(0, 10));
    int hh = parse_int_exact(text.substr(11, 2));
    int mm = parse_int_exact(text.substr(14, 2));
    if (hh < 0 || hh > 23 || mm < 0 || mm > 59)
        throw Error(ErrorCode::InvalidArgument, "bad timestamp '" + std::string(text) + "'");
    return static_cast<TimestampMin>(date.days) * 1440 + hh * 60 + mm;
}

std::string format_timestamp(TimestampMin ts) {
    int64_t day = ts / 1440;
    int64_t rem = ts % 1440;
    if (rem < 0) { rem += 1440; --day; }
    Date date{static_cast<int32_t>(day)};
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%sT%02d:%02d", date.to_string().c_str(),
                  static_cast<int>(rem / 60), static_cast<int>(rem % 60));
    return buf;
}

bool valid_slot(int slot) { return slot >= 0 && slot < kSlotsPerDay; }

std::string slot_to_clock(int slot) {
    if (!valid_slot(slot)) throw Error(ErrorCode::InvalidArgument, "slot out of range");
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%02d:%02d", slot / 12, (slot % 12) * 5);
    return buf;
}

int clock_to_slot(std::string_view hhmm) {
    if (hhmm.size() != 5 || hhmm[2] != ':')
        throw Error(ErrorCode::InvalidArgument, "bad clock '" + std::string(hhmm) + "'");
    int hh = parse_int_exact(hhmm.substr(0, 2));
    int mm = parse_int_exact(hhmm.substr(3, 2));
    if (hh < 0 || hh > 23 || mm < 0 || mm > 59 || mm % 5 != 0)
        throw Error(ErrorCode::InvalidArgument, "bad clock '" + std::string(hhmm) + "'");
    return hh * 12 + mm / 5;
}

}  // namespace corridorcast
