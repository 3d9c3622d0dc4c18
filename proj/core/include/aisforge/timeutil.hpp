#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace aisforge {

// Seconds since 1970-01-01T00:00:00 UTC. All timestamps in the library are UTC.
using Timestamp = std::int64_t;

struct CivilDate {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31
};

std::int64_t days_from_civil(int year, int month, int day);
CivilDate civil_from_days(std::int64_t days);

Timestamp make_timestamp(int year, int month, int day,
                         int hour = 0, int minute = 0, int second = 0);

// Accepts "YYYY-MM-DD" and "YYYY-MM-DD[T ]HH:MM[:SS][Z]".
Timestamp parse_timestamp(std::string_view text);

// Inverse of parse_timestamp: date-only form at midnight, otherwise
// "YYYY-MM-DDTHH:MM:SS".
std::string format_timestamp(Timestamp t);

// 0 = Monday ... 6 = Sunday.
int weekday(Timestamp t);

// Strictly increasing across calendar quarters (Jan/Apr/Jul/Oct boundaries).
std::int64_t quarter_key(Timestamp t);

}  // namespace aisforge
