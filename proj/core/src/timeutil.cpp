#include "aisforge/timeutil.hpp"

#include <cstdio>

#include "aisforge/errors.hpp"

namespace aisforge {

// Civil date conversions after Howard Hinnant's chrono-compatible algorithms.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);             // [0, 399]
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;  // [0, 365]
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;            // [0, 146096]
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m),
                     static_cast<int>(d)};
}

Timestamp make_timestamp(int year, int month, int day, int hour, int minute, int second) {
    return days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 + second;
}

Timestamp parse_timestamp(std::string_view text) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    char sep = 0;
    std::string buf(text);
    int n = std::sscanf(buf.c_str(), "%d-%d-%d%c%d:%d:%d", &y, &mo, &d, &sep, &h, &mi, &s);
    if (n == 3) {
        // date only
    } else if (n >= 6 && (sep == 'T' || sep == ' ')) {
        if (n == 6) s = 0;
    } else {
        throw Error("unparsable timestamp: '" + buf + "'");
    }
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 ||
        mi < 0 || mi > 59 || s < 0 || s > 60) {
        throw Error("timestamp field out of range: '" + buf + "'");
    }
    return make_timestamp(y, mo, d, h, mi, s);
}

std::string format_timestamp(Timestamp t) {
    std::int64_t days = t / 86400;
    std::int64_t sod = t % 86400;
    if (sod < 0) {
        sod += 86400;
        days -= 1;
    }
    const CivilDate c = civil_from_days(days);
    char buf[32];
    if (sod == 0) {
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", c.year, c.month, c.day);
    } else {
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d",
                      c.year, c.month, c.day,
                      static_cast<int>(sod / 3600),
                      static_cast<int>(sod / 60 % 60),
                      static_cast<int>(sod % 60));
    }
    return buf;
}

int weekday(Timestamp t) {
    std::int64_t days = t / 86400;
    if (t % 86400 < 0) days -= 1;
    // 1970-01-01 was a Thursday (index 3 when Monday = 0).
    return static_cast<int>(((days % 7) + 7 + 3) % 7);
}

std::int64_t quarter_key(Timestamp t) {
    std::int64_t days = t / 86400;
    if (t % 86400 < 0) days -= 1;
    const CivilDate c = civil_from_days(days);
    return static_cast<std::int64_t>(c.year) * 4 + (c.month - 1) / 3;
}

}  // namespace aisforge
