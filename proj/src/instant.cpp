#include "kgq/instant.hpp"

#include <cstdio>

namespace kgq {
namespace {

// Howard Hinnant's days-from-civil algorithm (proleptic Gregorian).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y = yy + (m <= 2);
}

bool days_in_month_ok(std::int64_t y, unsigned m, unsigned d) {
  static const unsigned len[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m < 1 || m > 12 || d < 1) return false;
  unsigned max = len[m - 1];
  bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  if (m == 2 && leap) max = 29;
  return d <= max;
}

}  // namespace

std::optional<Instant> Instant::parse(const std::string& iso) {
  const char* s = iso.c_str();
  if (*s == '+') ++s;
  long long y;
  unsigned mo, d, h, mi, se;
  char z;
  int n = 0;
  if (std::sscanf(s, "%lld-%2u-%2uT%2u:%2u:%2u%c%n", &y, &mo, &d, &h, &mi, &se,
                  &z, &n) != 7 ||
      z != 'Z' || s[n] != '\0')
    return std::nullopt;
  if (!days_in_month_ok(y, mo, d) || h > 23 || mi > 59 || se > 59)
    return std::nullopt;
  return at(days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + se);
}

std::string Instant::to_iso() const {
  std::int64_t t = *epoch_;
  std::int64_t days = t / 86400;
  std::int64_t sod = t % 86400;
  if (sod < 0) {
    sod += 86400;
    --days;
  }
  std::int64_t y;
  unsigned m, d;
  civil_from_days(days, y, m, d);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<long long>(y), m, d,
                static_cast<long long>(sod / 3600),
                static_cast<long long>((sod % 3600) / 60),
                static_cast<long long>(sod % 60));
  return buf;
}

Instant Instant::min_hull(const Instant& a, const Instant& b) {
  if (!a.is_defined() || !b.is_defined()) return undefined();
  return less(a, b) ? a : b;
}

Instant Instant::max_hull(const Instant& a, const Instant& b) {
  if (!a.is_defined() || !b.is_defined()) return undefined();
  return less(a, b) ? b : a;
}

bool Instant::start_leq(const Instant& a, const Instant& b) {
  if (!a.is_defined()) return true;
  if (!b.is_defined()) return false;
  return *a.epoch_ <= *b.epoch_;
}

bool Instant::end_leq(const Instant& a, const Instant& b) {
  if (!b.is_defined()) return true;
  if (!a.is_defined()) return false;
  return *a.epoch_ <= *b.epoch_;
}

Instant Instant::max_start(const Instant& a, const Instant& b) {
  return start_leq(a, b) ? b : a;
}

Instant Instant::min_end(const Instant& a, const Instant& b) {
  return end_leq(a, b) ? a : b;
}

Duration Instant::minus(const Instant& end, const Instant& start) {
  if (!end.is_defined() || !start.is_defined()) return Duration::undefined();
  return Duration::of(*end.epoch_ - *start.epoch_);
}

}  // namespace kgq
