#include "epit/clock.hpp"

#include <cstdlib>
#include <ctime>

namespace epit {

namespace {

std::string format_epoch(std::int64_t epoch_seconds, const char* pattern) {
  std::time_t t = static_cast<std::time_t>(epoch_seconds);
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), pattern, &tm_utc);
  return buf;
}

}  // namespace

std::string format_wall_timestamp(std::int64_t epoch_seconds) {
  return format_epoch(epoch_seconds, "%Y/%m/%d %H:%M:%S");
}

std::string format_iso_timestamp(std::int64_t epoch_seconds) {
  return format_epoch(epoch_seconds, "%Y-%m-%dT%H:%M:%SZ");
}

ReportClock ReportClock::from_env(const char* var) {
  const char* value = std::getenv(var);
  if (value == nullptr || *value == '\0') return ReportClock{};
  char* end = nullptr;
  long long epoch = std::strtoll(value, &end, 10);
  if (end == value) return ReportClock{};  // not a number: ignore
  return ReportClock{static_cast<std::int64_t>(epoch)};
}

std::int64_t ReportClock::epoch_seconds() const {
  if (fixed_) return fixed_epoch_;
  return static_cast<std::int64_t>(std::time(nullptr));
}

std::int64_t ReportClock::elapsed_ms_since(
    std::chrono::steady_clock::time_point start) const {
  if (fixed_) return 0;
  auto delta = std::chrono::steady_clock::now() - start;
  return std::chrono::duration_cast<std::chrono::milliseconds>(delta).count();
}

}  // namespace epit
