#pragma once

#include <chrono>
#include <cstdint>
#include <string>

namespace epit {

std::string format_wall_timestamp(std::int64_t epoch_seconds);  // YYYY/MM/DD HH:MM:SS (UTC)
std::string format_iso_timestamp(std::int64_t epoch_seconds);   // YYYY-MM-DDTHH:MM:SSZ

// Wall-clock strings for the report plus a monotonic source for durations.
// EPIT_FIXED_CLOCK=<epoch-seconds> pins both: timestamps render from the
// given epoch and every elapsed value reports as 0 ms, which makes report
// output reproducible.
class ReportClock {
 public:
  ReportClock() = default;
  explicit ReportClock(std::int64_t fixed_epoch_seconds)
      : fixed_(true), fixed_epoch_(fixed_epoch_seconds) {}

  static ReportClock from_env(const char* var = "EPIT_FIXED_CLOCK");

  bool fixed() const { return fixed_; }
  std::int64_t epoch_seconds() const;
  std::string wall_timestamp() const { return format_wall_timestamp(epoch_seconds()); }
  std::string iso_timestamp() const { return format_iso_timestamp(epoch_seconds()); }

  // 0 when the clock is pinned, otherwise milliseconds since `start`.
  std::int64_t elapsed_ms_since(std::chrono::steady_clock::time_point start) const;

 private:
  bool fixed_ = false;
  std::int64_t fixed_epoch_ = 0;
};

}  // namespace epit
