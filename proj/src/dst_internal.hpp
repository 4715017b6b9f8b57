#pragma once
#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace npe::detail {

// Cached DST-I plan per interior size (mx columns, my rows). The FFTW planner
// is not thread-safe, so creation is serialized; fftw_execute_r2r on caller
// arrays is reentrant.
class SinePlan {
public:
  SinePlan(int mx, int my) {
    std::vector<double> scratch(static_cast<std::size_t>(mx) * my);
    plan_ = fftw_plan_r2r_2d(my, mx, scratch.data(), scratch.data(),
                             FFTW_RODFT00, FFTW_RODFT00,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  ~SinePlan() { fftw_destroy_plan(plan_); }
  SinePlan(const SinePlan&) = delete;
  SinePlan& operator=(const SinePlan&) = delete;

  void execute(double* data) const { fftw_execute_r2r(plan_, data, data); }

private:
  fftw_plan plan_;
};

inline const SinePlan& sine_plan(int mx, int my) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<SinePlan>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{mx, my}];
  if (!slot) slot = std::make_unique<SinePlan>(mx, my);
  return *slot;
}

} // namespace npe::detail
