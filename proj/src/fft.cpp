#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

namespace spinlangevin::detail {

namespace {

// FFTW's planner is not reentrant; execution on distinct plans is.
std::mutex planner_mutex;

struct Buffer {
  explicit Buffer(std::size_t bytes) : p(fftw_malloc(bytes)) {}
  ~Buffer() { fftw_free(p); }
  Buffer(const Buffer&) = delete;
  Buffer& operator=(const Buffer&) = delete;
  void* p;
};

}  // namespace

std::vector<cplx> dft(const std::vector<cplx>& in, int sign) {
  const std::size_t n = in.size();
  Buffer buf(sizeof(fftw_complex) * n);
  auto* data = static_cast<fftw_complex*>(buf.p);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(n), data, data, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  std::memcpy(data, in.data(), sizeof(fftw_complex) * n);
  fftw_execute(plan);
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = {data[k][0], data[k][1]};
  {
    std::lock_guard lock(planner_mutex);
    fftw_destroy_plan(plan);
  }
  return out;
}

std::vector<double> hermitian_to_real(const std::vector<cplx>& half, std::size_t n) {
  const std::size_t nc = n / 2 + 1;
  Buffer in_buf(sizeof(fftw_complex) * nc);
  Buffer out_buf(sizeof(double) * n);
  auto* in = static_cast<fftw_complex*>(in_buf.p);
  auto* out = static_cast<double*>(out_buf.p);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex);
    plan = fftw_plan_dft_c2r_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
  }
  std::memcpy(in, half.data(), sizeof(fftw_complex) * nc);
  fftw_execute(plan);
  std::vector<double> res(out, out + n);
  {
    std::lock_guard lock(planner_mutex);
    fftw_destroy_plan(plan);
  }
  return res;
}

}  // namespace spinlangevin::detail
