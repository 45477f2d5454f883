#include "gff/dst.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace gff {

namespace {

std::mutex plan_mutex;
std::map<int, fftw_plan> plan_cache;

fftw_plan plan_for(int m) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto it = plan_cache.find(m);
  if (it != plan_cache.end()) return it->second;
  // Planning buffer; FFTW_UNALIGNED lets us execute on arbitrary arrays later.
  std::vector<double> buf(static_cast<std::size_t>(m) * m);
  fftw_plan p = fftw_plan_r2r_2d(m, m, buf.data(), buf.data(), FFTW_RODFT00,
                                 FFTW_RODFT00, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw std::runtime_error("dst2d: FFTW plan creation failed");
  plan_cache.emplace(m, p);
  return p;
}

}  // namespace

void dst2d(const double* in, double* out, int m) {
  if (m < 1) throw std::domain_error("dst2d: m must be >= 1");
  fftw_plan p = plan_for(m);
  // new-array execution is thread-safe once the plan exists
  fftw_execute_r2r(p, const_cast<double*>(in), out);
}

}  // namespace gff
