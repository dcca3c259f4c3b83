// Benchmark comparing the OpenMP kernels against their serial reference
// implementations. Each pair is also checked for identical output.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vtwin/homs.hpp"
#include "vtwin/racg.hpp"
#include "vtwin/suites.hpp"
#include "vtwin/vtn.hpp"

using namespace vtwin;

namespace {

template <typename F>
double time_s(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-42s %9.3fs %9.3fs %7.2fx  %s\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "outputs match" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads available: %d\n\n", omp_get_max_threads());
#else
  std::printf("compiled without OpenMP; both columns run serially\n\n");
#endif
  std::printf("%-42s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

  {
    racg::RacgPresentation p = racg::RacgPresentation::kt(5);
    racg::LetterSet all = racg::full_letter_set(p);
    std::vector<racg::Word> a, b;
    double ts = time_s([&] { a = racg::ball_serial(p, all, 4); });
    double tp = time_s([&] { b = racg::ball(p, all, 4); });
    row("ball(KT_5, 4), " + std::to_string(a.size()) + " elements", ts, tp, a == b);
  }
  {
    racg::RacgPresentation p = racg::RacgPresentation::kt(6);
    racg::LetterSet all = racg::full_letter_set(p);
    std::vector<racg::Word> a, b;
    double ts = time_s([&] { a = racg::ball_serial(p, all, 3); });
    double tp = time_s([&] { b = racg::ball(p, all, 3); });
    row("ball(KT_6, 3), " + std::to_string(a.size()) + " elements", ts, tp, a == b);
  }
  {
    VtnContext ctx(4);
    std::vector<SemidirectElement> a, b;
    double ts = time_s([&] { a = ball_vtn_serial(ctx, 5); });
    double tp = time_s([&] { b = ball_vtn(ctx, 5); });
    row("ball_vtn(4, 5), " + std::to_string(a.size()) + " elements", ts, tp, a == b);
  }
  {
    homs::EnumOptions one, many;
    one.jobs = 1;
    std::vector<homs::GenImageMap> a, b;
    double ts = time_s([&] { a = homs::enumerate_homs_vtn_to_sym(5, 5, one); });
    double tp = time_s([&] { b = homs::enumerate_homs_vtn_to_sym(5, 5, many); });
    row("enumerate VT5 -> S5, " + std::to_string(a.size()) + " homs", ts, tp, a == b);
  }
  {
    auto scrub = [](suites::SuiteReport r) {
      nlohmann::json j = r.to_json();
      j.erase("duration_ms");
      return j.dump();
    };
    std::string a, b;
    double ts = time_s([&] { a = scrub(suites::suite_fixed_points(5, 3, 1)); });
    double tp = time_s([&] { b = scrub(suites::suite_fixed_points(5, 3, 0)); });
    row("suite_fixed_points(5, 3)", ts, tp, a == b);
  }
  return 0;
}
