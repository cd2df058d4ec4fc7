// Serial reference kernels against their OpenMP versions.
//
//   glcd_bench [--repeat N] [--threads T]

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "glcd/constacyclic.hpp"
#include "glcd/distance.hpp"

using namespace glcd;

namespace {

double best_of(int repeat, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, const char* check) {
  std::printf("%-44s %10.4f %10.4f %7.2fx  %s\n", name, serial, parallel, serial / parallel, check);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP kernels"};
  int repeat = 3;
  int threads = 0;
  app.add_option("--repeat", repeat, "Runs per kernel; the best time is reported")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "OpenMP threads (default: runtime choice)");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-44s %10s %10s %8s\n", "kernel", "serial s", "omp s", "speedup");

  const Field f125 = Field::make(5, 3);
  const Element minus_one = f125.from_int(-1);

  // [13,4,8] over GF(125): about 2 million projective messages
  {
    const Matrix g = to_generator_matrix(code_from_defining_set(f125, 13, minus_one, {1, 3, 5, 11, 13, 15, 21, 23, 25})).generator();
    unsigned a = 0, b = 0;
    const double s = best_of(repeat, [&] { a = distance::min_weight_messages_serial(g); });
    const double p = best_of(repeat, [&] { b = distance::min_weight_messages_parallel(g); });
    row("messages [13,4] over GF(125)", s, p, a == b ? "same d" : "DIFFERENT d");
  }

  // [13,5] over GF(125): column subsets of an 8 x 13 parity-check matrix
  {
    const auto code = to_generator_matrix(code_from_defining_set(f125, 13, minus_one, {3, 7, 9, 11, 15, 17, 19, 23}));
    const Matrix h = code.parity_check();
    distance::SupportSearch a, b;
    const double s = best_of(repeat, [&] { a = distance::min_dependency_serial(h, 9, 100'000'000); });
    const double p = best_of(repeat, [&] { b = distance::min_dependency_parallel(h, 9, 100'000'000); });
    row("supports [13,5] over GF(125)", s, p, a.found == b.found ? "same d" : "DIFFERENT d");
  }

  // classification with exact distances; one thread against the default team
  {
    const Field f = Field::make(11, 2);
    std::size_t a = 0, b = 0;
    const int team = omp_get_max_threads();
    omp_set_num_threads(1);
    const double s = best_of(repeat, [&] { a = classify_all_lcd(f, 10, f.one(), GaloisParam{1}).entries.size(); });
    omp_set_num_threads(team);
    const double p = best_of(repeat, [&] { b = classify_all_lcd(f, 10, f.one(), GaloisParam{1}).entries.size(); });
    row("classify n=10 over GF(121), k=1", s, p, a == b ? "same catalog size" : "DIFFERENT");
  }
  return 0;
}
