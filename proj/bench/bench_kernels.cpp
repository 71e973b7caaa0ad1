// Serial reference kernels against their OpenMP versions on fixed inputs.

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "clusterhodge/gysin.hpp"
#include "clusterhodge/kernels.hpp"

using namespace clusterhodge;

namespace {

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::vector<std::int64_t>> star(int n) {
    std::vector<std::vector<std::int64_t>> b(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int j = 1; j < n; ++j) {
        b[0][static_cast<std::size_t>(j)] = 1;
        b[static_cast<std::size_t>(j)][0] = -1;
    }
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    const int jobs = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
    std::cout << "threads available: " << omp_get_max_threads() << ", jobs: " << jobs << "\n";
    std::cout << std::left << std::setw(34) << "kernel" << std::setw(12) << "serial s" << std::setw(12) << "parallel s"
              << "agree\n";

    for (int n : {4, 5}) {
        const GysinData g(ExtendedExchangeMatrix::principal(star(n)));
        std::vector<std::map<int, long>> a, b;
        const double ts = seconds([&] { a = kernels::slice_cohomology_serial(g); });
        const double tp = seconds([&] { b = kernels::slice_cohomology_parallel(g, jobs); });
        std::cout << std::setw(34) << ("slice cohomology, Z" + std::to_string(n) + " principal") << std::setw(12) << ts
                  << std::setw(12) << tp << (a == b ? "yes" : "NO") << "\n";
    }
    for (std::uint64_t q : {7, 11}) {
        const auto bb = ExtendedExchangeMatrix::principal(star(3));
        Integer a, b;
        const double ts = seconds([&] { a = kernels::count_points_serial(bb, q); });
        const double tp = seconds([&] { b = kernels::count_points_parallel(bb, q, jobs); });
        std::cout << std::setw(34) << ("point count, Z3 principal, q=" + std::to_string(q)) << std::setw(12) << ts
                  << std::setw(12) << tp << (a == b ? "yes" : "NO") << "\n";
    }
    return 0;
}
