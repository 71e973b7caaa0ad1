#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "clusterhodge/exchange.hpp"
#include "clusterhodge/linalg.hpp"

namespace clusterhodge {

class GysinData;

/// Hot loops in two flavours: a serial reference and an OpenMP version that must agree
/// with it exactly.
namespace kernels {

/// Entry s holds the nonzero cohomology dimensions of G^{*, s}, keyed by position.
std::vector<std::map<int, long>> slice_cohomology_serial(const GysinData& g);
std::vector<std::map<int, long>> slice_cohomology_parallel(const GysinData& g, int jobs);

/// Points of the exchange-relation variety over F_q, q prime. Enumerates q^n (q-1)^m
/// tuples (x, y) and counts admissible x' fibrewise.
Integer count_points_serial(const ExtendedExchangeMatrix& b, std::uint64_t q);
Integer count_points_parallel(const ExtendedExchangeMatrix& b, std::uint64_t q, int jobs);

/// Number of (x, y) tuples visited by the counters.
Integer enumeration_size(const ExtendedExchangeMatrix& b, std::uint64_t q);

}  // namespace kernels
}  // namespace clusterhodge
