#pragma once

#include "hurwitz/series.hpp"

// Hot loops of the series engine. Each kernel has a serial reference version
// kept for tests and benchmarks; the parallel one is what the library calls.
namespace hurwitz::kernels {

/// Truncated product; partial products outside the truncation are pruned
/// before the monomial is formed. Throws TruncationMismatch.
GradedSeries multiply_serial(const GradedSeries& a, const GradedSeries& b);
GradedSeries multiply_parallel(const GradedSeries& a, const GradedSeries& b);

}  // namespace hurwitz::kernels

namespace hurwitz::kernels {

/// Cut-and-join operator
///   W = 1/2 sum_{i,j} ((i+j) p_i p_j d/dp_{i+j} + i j p_{i+j} d^2/dp_i dp_j)
/// applied termwise; variables outside the p alphabet are passive.
GradedSeries cut_join_serial(const GradedSeries& s);
GradedSeries cut_join_parallel(const GradedSeries& s);

}  // namespace hurwitz::kernels
