// Data-plane kernels: single-factor operator application and partial traces
// over the flat amplitude layout.  Each kernel has a serial reference
// implementation (namespace serial) and an OpenMP variant; the public entry
// points dispatch on problem size.  tools/lugeo-bench compares the two.

#pragma once

#include <utility>
#include <vector>

#include "lugeo/types.hpp"

namespace lugeo::kernels {

// Runtime switch, mainly for tests and benchmarks.  Defaults to on when the
// library is built with OpenMP.
bool parallel_enabled();
void set_parallel(bool on);

// Problems below this many amplitudes always take the serial path; the
// thread fan-out only pays for itself in the hundred-thousand-amplitude
// range, and small CLI runs stay bit-reproducible regardless of thread
// count.
inline constexpr long long kParallelCutoff = 1 << 16;

namespace serial {

// out = (I x .. x op_k x .. x I) in, op acting on factor k.
void apply_factor_op(const std::vector<int>& dims, int k, const Mat& op,
                     const cxd* in, cxd* out);

// out += coeff * (I x .. x op_k x .. x I) in
void accumulate_factor_op(const std::vector<int>& dims, int k, const Mat& op,
                          const cxd* in, cxd* out, cxd coeff = cxd(1, 0));

// rho[a][b] = sum_rest v[(a,rest)] conj(v[(b,rest)]) at factor k.
Mat reduced_density(const std::vector<int>& dims, int k, const cxd* amps);

}  // namespace serial

namespace par {

void apply_factor_op(const std::vector<int>& dims, int k, const Mat& op,
                     const cxd* in, cxd* out);
void accumulate_factor_op(const std::vector<int>& dims, int k, const Mat& op,
                          const cxd* in, cxd* out, cxd coeff = cxd(1, 0));
Mat reduced_density(const std::vector<int>& dims, int k, const cxd* amps);

}  // namespace par

// Dispatching entry points.

void apply_factor_op(const std::vector<int>& dims, int k, const Mat& op,
                     const cxd* in, cxd* out);
Vec apply_factor_op(const std::vector<int>& dims, int k, const Mat& op,
                    const Vec& in);

Mat reduced_density(const std::vector<int>& dims, int k, const cxd* amps);

// sum_k (I x .. x term_k x .. x I) in for a sparse list of factor terms.
Vec apply_terms(const std::vector<int>& dims,
                const std::vector<std::pair<int, Mat>>& terms, const Vec& in);

// (op_0 x op_1 x .. x op_{L-1}) in, one operator per factor.
Vec apply_product(const std::vector<int>& dims, const std::vector<Mat>& ops,
                  const Vec& in);

}  // namespace lugeo::kernels
