#include "lugeo/kernels.hpp"

#include <atomic>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lugeo::kernels {

namespace {

#ifdef _OPENMP
std::atomic<bool> g_parallel{true};
#else
std::atomic<bool> g_parallel{false};
#endif

struct FactorLayout {
    long long total;   // product of all dims
    long long stride;  // stride of factor k
    long long blocks;  // total / (d_k * stride)
    int d;             // dims[k]
};

FactorLayout layout_for(const std::vector<int>& dims, int k) {
    FactorLayout lo{};
    lo.total = space_dim(dims);
    lo.stride = factor_stride(dims, k);
    lo.d = dims[static_cast<size_t>(k)];
    lo.blocks = lo.total / (lo.d * lo.stride);
    return lo;
}

}  // namespace

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }

void set_parallel(bool on) {
#ifndef _OPENMP
    on = false;
#endif
    g_parallel.store(on, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------
// serial reference

namespace serial {

void apply_factor_op(const std::vector<int>& dims, int k, const Mat& op,
                     const cxd* in, cxd* out) {
    const FactorLayout lo = layout_for(dims, k);
    for (long long blk = 0; blk < lo.blocks; ++blk) {
        const long long base0 = blk * lo.d * lo.stride;
        for (long long r = 0; r < lo.stride; ++r) {
            const long long base = base0 + r;
            for (int a = 0; a < lo.d; ++a) {
                cxd acc(0, 0);
                for (int b = 0; b < lo.d; ++b)
                    acc += op(a, b) * in[base + b * lo.stride];
                out[base + a * lo.stride] = acc;
            }
        }
    }
}

void accumulate_factor_op(const std::vector<int>& dims, int k, const Mat& op,
                          const cxd* in, cxd* out, cxd coeff) {
    const FactorLayout lo = layout_for(dims, k);
    for (long long blk = 0; blk < lo.blocks; ++blk) {
        const long long base0 = blk * lo.d * lo.stride;
        for (long long r = 0; r < lo.stride; ++r) {
            const long long base = base0 + r;
            for (int a = 0; a < lo.d; ++a) {
                cxd acc(0, 0);
                for (int b = 0; b < lo.d; ++b)
                    acc += op(a, b) * in[base + b * lo.stride];
                out[base + a * lo.stride] += coeff * acc;
            }
        }
    }
}

Mat reduced_density(const std::vector<int>& dims, int k, const cxd* amps) {
    const FactorLayout lo = layout_for(dims, k);
    Mat rho = Mat::Zero(lo.d, lo.d);
    for (long long blk = 0; blk < lo.blocks; ++blk) {
        const long long base0 = blk * lo.d * lo.stride;
        for (long long r = 0; r < lo.stride; ++r) {
            const long long base = base0 + r;
            for (int a = 0; a < lo.d; ++a) {
                const cxd va = amps[base + a * lo.stride];
                for (int b = 0; b < lo.d; ++b)
                    rho(a, b) += va * std::conj(amps[base + b * lo.stride]);
            }
        }
    }
    return rho;
}

}  // namespace serial

// ---------------------------------------------------------------------------
// OpenMP variants.  Static schedules keep results identical from run to run
// for a fixed thread count; per-thread partials are merged in thread order.

namespace par {

void apply_factor_op(const std::vector<int>& dims, int k, const Mat& op,
                     const cxd* in, cxd* out) {
#ifdef _OPENMP
    const FactorLayout lo = layout_for(dims, k);
    const long long groups = lo.blocks * lo.stride;
#pragma omp parallel for schedule(static)
    for (long long g = 0; g < groups; ++g) {
        const long long blk = g / lo.stride;
        const long long r = g % lo.stride;
        const long long base = blk * lo.d * lo.stride + r;
        for (int a = 0; a < lo.d; ++a) {
            cxd acc(0, 0);
            for (int b = 0; b < lo.d; ++b)
                acc += op(a, b) * in[base + b * lo.stride];
            out[base + a * lo.stride] = acc;
        }
    }
#else
    serial::apply_factor_op(dims, k, op, in, out);
#endif
}

void accumulate_factor_op(const std::vector<int>& dims, int k, const Mat& op,
                          const cxd* in, cxd* out, cxd coeff) {
#ifdef _OPENMP
    const FactorLayout lo = layout_for(dims, k);
    const long long groups = lo.blocks * lo.stride;
#pragma omp parallel for schedule(static)
    for (long long g = 0; g < groups; ++g) {
        const long long blk = g / lo.stride;
        const long long r = g % lo.stride;
        const long long base = blk * lo.d * lo.stride + r;
        for (int a = 0; a < lo.d; ++a) {
            cxd acc(0, 0);
            for (int b = 0; b < lo.d; ++b)
                acc += op(a, b) * in[base + b * lo.stride];
            out[base + a * lo.stride] += coeff * acc;
        }
    }
#else
    serial::accumulate_factor_op(dims, k, op, in, out, coeff);
#endif
}

Mat reduced_density(const std::vector<int>& dims, int k, const cxd* amps) {
#ifdef _OPENMP
    const FactorLayout lo = layout_for(dims, k);
    const long long groups = lo.blocks * lo.stride;
    const int nthreads = omp_get_max_threads();
    std::vector<Mat> partial(static_cast<size_t>(nthreads),
                             Mat::Zero(lo.d, lo.d));
#pragma omp parallel num_threads(nthreads)
    {
        Mat& mine = partial[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (long long g = 0; g < groups; ++g) {
            const long long blk = g / lo.stride;
            const long long r = g % lo.stride;
            const long long base = blk * lo.d * lo.stride + r;
            for (int a = 0; a < lo.d; ++a) {
                const cxd va = amps[base + a * lo.stride];
                for (int b = 0; b < lo.d; ++b)
                    mine(a, b) += va * std::conj(amps[base + b * lo.stride]);
            }
        }
    }
    Mat rho = Mat::Zero(lo.d, lo.d);
    for (const Mat& p : partial) rho += p;
    return rho;
#else
    return serial::reduced_density(dims, k, amps);
#endif
}

}  // namespace par

// ---------------------------------------------------------------------------
// dispatch

void apply_factor_op(const std::vector<int>& dims, int k, const Mat& op,
                     const cxd* in, cxd* out) {
    if (parallel_enabled() && space_dim(dims) >= kParallelCutoff)
        par::apply_factor_op(dims, k, op, in, out);
    else
        serial::apply_factor_op(dims, k, op, in, out);
}

Vec apply_factor_op(const std::vector<int>& dims, int k, const Mat& op,
                    const Vec& in) {
    Vec out(in.size());
    apply_factor_op(dims, k, op, in.data(), out.data());
    return out;
}

Mat reduced_density(const std::vector<int>& dims, int k, const cxd* amps) {
    if (parallel_enabled() && space_dim(dims) >= kParallelCutoff)
        return par::reduced_density(dims, k, amps);
    return serial::reduced_density(dims, k, amps);
}

Vec apply_terms(const std::vector<int>& dims,
                const std::vector<std::pair<int, Mat>>& terms, const Vec& in) {
    Vec out = Vec::Zero(in.size());
    const bool wide =
        parallel_enabled() && space_dim(dims) >= kParallelCutoff;
    for (const auto& [k, op] : terms) {
        if (wide)
            par::accumulate_factor_op(dims, k, op, in.data(), out.data());
        else
            serial::accumulate_factor_op(dims, k, op, in.data(), out.data());
    }
    return out;
}

Vec apply_product(const std::vector<int>& dims, const std::vector<Mat>& ops,
                  const Vec& in) {
    if (ops.size() != dims.size())
        throw DimensionMismatch("apply_product: one operator per factor required");
    Vec cur = in;
    Vec next(in.size());
    for (int k = 0; k < static_cast<int>(dims.size()); ++k) {
        apply_factor_op(dims, k, ops[static_cast<size_t>(k)], cur.data(),
                        next.data());
        cur.swap(next);
    }
    return cur;
}

}  // namespace lugeo::kernels
