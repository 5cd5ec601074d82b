// Core value types shared by every module: states, multi-indices,
// multiplicity profiles and the error taxonomy.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lugeo {

using cxd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

// ---------------------------------------------------------------------------
// Errors

struct DimensionMismatch : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct ZeroVector : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct BadArity : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct NotBipartite : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct IndexOutOfRange : std::out_of_range { using std::out_of_range::out_of_range; };
struct DegenerateSpectrum : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct AllSpectraDegenerate : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct BadProfile : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct InvalidProfile : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct NonvanishingCoefficient : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct StepOutOfRange : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct BadWord : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct BaseMismatch : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct ParseError : std::runtime_error { using std::runtime_error::runtime_error; };

// ---------------------------------------------------------------------------
// Pure states

// Unit vector in the tensor product of qudit factors.  Amplitudes are stored
// row-major with the first factor's index slowest: for dims (d0,..,d_{L-1})
// the multi-index (k0,..,k_{L-1}) sits at flat position
// ((k0*d1 + k1)*d2 + k2)*...  This layout is fixed across the whole library.
struct PureState {
    std::vector<int> dims;
    Vec amplitudes;

    int factors() const { return static_cast<int>(dims.size()); }
    long long dim() const { return amplitudes.size(); }
};

struct MultiIndex {
    std::vector<int> indices;
};

long long space_dim(const std::vector<int>& dims);
long long flat_index(const std::vector<int>& dims, const MultiIndex& idx);
MultiIndex unflatten(const std::vector<int>& dims, long long flat);

// Stride of factor k in the flat layout (product of dims after k).
long long factor_stride(const std::vector<int>& dims, int k);

// ---------------------------------------------------------------------------
// Schmidt multiplicity profile

// m0 counts vanishing coefficients, nonzero holds the multiplicities of the
// distinct nonzero values in nonincreasing coefficient order; they sum to N.
struct MultiplicityProfile {
    int m0 = 0;
    std::vector<int> nonzero;
    int N = 0;

    int r() const { return static_cast<int>(nonzero.size()); }
};

}  // namespace lugeo
