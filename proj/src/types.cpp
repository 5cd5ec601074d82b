#include "lugeo/types.hpp"

namespace lugeo {

long long space_dim(const std::vector<int>& dims) {
    long long total = 1;
    for (int d : dims) {
        if (d < 1) throw DimensionMismatch("subsystem dimensions must be positive");
        total *= d;
    }
    return total;
}

long long flat_index(const std::vector<int>& dims, const MultiIndex& idx) {
    if (idx.indices.size() != dims.size())
        throw DimensionMismatch("multi-index length does not match factor count");
    long long flat = 0;
    for (size_t j = 0; j < dims.size(); ++j) {
        const int k = idx.indices[j];
        if (k < 0 || k >= dims[j])
            throw IndexOutOfRange("multi-index component out of bounds");
        flat = flat * dims[j] + k;
    }
    return flat;
}

MultiIndex unflatten(const std::vector<int>& dims, long long flat) {
    if (flat < 0 || flat >= space_dim(dims))
        throw IndexOutOfRange("flat index out of bounds");
    MultiIndex idx;
    idx.indices.resize(dims.size());
    for (size_t j = dims.size(); j-- > 0;) {
        idx.indices[j] = static_cast<int>(flat % dims[j]);
        flat /= dims[j];
    }
    return idx;
}

long long factor_stride(const std::vector<int>& dims, int k) {
    if (k < 0 || k >= static_cast<int>(dims.size()))
        throw IndexOutOfRange("factor index out of bounds");
    long long stride = 1;
    for (size_t j = static_cast<size_t>(k) + 1; j < dims.size(); ++j)
        stride *= dims[j];
    return stride;
}

}  // namespace lugeo
