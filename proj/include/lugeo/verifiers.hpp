// Executable checks that the moment-map fibers of bipartite states are not
// tangent to the zero-coefficient block directions, plus the GHZ fiber
// tangency probe built from Pauli-word curves.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lugeo/lie.hpp"
#include "lugeo/types.hpp"

namespace lugeo {

// Diagonal anti-Hermitian traceless probe: entries i on the N - m0 leading
// (nonvanishing) slots and -i (N - m0)/m0 on the m0 trailing slots.  Its
// bracket scales the vanishing-pair directions by alpha = N/m0.
Mat obstruction_probe(int N, int m0);  // BadProfile unless 1 <= m0 <= N-1

// Tangent direction supported on vanishing Schmidt pairs of a bipartite
// Schmidt-form base state: sum over (k,l) of
//   a_kl * e_k x f_l + b_kl * (i e_k x f_l),
// with p_k = p_l = 0 for every referenced pair.
struct VanishingPairDirection {
    PureState base;
    std::map<std::pair<int, int>, std::pair<double, double>> coefficients;
};

// The two local-algebra fields generating e_k x f_l and i e_k x f_l at the
// base state (both proportional with factor p_0, orthogonal to the base).
std::pair<TangentVector, TangentVector> vanishing_pair_fields(
    const PureState& v, int k, int l);  // NonvanishingCoefficient

struct ObstructionResult {
    double analytic = 0.0;           // double-commutator route
    double finite_difference = 0.0;  // Richardson-refined central difference
    double alpha = 0.0;              // N / m0
};

// Second derivative of the probe pairing along the unitary curve
// exp(tB) v, with B generating exactly the requested direction.  Evaluated
// analytically and by central differences with step h (Richardson h/2).
// The value is alpha * sum(a^2 + b^2), strictly positive for a nonzero
// direction; nonvanishing is what certifies that the fiber leaves the
// vanishing-pair block.
ObstructionResult obstruction(const PureState& v,
                              const VanishingPairDirection& dir, double h);

// Builds B = i sigma_{w0} x .. x sigma_{w(L-1)} (labels x, y, z, 0) at the
// L-qubit GHZ state, verifies that the field of B is omega-orthogonal to
// every orbit direction, then checks that the curve exp(tB) keeps every
// single-factor pairing at zero for each sampled t.  Returns true iff all
// checks pass.
bool ghz_fiber_check(int L, const std::vector<char>& word,
                     const std::vector<double>& t_samples = {0.1, 0.5, 1.3, 2.9});

}  // namespace lugeo
