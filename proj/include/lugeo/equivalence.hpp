// Decision procedures for local unitary equivalence: the spectral necessary
// test, diagonal-phase matching for nondegenerate spectra, the bipartite
// Schmidt test, the three-qubit reduction, the zero-moment shortcut, a
// multi-start optimizer oracle and the dispatcher that orders them.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lugeo/moment.hpp"
#include "lugeo/state.hpp"
#include "lugeo/types.hpp"

namespace lugeo {

enum class VerdictStatus { Equivalent, NotEquivalent, Inconclusive };

enum class CertificateKind {
    none,
    spectra_mismatch,
    modulus_mismatch,
    phase_inconsistent,
    pair_schmidt_mismatch,  // three-qubit reduction: a two-qubit pair differs
};

const char* to_string(VerdictStatus s);
const char* to_string(CertificateKind k);

// Every NotEquivalent verdict carries one of these, with enough data to
// recheck it independently of the procedure that produced it.
struct Certificate {
    CertificateKind kind = CertificateKind::none;
    int subsystem = -1;            // spectra / pair mismatches
    RVec spectrum_x, spectrum_y;   // the disagreeing sorted lists
    std::vector<int> multi_index;  // modulus mismatch location
    std::vector<long long> cycle;  // integer left-kernel vector over support rows
    std::vector<std::vector<int>> support;  // row multi-indices for the cycle
    double residual = 0.0;         // wrapped cycle contraction, radians
};

struct EquivalenceVerdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    Certificate certificate;
    std::optional<std::vector<Mat>> witness;  // (x W_0 x W_1 ..) x ~ y
    std::string method;
    std::string reason;  // set when Inconclusive
    double objective = -1.0;  // best oracle objective when the oracle ran
};

// Necessary condition: sorted reduced spectra agree factorwise within tol.
bool spectra_match(const PureState& x, const PureState& y, double tol,
                   Certificate* certificate = nullptr);

// Linear system over per-factor-per-level phases plus one global phase,
// one row per supported multi-index (exactly L+1 unit entries per row).
struct PhaseSystem {
    std::vector<std::vector<long long>> rows;
    std::vector<double> rhs;  // angle differences in (-pi, pi]
    std::vector<std::vector<int>> row_indices;
    std::vector<int> col_offset;  // factor k unknowns start here
    int cols = 0;
};

PhaseSystem build_phase_system(const SortedTraceForm& xs,
                               const SortedTraceForm& ys,
                               double support_cut = 1e-8);

struct PhaseSolution {
    bool consistent = false;
    std::vector<double> values;          // per column, global phase last
    std::vector<long long> violated_cycle;  // when inconsistent
    double residual = 0.0;
};

// Unimodular integer elimination: exact left-kernel consistency modulo 2*pi
// plus a particular solution when consistent.
PhaseSolution solve_phase_system(const PhaseSystem& system,
                                 double angle_tol = 1e-7);

// Decides existence of per-factor diagonal phases mapping ys.state to
// xs.state up to global phase.  Definitive both ways when every spectrum is
// nondegenerate; throws DegenerateSpectrum otherwise (gap threshold
// gap_tol).  The witness maps xs.state to ys.state.
EquivalenceVerdict diagonal_phase_match(const SortedTraceForm& xs,
                                        const SortedTraceForm& ys, double tol,
                                        double gap_tol = 1e-6,
                                        double angle_tol = 1e-7);

// L = 2: verdict from Schmidt coefficient lists; witness from the frames.
EquivalenceVerdict bipartite_equiv(const PureState& x, const PureState& y,
                                   double tol);

// Three qubits with at least one nondegenerate factor: reduces to two-qubit
// Schmidt comparisons of the block states.  Witness-free.
EquivalenceVerdict three_qubit_equiv(const PureState& x, const PureState& y,
                                     double tol, double gap_tol = 1e-6);

// Three qubits: states with vanishing moment image are mutually equivalent.
EquivalenceVerdict zero_moment_equiv(const PureState& x, const PureState& y,
                                     double tol);

struct OracleOptions {
    int starts = 20;
    long long budget = 10000;  // total objective evaluations across starts
    std::uint64_t seed = 0;
    double target = 1e-8;
};

// Multi-start Riemannian descent over per-factor unitaries in exponential
// coordinates.  Finds witnesses; never proves a negative.
EquivalenceVerdict optimizer_oracle(const PureState& x, const PureState& y,
                                    const OracleOptions& options = {});

// Dispatcher: spectra test, then the cheapest decisive procedure for the
// input class, falling back to the oracle.
EquivalenceVerdict decide(const PureState& x, const PureState& y,
                          double tol = 1e-9, long long budget = 10000,
                          std::uint64_t seed = 0);

// Reconstruction error of a claimed witness: distance((x W) x, y).
double witness_error(const PureState& x, const PureState& y,
                     const std::vector<Mat>& witness);

}  // namespace lugeo
