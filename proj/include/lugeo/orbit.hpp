// Orbit geometry on projective space: the symplectic form, numerical orbit
// and coadjoint-orbit dimensions, the degeneracy measure, the
// coisotropic/Lagrangian/isotropic classification, and the bipartite closed
// forms the numerics are checked against.

#pragma once

#include <vector>

#include "lugeo/lie.hpp"
#include "lugeo/moment.hpp"
#include "lugeo/types.hpp"

namespace lugeo {

enum class OrbitClass {
    symplectic,
    coisotropic_strict,
    lagrangian,
    isotropic_strict,
    none,
};

const char* to_string(OrbitClass c);

struct OrbitReport {
    int dim_orbit = 0;
    int dim_coadjoint = 0;
    int degeneracy = 0;
    int dim_orthocomplement = 0;  // of the orbit tangent inside T P(H)
    OrbitClass classification = OrbitClass::none;
    double tol_used = 0;
};

// Symplectic form evaluated on orthogonalized representatives:
// Im <a.rep, b.rep>.  Both tangent vectors must be attached to v.
double fs_form(const PureState& v, const TangentVector& a,
               const TangentVector& b);

// Orthonormal (over the reals) spanning set of the orbit tangent space at
// [v], found as the numerical rank of all fundamental fields of the local
// su-basis with singular-value cutoff tol * sigma_max.
struct OrbitTangent {
    std::vector<Vec> basis;
    int dim = 0;
};
OrbitTangent orbit_tangent(const PureState& v, double tol = 1e-7);

// Rank of xi -> [xi_k, Y_k] summed over factors at Y = moment image of v.
int coadjoint_dim(const PureState& v, double tol = 1e-7);

// dim O - dim Omega; agrees with the nullity of the restricted form.
int degeneracy(const PureState& v, double tol = 1e-7);

OrbitReport classify(const PureState& v, double tol = 1e-7);

// Closed forms for two identical qunits as a function of the Schmidt
// multiplicity profile.  dim_orthocomplement is dim P(H) - dim O
// = 2 m0^2 + sum m_n^2 - 1 (the sign of the middle term is forced by the
// direct-sum decomposition and is verified numerically in the tests).
struct BipartiteDims {
    int dim_orbit = 0;
    int dim_coadjoint = 0;
    int dim_orthocomplement = 0;
    int degeneracy = 0;
};
BipartiteDims bipartite_dims(const MultiplicityProfile& profile);

// Coadjoint-orbit symplectic form <alpha, [xi, eta]> under the library's
// pairing convention; equals the pullback of fs_form along the moment map.
double kks_form(const MomentImage& alpha, const LocalGenerator& g1,
                const LocalGenerator& g2);

}  // namespace lugeo
