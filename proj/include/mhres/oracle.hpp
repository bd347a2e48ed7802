#ifndef MHRES_ORACLE_HPP
#define MHRES_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "mhres/builders.hpp"
#include "mhres/generic_system.hpp"

namespace mhres {

// A fully assigned rational point on the affine chart (one value per x_{kj}).
struct AffinePoint {
    std::vector<Rational> coords;
};

AffinePoint random_affine_point(const SystemData& sys, std::uint64_t seed);

// Random coefficients for every (i, mu).
CoeffAssignment random_assignment(const SystemData& sys, std::uint64_t seed);

// Random coefficients except one solved slot per polynomial, chosen so that
// every f_i vanishes exactly at `point`. Throws DegeneratePoint if no support
// monomial is nonzero at the point (cannot happen on full support).
CoeffAssignment force_common_root(const SystemData& sys, const AffinePoint& point,
                                  std::uint64_t seed);

enum class DetRelation { EqualUpToSign, Proportional, Different };

struct DetCompareResult {
    DetRelation relation = DetRelation::Different;
    Rational ratio;  // det(A)/det(B) on the successful trials
};

// Compares det(A) and det(B) over `trials` random rational specializations of
// the shared coefficient indeterminates. Specializations where both vanish
// are redrawn.
DetCompareResult det_compare(const GenericSystem<CoefDomain>& gs,
                             const LabeledMatrix<CoefDomain>& a,
                             const LabeledMatrix<CoefDomain>& b, int trials, std::uint64_t seed);

// Degree of det(mat) in the coefficients of f_i, measured exactly by
// interpolating det along the scaling path c_{i,.} -> t * c_{i,.} at several
// random base specializations and taking the maximum observed degree.
long coeff_degree_check(const GenericSystem<CoefDomain>& gs, const LabeledMatrix<CoefDomain>& mat,
                        int poly_index, int specializations, std::uint64_t seed);

// Evaluates every entry at the assignment.
LabeledMatrix<RationalDomain> specialize_matrix(const LabeledMatrix<CoefDomain>& mat,
                                                const CoeffAssignment& values);

}  // namespace mhres

#endif
