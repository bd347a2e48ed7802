#ifndef MHRES_GENERIC_SYSTEM_HPP
#define MHRES_GENERIC_SYSTEM_HPP

#include <map>
#include <string>
#include <vector>

#include "mhres/polynomial.hpp"
#include "mhres/system.hpp"

namespace mhres {

// Affine variable names: x2 for a one-variable group, x2_1, x2_2, ... else.
std::string affine_var_name(const SystemData& sys, VarIndex v);
// Same over the doubled x/y universe used by Bezoutians (y index = n + x index).
std::string xy_var_name(const SystemData& sys, VarIndex v);

GroupShape affine_shape(const SystemData& sys);

// All affine monomials with group degree at most e_k in every group, in the
// fixed monomial order. Length = prod binom(e_k + l_k, l_k).
std::vector<Monomial> monomial_basis(const SystemData& sys, const DegreeVector& e);

// One coefficient value per (polynomial, support monomial), flattened as
// i * support_size + support_index.
using CoeffAssignment = std::vector<Rational>;

// The (n+1)-tuple f_0, ..., f_n with full support of multidegree d, over
// either generic coefficient indeterminates or exact rationals.
template <class D>
struct GenericSystem {
    SystemData sys;
    GroupShape shape;
    std::vector<Monomial> support;            // monomial_basis(sys, d)
    std::map<Monomial, std::size_t> support_index;
    std::vector<MultiPoly<D>> polys;          // n+1 entries

    explicit GenericSystem(SystemData s) : sys(std::move(s)), shape(affine_shape(sys)) {
        support = monomial_basis(sys, DegreeVector(sys.d.begin(), sys.d.end()));
        for (std::size_t i = 0; i < support.size(); ++i) support_index.emplace(support[i], i);
    }

    std::size_t coeff_count() const { return (sys.n + 1) * support.size(); }
    VarIndex coeff_var(int i, std::size_t s) const {
        return static_cast<VarIndex>(i * support.size() + s);
    }
};

// Name of the coefficient indeterminate c_{i,mu}: "c{i}_" followed by the
// dense exponent vector of mu joined by underscores.
std::string coeff_name(const SystemData& sys, const std::vector<Monomial>& support, VarIndex cv);

// Generic mode: f_i = sum_mu c_{i,mu} x^mu with fresh indeterminates.
GenericSystem<CoefDomain> make_generic(const SystemData& sys);

// Specialized mode: exact rational coefficients.
GenericSystem<RationalDomain> make_specialized(const SystemData& sys,
                                               const CoeffAssignment& values);

}  // namespace mhres

#endif
