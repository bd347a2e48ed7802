#ifndef MHRES_COHOMOLOGY_HPP
#define MHRES_COHOMOLOGY_HPP

#include <optional>
#include <vector>

#include "mhres/system.hpp"

namespace mhres {

// dim H^0(P^l, O(e)): binom(e + l, l) for e >= 0, else 0.
BigInt dim_h0_line(int l, long e);

// dim H^l(P^l, O(e)): binom(-e - 1, l) for e <= -l - 1, else 0.
BigInt dim_htop_line(int l, long e);

struct CohomologySummand {
    int p = 0;                  // twist index, m - p*d
    int q = 0;                  // cohomological degree, q = p - nu
    std::vector<int> j_pattern; // j_k in {0, l_k}, sum = q
    BigInt dim;                 // product of the factor dimensions
    BigInt multiplicity;        // binom(n+1, p)
};

// The unique q with H^q(X, m - p*d) != 0 together with its Kunneth pattern
// and dimension, or nullopt when the twist has no cohomology at all.
std::optional<CohomologySummand> nonzero_coh_index(const SystemData& sys, const DegreeVector& m,
                                                   int p);

struct ComplexTerm {
    int nu = 0;
    std::vector<CohomologySummand> summands;
    BigInt total_dim;
};

// K_nu(m) as a list of nonzero summands; empty summands means the term is 0.
ComplexTerm complex_term(const SystemData& sys, const DegreeVector& m, int nu);

// Serre duality at the level of term dimensions:
// dim K_nu(m) == dim K_{1-nu}(rho - m).
bool dual_term_dim_check(const SystemData& sys, const DegreeVector& m, int nu);

}  // namespace mhres

#endif
