#include "mhres/cohomology.hpp"

namespace mhres {

BigInt dim_h0_line(int l, long e) {
    if (e < 0) return BigInt(0);
    return binom(e + l, l);
}

BigInt dim_htop_line(int l, long e) {
    if (e > -l - 1) return BigInt(0);
    return binom(-e - 1, l);
}

std::optional<CohomologySummand> nonzero_coh_index(const SystemData& sys, const DegreeVector& m,
                                                   int p) {
    sys.check_vector(m);
    CohomologySummand out;
    out.p = p;
    out.q = 0;
    out.j_pattern.resize(sys.r, 0);
    out.dim = 1;
    for (int k = 0; k < sys.r; ++k) {
        long e = static_cast<long>(m[k]) - static_cast<long>(p) * sys.d[k];
        if (e >= 0) {
            out.dim *= dim_h0_line(sys.l[k], e);
        } else if (e < -sys.l[k]) {
            out.j_pattern[k] = sys.l[k];
            out.q += sys.l[k];
            out.dim *= dim_htop_line(sys.l[k], e);
        } else {
            return std::nullopt;  // -l_k <= e <= -1: both line cohomologies vanish
        }
    }
    out.multiplicity = binom(sys.n + 1, p);
    return out;
}

ComplexTerm complex_term(const SystemData& sys, const DegreeVector& m, int nu) {
    ComplexTerm out;
    out.nu = nu;
    out.total_dim = 0;
    for (int p = 0; p <= sys.n + 1; ++p) {
        if (p - nu < 0 || p - nu > sys.n) continue;
        auto summand = nonzero_coh_index(sys, m, p);
        if (!summand || summand->q != p - nu) continue;
        out.total_dim += summand->multiplicity * summand->dim;
        out.summands.push_back(std::move(*summand));
    }
    return out;
}

bool dual_term_dim_check(const SystemData& sys, const DegreeVector& m, int nu) {
    DefectProfile dp = defect_profile(sys);
    DegreeVector dual(sys.r);
    for (int k = 0; k < sys.r; ++k) dual[k] = dp.rho[k] - m[k];
    return complex_term(sys, m, nu).total_dim == complex_term(sys, dual, 1 - nu).total_dim;
}

}  // namespace mhres
