#ifndef MHRES_BUILDERS_HPP
#define MHRES_BUILDERS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mhres/degree_vectors.hpp"
#include "mhres/generic_system.hpp"
#include "mhres/matrix.hpp"

namespace mhres {

// Sylvester map matrix for (g_0,...,g_n) -> sum g_i f_i in degree m.
// Rows are pairs (i, b) with b in the basis of degree m - d (the K_1 side),
// columns are basis monomials of degree m; entry((i,b), a) = coeff of f_i at
// a/b when that quotient lies in the support, else 0.
template <class D>
LabeledMatrix<D> build_sylvester(const GenericSystem<D>& gs, const DegreeVector& m);

template <class D>
struct BezoutianPoly {
    MultiPoly<D> b;  // polynomial in the doubled x/y universe
    Permutation pi;
    DegreeVector m_pi;       // bounds the y-side group degrees
    DegreeVector m_pi_dual;  // bounds the x-side group degrees
};

// Cayley-quotient Bezoutian: the (n+1)x(n+1) matrix with column j holding
// f_j, rows substituting x -> y one variable at a time in the order
// sigma = pi^{-1} (groups in sigma order, slots ascending), its determinant
// divided exactly by prod (x_v - y_v).
template <class D>
BezoutianPoly<D> build_bezoutian(const GenericSystem<D>& gs, const Permutation& pi);

// Coefficient matrix (b_{alpha beta}) of the Bezoutian: rows indexed by
// x-monomials of degree <= m^{pi'}, columns by y-monomials of degree <= m^pi.
// Requires all defects zero; square of size deg R / (n+1).
template <class D>
LabeledMatrix<D> build_bezout_matrix(const GenericSystem<D>& gs, const Permutation& pi);

struct RankReport {
    long generic_rank = 0;
    bool full_row_rank = false;
};

// Randomized rank over Z/p (p = kRankTestPrime): substitutes independent
// uniform residues for the coefficient indeterminates, takes the maximum
// rank over `trials` draws.
RankReport rank_test(const LabeledMatrix<CoefDomain>& mat, int trials, std::uint64_t seed);

// ---- implementation ----

template <class D>
LabeledMatrix<D> build_sylvester(const GenericSystem<D>& gs, const DegreeVector& m) {
    const SystemData& sys = gs.sys;
    sys.check_vector(m);
    DegreeVector shifted(sys.r);
    for (int k = 0; k < sys.r; ++k) {
        shifted[k] = m[k] - sys.d[k];
        if (shifted[k] < 0) throw InvalidDegreeVector("m - d has a negative coordinate");
    }
    if (!admits_sylvester(sys, m))
        throw InvalidDegreeVector("degree vector does not admit a Sylvester matrix");

    std::vector<Monomial> row_basis = monomial_basis(sys, shifted);
    std::vector<Monomial> col_basis = monomial_basis(sys, m);
    auto namer = [&sys](VarIndex v) { return affine_var_name(sys, v); };

    std::vector<std::string> row_labels;
    row_labels.reserve((sys.n + 1) * row_basis.size());
    for (int i = 0; i <= sys.n; ++i)
        for (auto& b : row_basis) {
            std::string lbl = "f" + std::to_string(i);
            if (!b.is_one()) lbl += "*" + b.str(namer);
            row_labels.push_back(lbl);
        }
    std::vector<std::string> col_labels;
    col_labels.reserve(col_basis.size());
    for (auto& a : col_basis) col_labels.push_back(a.str(namer));

    LabeledMatrix<D> out(std::move(row_labels), std::move(col_labels));
    std::size_t row = 0;
    for (int i = 0; i <= sys.n; ++i) {
        for (auto& b : row_basis) {
            for (std::size_t col = 0; col < col_basis.size(); ++col) {
                auto mu = col_basis[col].divide(b);
                if (!mu) continue;
                if (!gs.support_index.count(*mu)) continue;
                out.at(row, col) = gs.polys[i].coefficient(*mu);
            }
            ++row;
        }
    }
    return out;
}

template <class D>
BezoutianPoly<D> build_bezoutian(const GenericSystem<D>& gs, const Permutation& pi) {
    const SystemData& sys = gs.sys;
    const int n = sys.n;
    Permutation sigma = pi.inverse();
    std::vector<VarIndex> order;  // x variables in substitution order
    order.reserve(n);
    for (int t = 1; t <= sys.r; ++t) {
        int g = sigma(t) - 1;
        for (int j = 0; j < sys.l[g]; ++j)
            order.push_back(static_cast<VarIndex>(gs.shape.offsets[g] + j));
    }

    LabeledMatrix<PolyDomain<D>> cayley(std::vector<std::string>(n + 1),
                                        std::vector<std::string>(n + 1));
    for (int s = 0; s <= n; ++s) {
        std::vector<bool> to_y(n, false);
        for (int t = 0; t < s; ++t) to_y[order[t]] = true;
        auto map = [&](VarIndex v) {
            return to_y[v] ? static_cast<VarIndex>(v + n) : v;
        };
        for (int j = 0; j <= n; ++j) cayley.at(s, j) = remap_variables(gs.polys[j], map);
    }

    MultiPoly<D> b = det_fraction_free(cayley);
    for (VarIndex v : order) b = divide_linear_difference(b, v, static_cast<VarIndex>(v + n));

    BezoutianPoly<D> out{std::move(b), pi, bezout_vector(sys, pi),
                         bezout_vector(sys, pi.dual())};
    return out;
}

template <class D>
LabeledMatrix<D> build_bezout_matrix(const GenericSystem<D>& gs, const Permutation& pi) {
    const SystemData& sys = gs.sys;
    DefectProfile dp = defect_profile(sys);
    for (int k = 0; k < sys.r; ++k)
        if (dp.delta[k] != 0)
            throw NonzeroDefect("pure Bezout matrices require all defects zero");

    BezoutianPoly<D> bz = build_bezoutian(gs, pi);
    std::vector<Monomial> row_basis = monomial_basis(sys, bz.m_pi_dual);  // x side
    std::vector<Monomial> col_basis = monomial_basis(sys, bz.m_pi);      // y side

    std::map<Monomial, std::size_t> row_index, col_index;
    for (std::size_t i = 0; i < row_basis.size(); ++i) row_index.emplace(row_basis[i], i);
    for (std::size_t j = 0; j < col_basis.size(); ++j) col_index.emplace(col_basis[j], j);

    auto xname = [&sys](VarIndex v) { return affine_var_name(sys, v); };
    auto yname = [&sys, &xname](VarIndex v) {
        std::string s = xname(v);
        s[0] = 'y';
        return s;
    };
    std::vector<std::string> row_labels, col_labels;
    for (auto& a : row_basis) row_labels.push_back(a.str(xname));
    for (auto& bmono : col_basis) col_labels.push_back(bmono.str(yname));

    const int n = sys.n;
    LabeledMatrix<D> out(std::move(row_labels), std::move(col_labels));
    for (auto& term : bz.b.terms()) {
        Monomial alpha, beta;
        for (auto& [v, e] : term.mono.factors()) {
            if (static_cast<int>(v) < n)
                alpha = alpha * Monomial::var(v, e);
            else
                beta = beta * Monomial::var(static_cast<VarIndex>(v - n), e);
        }
        auto ri = row_index.find(alpha);
        auto ci = col_index.find(beta);
        if (ri == row_index.end() || ci == col_index.end())
            throw DomainError("Bezoutian term outside its support bounds");
        out.at(ri->second, ci->second) = term.coef;
    }
    return out;
}

}  // namespace mhres

#endif
