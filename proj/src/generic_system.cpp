#include "mhres/generic_system.hpp"

#include <functional>

#include "mhres/errors.hpp"

namespace mhres {

GroupShape affine_shape(const SystemData& sys) { return GroupShape(sys.l); }

std::string affine_var_name(const SystemData& sys, VarIndex v) {
    GroupShape shape(sys.l);
    int k = shape.group_of(v);
    int slot = static_cast<int>(v) - shape.offsets[k];
    if (sys.l[k] == 1) return "x" + std::to_string(k + 1);
    return "x" + std::to_string(k + 1) + "_" + std::to_string(slot + 1);
}

std::string xy_var_name(const SystemData& sys, VarIndex v) {
    if (static_cast<int>(v) < sys.n) return affine_var_name(sys, v);
    std::string s = affine_var_name(sys, v - sys.n);
    s[0] = 'y';
    return s;
}

namespace {

void fill_basis(const SystemData& sys, const GroupShape& shape, const DegreeVector& e, int group,
                std::vector<int>& exps, std::vector<Monomial>& out) {
    if (group == sys.r) {
        out.push_back(Monomial::from_exponents(exps));
        return;
    }
    // enumerate exponents of this group with sum <= e_[group]
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == sys.l[group]) {
            fill_basis(sys, shape, e, group + 1, exps, out);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            exps[shape.offsets[group] + slot] = v;
            rec(slot + 1, remaining - v);
        }
        exps[shape.offsets[group] + slot] = 0;
    };
    rec(0, e[group]);
}

}  // namespace

std::vector<Monomial> monomial_basis(const SystemData& sys, const DegreeVector& e) {
    sys.check_vector(e);
    for (int v : e)
        if (v < 0) throw InvalidDegreeVector("monomial basis needs nonnegative degrees");
    GroupShape shape(sys.l);
    std::vector<int> exps(sys.n, 0);
    std::vector<Monomial> out;
    fill_basis(sys, shape, e, 0, exps, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string coeff_name(const SystemData& sys, const std::vector<Monomial>& support, VarIndex cv) {
    std::size_t s = cv % support.size();
    std::size_t i = cv / support.size();
    std::string out = "c" + std::to_string(i);
    for (int e : support[s].dense_exponents(sys.n)) out += "_" + std::to_string(e);
    return out;
}

GenericSystem<CoefDomain> make_generic(const SystemData& sys) {
    GenericSystem<CoefDomain> gs(sys);
    for (int i = 0; i <= sys.n; ++i) {
        std::vector<GenPoly::Term> terms;
        terms.reserve(gs.support.size());
        for (std::size_t s = 0; s < gs.support.size(); ++s)
            terms.push_back({gs.support[s], RatPoly::variable(gs.coeff_var(i, s))});
        gs.polys.push_back(GenPoly::from_terms(std::move(terms)));
    }
    return gs;
}

GenericSystem<RationalDomain> make_specialized(const SystemData& sys,
                                               const CoeffAssignment& values) {
    GenericSystem<RationalDomain> gs(sys);
    if (values.size() != gs.coeff_count())
        throw std::invalid_argument("coefficient assignment has the wrong length");
    for (int i = 0; i <= sys.n; ++i) {
        std::vector<RatPoly::Term> terms;
        for (std::size_t s = 0; s < gs.support.size(); ++s) {
            const Rational& c = values[gs.coeff_var(i, s)];
            if (sgn(c) != 0) terms.push_back({gs.support[s], c});
        }
        gs.polys.push_back(RatPoly::from_terms(std::move(terms)));
    }
    return gs;
}

}  // namespace mhres
