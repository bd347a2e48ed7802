#include "mhres/system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mhres/errors.hpp"

namespace mhres {

SystemData::SystemData(std::vector<int> l_in, std::vector<int> d_in)
    : l(std::move(l_in)), d(std::move(d_in)) {
    if (l.empty() || l.size() != d.size())
        throw std::invalid_argument("l and d must be nonempty vectors of equal length");
    r = static_cast<int>(l.size());
    for (int k = 0; k < r; ++k)
        if (l[k] < 1 || d[k] < 1)
            throw std::invalid_argument("l_k and d_k must be positive");
    n = std::accumulate(l.begin(), l.end(), 0);
}

void SystemData::check_vector(const DegreeVector& m) const {
    if (static_cast<int>(m.size()) != r)
        throw std::invalid_argument("degree vector length differs from r");
}

DefectProfile defect_profile(const SystemData& sys) {
    DefectProfile out;
    out.delta.resize(sys.r);
    out.rho.resize(sys.r);
    for (int k = 0; k < sys.r; ++k) {
        int ceil_ld = (sys.l[k] + sys.d[k] - 1) / sys.d[k];
        out.delta[k] = sys.l[k] - ceil_ld;
        out.rho[k] = (sys.n + 1) * sys.d[k] - sys.l[k] - 1;
    }
    return out;
}

ResultantDegree resultant_degree(const SystemData& sys) {
    ResultantDegree out;
    out.per_poly = multinomial(sys.n, sys.l);
    for (int k = 0; k < sys.r; ++k) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(sys.d[k]),
                      static_cast<unsigned long>(sys.l[k]));
        out.per_poly *= p;
    }
    out.total = out.per_poly * (sys.n + 1);
    return out;
}

Permutation Permutation::identity(int r) {
    Permutation p;
    p.rank_.resize(r);
    std::iota(p.rank_.begin(), p.rank_.end(), 1);
    return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& values) {
    Permutation p;
    p.rank_ = values;
    std::vector<bool> seen(values.size(), false);
    for (int v : values) {
        if (v < 1 || v > static_cast<int>(values.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation in one-line notation");
        seen[v - 1] = true;
    }
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.rank_.resize(rank_.size());
    for (std::size_t k = 0; k < rank_.size(); ++k) p.rank_[rank_[k] - 1] = static_cast<int>(k) + 1;
    return p;
}

Permutation Permutation::dual() const {
    Permutation p;
    p.rank_.reserve(rank_.size());
    int r = static_cast<int>(rank_.size());
    for (int v : rank_) p.rank_.push_back(r + 1 - v);
    return p;
}

std::vector<Permutation> Permutation::all(int r) {
    if (r < 1 || r > 8) throw std::invalid_argument("permutation enumeration limited to r <= 8");
    std::vector<int> line(r);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(from_one_line(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

Permutation dual_permutation(const Permutation& pi) { return pi.dual(); }

}  // namespace mhres
