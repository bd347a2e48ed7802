#ifndef MHRES_SYSTEM_HPP
#define MHRES_SYSTEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "mhres/numbers.hpp"

namespace mhres {

// Degree vector m indexing a Weyman complex; always of length r.
using DegreeVector = std::vector<int>;

// Unmixed multihomogeneous problem data: r groups of l_k affine variables,
// n+1 polynomials of multidegree (d_1, ..., d_r) on P^{l_1} x ... x P^{l_r}.
struct SystemData {
    int r = 0;
    std::vector<int> l;
    std::vector<int> d;
    int n = 0;

    SystemData(std::vector<int> l_in, std::vector<int> d_in);

    void check_vector(const DegreeVector& m) const;
};

struct DefectProfile {
    std::vector<int> delta;  // delta_k = l_k - ceil(l_k / d_k)
    std::vector<int> rho;    // rho_k = (n+1) d_k - l_k - 1
};

DefectProfile defect_profile(const SystemData& sys);

struct ResultantDegree {
    BigInt per_poly;  // degree of R in the coefficients of each f_i
    BigInt total;     // (n+1) * per_poly
};

ResultantDegree resultant_degree(const SystemData& sys);

// Permutation of the group indices {1, ..., r} in one-line notation.
class Permutation {
public:
    static Permutation identity(int r);
    static Permutation from_one_line(const std::vector<int>& values);  // 1-based values

    int r() const { return static_cast<int>(rank_.size()); }
    // pi(k) for 1-based k, returning a 1-based rank.
    int operator()(int k) const { return rank_[k - 1]; }

    Permutation inverse() const;
    // pi'(i) = r + 1 - pi(i)
    Permutation dual() const;

    std::vector<int> one_line() const { return rank_; }
    bool operator==(const Permutation&) const = default;

    // All r! permutations in lexicographic one-line order; r <= 8 enforced.
    static std::vector<Permutation> all(int r);

private:
    std::vector<int> rank_;  // rank_[k] = pi(k+1), values 1..r
};

Permutation dual_permutation(const Permutation& pi);

}  // namespace mhres

#endif
