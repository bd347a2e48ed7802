#ifndef MHRES_DEGREE_VECTORS_HPP
#define MHRES_DEGREE_VECTORS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mhres/cohomology.hpp"
#include "mhres/system.hpp"

namespace mhres {

// P_k(m) = { p integer : m_k/d_k < p <= (m_k + l_k)/d_k }, k 1-based.
std::vector<int> pk_set(const SystemData& sys, const DegreeVector& m, int k);

// m is determinantal iff K_{-1}(m) = K_2(m) = 0.
bool is_determinantal(const SystemData& sys, const DegreeVector& m);

// A determinantal vector exists iff every defect is at most 2.
bool has_determinantal_data(const SystemData& sys);

struct Box {
    std::vector<int> lower, upper;
    long volume() const;
    bool contains(const DegreeVector& m) const;
};

// Componentwise bounds that every determinantal vector satisfies:
// max{-d_k, -l_k} <= m_k <= d_k(n+1) - 1 + min{d_k - l_k, 0}.
Box det_search_box(const SystemData& sys);

// Wider display box, from the raw one-sided bounds before intersection:
// -d_k - l_k <= m_k <= (n+2) d_k - l_k - 1. Enumeration only tests the
// det_search_box subset; the margin provably contains nothing.
Box det_scan_box(const SystemData& sys);

struct DeterminantalReport {
    DegreeVector m;
    BigInt matrix_dim;  // dim K_0(m) = dim K_1(m)
    std::vector<CohomologySummand> k1_summary, k0_summary;
    std::vector<std::vector<int>> pk_sets;
};

struct EnumerationResult {
    Box tested_box;
    Box scan_box;
    long tested = 0;
    std::vector<DeterminantalReport> records;  // sorted by (matrix_dim, m lex)
};

EnumerationResult enumerate_determinantal(const SystemData& sys);

// The perturbed vectors m' (up) and m'' (down) at coordinate k (1-based).
std::pair<DegreeVector, DegreeVector> perturb_vectors(const SystemData& sys, const DegreeVector& m,
                                                      int k);

enum class MPiVariant {
    DefectAtMostTwo,  // m_k = (1 - delta_k + sum_{pi(j) >= pi(k)} l_j) d_k - l_k
    DefectAtMostOne,  // m_k = (  - delta_k + sum_{pi(j) >= pi(k)} l_j) d_k - l_k
};

// Explicit determinantal vector for a permutation; throws DefectTooLarge
// when the data violates the variant's defect bound.
DegreeVector m_pi_determinantal(const SystemData& sys, const Permutation& pi, MPiVariant variant);

// Two-term complexes (one cohomology on each of K_0, K_1) exist iff all
// defects vanish.
bool two_term_possible(const SystemData& sys);

// m^pi_k = (1 + sum_{pi(j) >= pi(k)} l_j) d_k - l_k
DegreeVector sylvester_vector(const SystemData& sys, const Permutation& pi);

// Some permutation pi with m >= m^pi componentwise, if any.
std::optional<Permutation> admits_sylvester(const SystemData& sys, const DegreeVector& m);

struct SylvesterRecord {
    DegreeVector m;
    BigInt dim_k1;  // (n+1) * dim H^0(X, m - d)
    BigInt dim_k0;  // dim H^0(X, m)
};

struct SylvesterSearch {
    Box box;
    DegreeVector probe;  // first candidate evaluated, also counted in `tested`
    long tested = 0;
    std::vector<SylvesterRecord> records;  // sorted by (dim_k0, dim_k1, m lex desc)
};

// All Sylvester-admissible vectors in the box spanned by the r! vectors m^pi.
SylvesterSearch find_sylvester(const SystemData& sys);

// The r! candidate rows (m^pi, dims), deduplicated, smallest dim_k0 first.
std::vector<SylvesterRecord> min_sylvester(const SystemData& sys);

// m^pi_k = -l_k + d_k sum_{pi(j) >= pi(k)} l_j
DegreeVector bezout_vector(const SystemData& sys, const Permutation& pi);

struct BezoutRecord {
    DegreeVector m;
    BigInt dim_k0;
    BigInt dim_k1;
};

struct BezoutSearch {
    Box box;  // 0 <= m_k <= rho_k
    DegreeVector probe;
    long tested = 0;
    std::vector<BezoutRecord> records;
};

// Exhaustive search for vectors whose complex is exactly
// H^n(X, m-(n+1)d) -> H^0(X, m) with K_{-1} = K_2 = 0.
BezoutSearch find_bezout(const SystemData& sys);

}  // namespace mhres

#endif
