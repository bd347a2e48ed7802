#include "mhres/degree_vectors.hpp"

#include <algorithm>

#include "mhres/errors.hpp"

namespace mhres {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// remainder after division by d_k, in {0, ..., d_k - 1}
int mod_pos(long a, int d) {
    long r = a % d;
    if (r < 0) r += d;
    return static_cast<int>(r);
}

// sum of l_j over j with pi(j) >= pi(k); includes j = k
long tail_weight(const SystemData& sys, const Permutation& pi, int k) {
    long s = 0;
    for (int j = 1; j <= sys.r; ++j)
        if (pi(j) >= pi(k)) s += sys.l[j - 1];
    return s;
}

bool lex_less(const DegreeVector& a, const DegreeVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// odometer over a box, first coordinate slowest; calls fn on every vector
template <class Fn>
void scan_box(const Box& box, Fn&& fn) {
    DegreeVector m = box.lower;
    const std::size_t r = m.size();
    for (std::size_t k = 0; k < r; ++k)
        if (box.lower[k] > box.upper[k]) return;
    for (;;) {
        fn(m);
        std::size_t k = r;
        while (k > 0) {
            --k;
            if (m[k] < box.upper[k]) {
                ++m[k];
                break;
            }
            m[k] = box.lower[k];
            if (k == 0) return;
        }
    }
}

BigInt dim_h0_product(const SystemData& sys, const DegreeVector& m, int shift_times_d) {
    BigInt out(1);
    for (int k = 0; k < sys.r; ++k)
        out *= dim_h0_line(sys.l[k], static_cast<long>(m[k]) - shift_times_d * sys.d[k]);
    return out;
}

}  // namespace

long Box::volume() const {
    long v = 1;
    for (std::size_t k = 0; k < lower.size(); ++k) {
        if (upper[k] < lower[k]) return 0;
        v *= upper[k] - lower[k] + 1;
    }
    return v;
}

bool Box::contains(const DegreeVector& m) const {
    for (std::size_t k = 0; k < lower.size(); ++k)
        if (m[k] < lower[k] || m[k] > upper[k]) return false;
    return true;
}

std::vector<int> pk_set(const SystemData& sys, const DegreeVector& m, int k) {
    sys.check_vector(m);
    if (k < 1 || k > sys.r) throw std::invalid_argument("group index out of range");
    int d = sys.d[k - 1];
    long lo = floor_div(m[k - 1], d) + 1;             // smallest p with p*d > m_k
    long hi = floor_div(m[k - 1] + sys.l[k - 1], d);  // largest p with p*d <= m_k + l_k
    std::vector<int> out;
    for (long p = lo; p <= hi; ++p) out.push_back(static_cast<int>(p));
    return out;
}

bool is_determinantal(const SystemData& sys, const DegreeVector& m) {
    return complex_term(sys, m, -1).total_dim == 0 && complex_term(sys, m, 2).total_dim == 0;
}

bool has_determinantal_data(const SystemData& sys) {
    for (int delta : defect_profile(sys).delta)
        if (delta > 2) return false;
    return true;
}

Box det_search_box(const SystemData& sys) {
    Box box;
    box.lower.resize(sys.r);
    box.upper.resize(sys.r);
    for (int k = 0; k < sys.r; ++k) {
        box.lower[k] = std::max(-sys.d[k], -sys.l[k]);
        box.upper[k] = sys.d[k] * (sys.n + 1) - 1 + std::min(sys.d[k] - sys.l[k], 0);
    }
    return box;
}

Box det_scan_box(const SystemData& sys) {
    Box box;
    box.lower.resize(sys.r);
    box.upper.resize(sys.r);
    for (int k = 0; k < sys.r; ++k) {
        box.lower[k] = -sys.d[k] - sys.l[k];
        box.upper[k] = (sys.n + 2) * sys.d[k] - sys.l[k] - 1;
    }
    return box;
}

EnumerationResult enumerate_determinantal(const SystemData& sys) {
    EnumerationResult out;
    out.tested_box = det_search_box(sys);
    out.scan_box = det_scan_box(sys);
    if (!has_determinantal_data(sys)) return out;

    scan_box(out.tested_box, [&](const DegreeVector& m) {
        ++out.tested;
        if (!is_determinantal(sys, m)) return;
        DeterminantalReport rep;
        rep.m = m;
        ComplexTerm k0 = complex_term(sys, m, 0);
        ComplexTerm k1 = complex_term(sys, m, 1);
        rep.matrix_dim = k0.total_dim;
        rep.k0_summary = std::move(k0.summands);
        rep.k1_summary = std::move(k1.summands);
        for (int k = 1; k <= sys.r; ++k) rep.pk_sets.push_back(pk_set(sys, m, k));
        out.records.push_back(std::move(rep));
    });

    std::sort(out.records.begin(), out.records.end(),
              [](const DeterminantalReport& a, const DeterminantalReport& b) {
                  if (a.matrix_dim != b.matrix_dim) return a.matrix_dim < b.matrix_dim;
                  return lex_less(a.m, b.m);
              });
    return out;
}

std::pair<DegreeVector, DegreeVector> perturb_vectors(const SystemData& sys, const DegreeVector& m,
                                                      int k) {
    sys.check_vector(m);
    if (k < 1 || k > sys.r) throw std::invalid_argument("group index out of range");
    int d = sys.d[k - 1];
    DegreeVector up = m, down = m;
    up[k - 1] = m[k - 1] + d - mod_pos(m[k - 1], d) - 1;
    down[k - 1] = m[k - 1] - mod_pos(m[k - 1] + sys.l[k - 1], d);
    return {up, down};
}

DegreeVector m_pi_determinantal(const SystemData& sys, const Permutation& pi, MPiVariant variant) {
    DefectProfile dp = defect_profile(sys);
    int bound = variant == MPiVariant::DefectAtMostTwo ? 2 : 1;
    for (int k = 0; k < sys.r; ++k)
        if (dp.delta[k] > bound)
            throw DefectTooLarge("defect " + std::to_string(dp.delta[k]) + " exceeds " +
                                 std::to_string(bound));
    int base = variant == MPiVariant::DefectAtMostTwo ? 1 : 0;
    DegreeVector m(sys.r);
    for (int k = 1; k <= sys.r; ++k)
        m[k - 1] = static_cast<int>((base - dp.delta[k - 1] + tail_weight(sys, pi, k)) *
                                        static_cast<long>(sys.d[k - 1]) -
                                    sys.l[k - 1]);
    return m;
}

bool two_term_possible(const SystemData& sys) {
    for (int delta : defect_profile(sys).delta)
        if (delta != 0) return false;
    return true;
}

DegreeVector sylvester_vector(const SystemData& sys, const Permutation& pi) {
    DegreeVector m(sys.r);
    for (int k = 1; k <= sys.r; ++k)
        m[k - 1] = static_cast<int>((1 + tail_weight(sys, pi, k)) * static_cast<long>(sys.d[k - 1]) -
                                    sys.l[k - 1]);
    return m;
}

std::optional<Permutation> admits_sylvester(const SystemData& sys, const DegreeVector& m) {
    sys.check_vector(m);
    for (const Permutation& pi : Permutation::all(sys.r)) {
        DegreeVector mp = sylvester_vector(sys, pi);
        bool dominated = true;
        for (int k = 0; k < sys.r; ++k)
            if (m[k] < mp[k]) {
                dominated = false;
                break;
            }
        if (dominated) return pi;
    }
    return std::nullopt;
}

namespace {

SylvesterRecord sylvester_record(const SystemData& sys, const DegreeVector& m) {
    SylvesterRecord rec;
    rec.m = m;
    rec.dim_k1 = dim_h0_product(sys, m, 1) * (sys.n + 1);
    rec.dim_k0 = dim_h0_product(sys, m, 0);
    return rec;
}

void sort_sylvester(std::vector<SylvesterRecord>& recs) {
    std::sort(recs.begin(), recs.end(), [](const SylvesterRecord& a, const SylvesterRecord& b) {
        if (a.dim_k0 != b.dim_k0) return a.dim_k0 < b.dim_k0;
        if (a.dim_k1 != b.dim_k1) return a.dim_k1 < b.dim_k1;
        return lex_less(b.m, a.m);
    });
}

}  // namespace

SylvesterSearch find_sylvester(const SystemData& sys) {
    SylvesterSearch out;
    std::vector<DegreeVector> family;
    for (const Permutation& pi : Permutation::all(sys.r))
        family.push_back(sylvester_vector(sys, pi));
    out.box.lower = family[0];
    out.box.upper = family[0];
    out.probe = family[0];
    for (const DegreeVector& m : family) {
        if (lex_less(m, out.probe)) out.probe = m;
        for (int k = 0; k < sys.r; ++k) {
            out.box.lower[k] = std::min(out.box.lower[k], m[k]);
            out.box.upper[k] = std::max(out.box.upper[k], m[k]);
        }
    }
    out.tested = 1;  // the probe is evaluated before the sweep
    scan_box(out.box, [&](const DegreeVector& m) {
        ++out.tested;
        if (admits_sylvester(sys, m)) out.records.push_back(sylvester_record(sys, m));
    });
    sort_sylvester(out.records);
    return out;
}

std::vector<SylvesterRecord> min_sylvester(const SystemData& sys) {
    std::vector<SylvesterRecord> recs;
    for (const Permutation& pi : Permutation::all(sys.r)) {
        DegreeVector m = sylvester_vector(sys, pi);
        bool seen = false;
        for (auto& r : recs)
            if (r.m == m) {
                seen = true;
                break;
            }
        if (!seen) recs.push_back(sylvester_record(sys, m));
    }
    sort_sylvester(recs);
    return recs;
}

DegreeVector bezout_vector(const SystemData& sys, const Permutation& pi) {
    DegreeVector m(sys.r);
    for (int k = 1; k <= sys.r; ++k)
        m[k - 1] = static_cast<int>(tail_weight(sys, pi, k) * static_cast<long>(sys.d[k - 1]) -
                                    sys.l[k - 1]);
    return m;
}

BezoutSearch find_bezout(const SystemData& sys) {
    BezoutSearch out;
    DefectProfile dp = defect_profile(sys);
    out.box.lower.assign(sys.r, 0);
    out.box.upper = dp.rho;  // 0 <= m_k < (n+1) d_k - l_k
    out.probe = out.box.lower;
    out.tested = 1;

    auto pure_bezout = [&](const DegreeVector& m) -> std::optional<BezoutRecord> {
        if (complex_term(sys, m, -1).total_dim != 0) return std::nullopt;
        if (complex_term(sys, m, 2).total_dim != 0) return std::nullopt;
        ComplexTerm k0 = complex_term(sys, m, 0);
        ComplexTerm k1 = complex_term(sys, m, 1);
        if (k0.summands.size() != 1 || k0.summands[0].p != 0) return std::nullopt;
        if (k1.summands.size() != 1 || k1.summands[0].p != sys.n + 1 ||
            k1.summands[0].q != sys.n)
            return std::nullopt;
        return BezoutRecord{m, k0.total_dim, k1.total_dim};
    };

    scan_box(out.box, [&](const DegreeVector& m) {
        ++out.tested;
        auto rec = pure_bezout(m);
        if (rec) out.records.push_back(std::move(*rec));
    });
    std::sort(out.records.begin(), out.records.end(),
              [](const BezoutRecord& a, const BezoutRecord& b) {
                  if (a.dim_k0 != b.dim_k0) return a.dim_k0 < b.dim_k0;
                  return lex_less(a.m, b.m);
              });
    return out;
}

}  // namespace mhres
