#ifndef MHRES_MONOMIAL_HPP
#define MHRES_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mhres {

using VarIndex = std::uint32_t;

// Sparse exponent vector: (variable, exponent) pairs sorted by variable,
// exponents strictly positive. The ordering is graded, and within a degree
// the monomial that puts more weight on earlier variables comes first, so
// bases list as 1, x1, x2, ..., x1^2, x1*x2, ...
class Monomial {
public:
    Monomial() = default;

    static Monomial var(VarIndex v, std::uint32_t e = 1) {
        Monomial m;
        if (e > 0) m.factors_.emplace_back(v, e);
        return m;
    }

    static Monomial from_exponents(const std::vector<int>& dense) {
        Monomial m;
        for (std::size_t v = 0; v < dense.size(); ++v)
            if (dense[v] > 0) m.factors_.emplace_back(static_cast<VarIndex>(v), dense[v]);
        return m;
    }

    bool is_one() const { return factors_.empty(); }

    long total_degree() const {
        long s = 0;
        for (auto& [v, e] : factors_) s += e;
        return s;
    }

    std::uint32_t degree_in(VarIndex v) const {
        for (auto& [w, e] : factors_)
            if (w == v) return e;
        return 0;
    }

    const std::vector<std::pair<VarIndex, std::uint32_t>>& factors() const { return factors_; }

    std::vector<int> dense_exponents(std::size_t nvars) const {
        std::vector<int> out(nvars, 0);
        for (auto& [v, e] : factors_) out[v] = static_cast<int>(e);
        return out;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial out;
        out.factors_.reserve(factors_.size() + o.factors_.size());
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() && b != o.factors_.end()) {
            if (a->first < b->first)
                out.factors_.push_back(*a++);
            else if (b->first < a->first)
                out.factors_.push_back(*b++);
            else {
                out.factors_.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        out.factors_.insert(out.factors_.end(), a, factors_.end());
        out.factors_.insert(out.factors_.end(), b, o.factors_.end());
        return out;
    }

    // Componentwise quotient, or nullopt when some exponent would go negative.
    std::optional<Monomial> divide(const Monomial& o) const {
        Monomial out;
        auto a = factors_.begin();
        for (auto& [v, e] : o.factors_) {
            while (a != factors_.end() && a->first < v) out.factors_.push_back(*a++);
            if (a == factors_.end() || a->first != v || a->second < e) return std::nullopt;
            if (a->second > e) out.factors_.emplace_back(v, a->second - e);
            ++a;
        }
        out.factors_.insert(out.factors_.end(), a, factors_.end());
        return out;
    }

    static int compare(const Monomial& x, const Monomial& y) {
        long dx = x.total_degree(), dy = y.total_degree();
        if (dx != dy) return dx < dy ? -1 : 1;
        auto a = x.factors_.begin(), b = y.factors_.begin();
        while (a != x.factors_.end() && b != y.factors_.end()) {
            if (a->first != b->first) return a->first < b->first ? -1 : 1;
            if (a->second != b->second) return a->second > b->second ? -1 : 1;
            ++a;
            ++b;
        }
        return 0;  // equal degree forces equal tails
    }

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator<(const Monomial& o) const { return compare(*this, o) < 0; }

    template <class Namer>
    std::string str(Namer&& name) const {
        if (factors_.empty()) return "1";
        std::string out;
        for (auto& [v, e] : factors_) {
            if (!out.empty()) out += "*";
            out += name(v);
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    std::vector<std::pair<VarIndex, std::uint32_t>> factors_;
};

// Variable layout of a product of projective factors on the affine chart:
// group k (0-based) holds sizes[k] variables, flattened group-major.
struct GroupShape {
    std::vector<int> sizes;
    std::vector<int> offsets;  // offsets[k] = first variable of group k
    int total = 0;

    explicit GroupShape(std::vector<int> s = {}) : sizes(std::move(s)) {
        offsets.resize(sizes.size());
        for (std::size_t k = 0; k < sizes.size(); ++k) {
            offsets[k] = total;
            total += sizes[k];
        }
    }

    int group_of(VarIndex v) const {
        int k = static_cast<int>(sizes.size()) - 1;
        while (k > 0 && static_cast<int>(v) < offsets[k]) --k;
        return k;
    }

    long group_degree(const Monomial& m, int k) const {
        long s = 0;
        for (auto& [v, e] : m.factors()) {
            int w = static_cast<int>(v);
            if (w >= offsets[k] && w < offsets[k] + sizes[k]) s += e;
        }
        return s;
    }
};

}  // namespace mhres

#endif
