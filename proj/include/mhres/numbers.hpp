#ifndef MHRES_NUMBERS_HPP
#define MHRES_NUMBERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mhres {

using BigInt = mpz_class;
using Rational = mpq_class;

// C(a, b) with the convention that any index outside 0 <= b <= a gives 0.
inline BigInt binom(long a, long b) {
    if (b < 0 || a < 0 || b > a) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
}

// n! / (parts_1! ... parts_r!); requires sum(parts) == n.
inline BigInt multinomial(long n, const std::vector<int>& parts) {
    BigInt out(1);
    long rest = n;
    for (int p : parts) {
        out *= binom(rest, p);
        rest -= p;
    }
    return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
    Rational c(v);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Seeded rational sampling used by the oracle and the verify battery.
// Numerators are drawn from [-9, 9] and denominators from [1, 9].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational operator()() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 9);
        Rational q(num(rng_), den(rng_));
        q.canonicalize();
        return q;
    }

    Rational nonzero() {
        for (;;) {
            Rational q = (*this)();
            if (sgn(q) != 0) return q;
        }
    }

    std::uint64_t uniform(std::uint64_t bound) {
        std::uniform_int_distribution<std::uint64_t> d(0, bound - 1);
        return d(rng_);
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace mhres

#endif
