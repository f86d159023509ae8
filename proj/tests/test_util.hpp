#ifndef PREHOM_TEST_UTIL_HPP
#define PREHOM_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "prehom/linalg.hpp"
#include "prehom/multipoly.hpp"

namespace prehom::testutil {

inline Rat random_rat(std::mt19937_64& rng, long lo = -5, long hi = 5, long max_den = 3) {
    std::uniform_int_distribution<long> num(lo, hi), den(1, max_den);
    return Rat(num(rng), den(rng));
}

inline std::vector<Rat> random_point(std::mt19937_64& rng, int n, long lo = -5, long hi = 5) {
    std::vector<Rat> p(static_cast<size_t>(n));
    for (auto& x : p) x = random_rat(rng, lo, hi, 1);
    return p;
}

inline MultiPoly random_poly(std::mt19937_64& rng, int n, unsigned max_deg, int terms) {
    MultiPoly f(n);
    std::uniform_int_distribution<unsigned> dd(0, max_deg);
    for (int t = 0; t < terms; ++t) {
        unsigned d = dd(rng);
        Monomial m(n);
        for (unsigned k = 0; k < d; ++k) {
            std::uniform_int_distribution<int> vi(0, n - 1);
            ++m.e[static_cast<size_t>(vi(rng))];
        }
        f.add_term(m, random_rat(rng));
    }
    return f;
}

inline MultiPoly random_homogeneous_poly(std::mt19937_64& rng, int n, unsigned deg, int terms) {
    MultiPoly f(n);
    for (int t = 0; t < terms; ++t) {
        Monomial m(n);
        for (unsigned k = 0; k < deg; ++k) {
            std::uniform_int_distribution<int> vi(0, n - 1);
            ++m.e[static_cast<size_t>(vi(rng))];
        }
        f.add_term(m, random_rat(rng));
    }
    return f;
}

inline RatMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, long lo = -4, long hi = 4) {
    RatMatrix m(rows, cols);
    std::uniform_int_distribution<long> d(lo, hi);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(d(rng));
    return m;
}

inline std::vector<std::string> xyz() { return {"x", "y", "z"}; }

}  // namespace prehom::testutil

#endif
