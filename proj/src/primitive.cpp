#include "mrmm/primitive.hpp"

#include "mrmm/error.hpp"

namespace mrmm {

PolyF2 random_monic_poly(unsigned d, Rng& rng) {
    if (d < 1) throw InvalidInput("polynomial degree must be >= 1");
    PolyF2 p = PolyF2::monomial(d);
    p.set_coeff(0, true);
    for (unsigned i = 1; i < d; ++i)
        if (rng() & 1) p.set_coeff(i, true);
    return p;
}

bool is_irreducible(const PolyF2& f) {
    auto deg = f.degree();
    if (!deg || *deg < 1) throw InvalidInput("irreducibility is undefined for constants");
    std::size_t d = *deg;
    if (d == 1) return true;
    PolyF2 x = poly_mod(PolyF2::x(), f);
    PolyF2 t = x;  // X^{2^i} mod f, starting at i = 0
    for (std::size_t i = 1; i <= d / 2; ++i) {
        t = poly_mod(t * t, f);
        PolyF2 g = poly_gcd(f, t + x);
        if (!g.is_one()) return false;
    }
    return true;
}

bool is_primitive(const PolyF2& f, const FactorSet& factors) {
    auto deg = f.degree();
    if (!deg || *deg != factors.d)
        throw InvalidInput("polynomial degree does not match the factor set");
    BigUint group_order = factors.modulus();
    for (const BigUint& p : factors.primes) {
        BigUint e = group_order / p;
        if (poly_pow_mod(PolyF2::x(), e, f).is_one()) return false;
    }
    return true;
}

}  // namespace mrmm
