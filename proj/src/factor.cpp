#include "mrmm/factor.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

#include "mrmm/error.hpp"

namespace mrmm {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Pollard rho, Brent variant. n must be odd, composite, > 1.
std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    std::uint64_t seed = 1;
    while (true) {
        ++seed;
        std::uint64_t y = seed % n, c = seed, m = 128;
        std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (std::uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            // Backtrack one step at a time.
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
        // Degenerate cycle; retry with the next constant.
    }
}

void factor_u64_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t f = pollard_brent(n);
    factor_u64_into(f, out);
    factor_u64_into(n / f, out);
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // This base set is a proven deterministic witness set for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FactorSet FactorSet::create(unsigned d, std::vector<BigUint> primes) {
    if (d < 1) throw InvalidInput("factor set degree must be >= 1");
    std::sort(primes.begin(), primes.end());
    if (std::adjacent_find(primes.begin(), primes.end()) != primes.end())
        throw InvalidInput("factor set contains a duplicate prime");

    BigUint modulus = pow2_minus_one(d);
    boost::random::mt19937 mr_rng(0x5EED);
    BigUint rebuilt = 1;
    for (const BigUint& p : primes) {
        if (p < 2 || !boost::multiprecision::miller_rabin_test(p, 25, mr_rng))
            throw InvalidInput("factor set entry is not prime: " + p.str());
        if (modulus % p != 0)
            throw InvalidInput("listed prime " + p.str() + " does not divide 2^" +
                               std::to_string(d) + " - 1");
        BigUint rem = modulus;
        while (rem % p == 0) {
            rem /= p;
            rebuilt *= p;
        }
    }
    if (rebuilt != modulus)
        throw InvalidInput("prime list does not reconstruct 2^" + std::to_string(d) +
                           " - 1 (factors missing)");

    FactorSet fs;
    fs.d = d;
    fs.primes = std::move(primes);
    return fs;
}

FactorSet factor_2d_minus_1(unsigned d) {
    if (d < 1) throw InvalidInput("degree must be >= 1");
    if (d > 64)
        throw UnsupportedDegree("built-in factorizer is capped at d = 64; supply a factor file "
                                "(--factors) for d = " +
                                std::to_string(d));
    std::uint64_t n = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
    std::vector<std::uint64_t> raw;
    std::uint64_t rest = n;
    for (std::uint64_t p = 3; p <= 1000000 && p * p <= rest; p += 2) {
        if (rest % p == 0) {
            raw.push_back(p);
            while (rest % p == 0) rest /= p;
        }
    }
    if (rest > 1) factor_u64_into(rest, raw);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<BigUint> primes(raw.begin(), raw.end());
    return FactorSet::create(d, std::move(primes));
}

FactorSet load_factor_set(std::istream& in) {
    std::string line;
    bool saw_format = false;
    bool saw_d = false, saw_primes = false;
    unsigned d = 0;
    std::vector<BigUint> primes;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw FormatError("factor file: expected key=value, got '" + line + "'");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (key == "format") {
            if (value != "1") throw FormatError("factor file: unsupported format '" + value + "'");
            saw_format = true;
        } else if (key == "d") {
            try {
                std::size_t pos = 0;
                unsigned long v = std::stoul(value, &pos);
                if (pos != value.size() || v == 0 || v > 1u << 20)
                    throw std::invalid_argument("range");
                d = static_cast<unsigned>(v);
            } catch (const std::exception&) {
                throw FormatError("factor file: bad degree '" + value + "'");
            }
            saw_d = true;
        } else if (key == "primes") {
            std::stringstream ss(value);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                tok = trimmed(tok);
                if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                    throw FormatError("factor file: bad prime '" + tok + "'");
                primes.emplace_back(tok);
            }
            saw_primes = true;
        } else {
            throw FormatError("factor file: unknown key '" + key + "'");
        }
    }
    if (!saw_format) throw FormatError("factor file: missing format=1 line");
    if (!saw_d) throw FormatError("factor file: missing d= line");
    if (!saw_primes) throw FormatError("factor file: missing primes= line");
    return FactorSet::create(d, std::move(primes));
}

BigUint totient(const FactorSet& fs) {
    BigUint n = fs.modulus();
    BigUint phi = 1;
    for (const BigUint& p : fs.primes) {
        BigUint pk = 1;
        BigUint rem = n;
        while (rem % p == 0) {
            rem /= p;
            pk *= p;
        }
        phi *= pk / p * (p - 1);
    }
    return phi;
}

void save_factor_set(const FactorSet& fs, std::ostream& out) {
    out << "format=1\n";
    out << "d=" << fs.d << "\n";
    out << "primes=";
    for (std::size_t i = 0; i < fs.primes.size(); ++i) {
        if (i) out << ",";
        out << fs.primes[i].str();
    }
    out << "\n";
}

}  // namespace mrmm
