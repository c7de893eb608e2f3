#include "z2z2u/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "z2z2u/errors.hpp"

namespace z2z2u {

namespace {

std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// GF(2^e) realized as GF(2)[x] / (modulus).
class ExtensionField {
  public:
    explicit ExtensionField(BinPoly modulus) : mod_(std::move(modulus)) {}

    BinPoly mul(const BinPoly& a, const BinPoly& b) const { return (a * b) % mod_; }

    BinPoly pow(BinPoly base, unsigned __int128 k) const {
        BinPoly r = BinPoly::one();
        while (k) {
            if (k & 1) r = mul(r, base);
            base = mul(base, base);
            k >>= 1;
        }
        return r;
    }

  private:
    BinPoly mod_;
};

// x^(2^k) mod p by repeated squaring.
BinPoly frobenius_power_of_x(const BinPoly& p, int k) {
    BinPoly r = BinPoly::monomial(1) % p;
    for (int i = 0; i < k; ++i) r = (r * r) % p;
    return r;
}

}  // namespace

BinPoly FactoredCyclotomic::product() const {
    BinPoly r = BinPoly::one();
    for (const auto& f : factors)
        for (int i = 0; i < f.multiplicity; ++i) r *= f.poly;
    return r;
}

std::uint64_t FactoredCyclotomic::divisor_count() const {
    std::uint64_t c = 1;
    for (const auto& f : factors) c *= static_cast<std::uint64_t>(f.multiplicity + 1);
    return c;
}

int order_of_two(int m) {
    if (m < 1 || m % 2 == 0) throw std::domain_error("order_of_two requires odd m >= 1");
    if (m == 1) return 1;
    int e = 1;
    long long v = 2 % m;
    while (v != 1) {
        v = (v * 2) % m;
        ++e;
    }
    return e;
}

std::vector<std::vector<int>> cyclotomic_cosets(int m) {
    if (m < 1 || m % 2 == 0) throw std::domain_error("cyclotomic_cosets requires odd m >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    std::vector<std::vector<int>> cosets;
    for (int s = 0; s < m; ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        for (int v = s; !seen[v]; v = (2 * v) % m) {
            seen[v] = true;
            c.push_back(v);
        }
        cosets.push_back(std::move(c));
    }
    return cosets;
}

bool is_irreducible(const BinPoly& p) {
    const int e = p.degree();
    if (e < 1) return false;
    if (e == 1) return true;
    if (!p.coeff(0)) return false;
    const BinPoly x = BinPoly::monomial(1);
    if (frobenius_power_of_x(p, e) != x % p) return false;
    for (int q : prime_divisors(e)) {
        BinPoly t = frobenius_power_of_x(p, e / q) + x;
        if (!gcd(p, t).is_one()) return false;
    }
    return true;
}

BinPoly find_irreducible(int e) {
    if (e < 1) throw std::domain_error("find_irreducible requires e >= 1");
    if (e == 1) return BinPoly::from_exponents({0, 1});
    // Candidates x^e + (middle bits) + 1, middle bits counted upward.
    for (std::uint64_t mid = 0;; ++mid) {
        BinPoly c = BinPoly::from_word(mid).shifted(1);
        c += BinPoly::monomial(e);
        c += BinPoly::one();
        if (c.degree() != e) throw std::logic_error("no irreducible polynomial found");
        if (is_irreducible(c)) return c;
    }
}

FactoredCyclotomic factor_xn_minus_1(int n) {
    if (n < 1) throw std::domain_error("factor_xn_minus_1 requires n >= 1");
    int a = 0, m = n;
    while (m % 2 == 0) {
        m /= 2;
        ++a;
    }
    const int mult = 1 << a;

    FactoredCyclotomic out;
    out.n = n;
    out.factors.push_back({BinPoly::from_exponents({0, 1}), mult});
    if (m > 1) {
        const int e = order_of_two(m);
        if (e > 126) throw std::domain_error("extension degree " + std::to_string(e) + " too large");
        const ExtensionField field(find_irreducible(e));
        const unsigned __int128 order = (static_cast<unsigned __int128>(1) << e) - 1;
        const unsigned __int128 cofactor = order / static_cast<unsigned __int128>(m);
        const auto primes = prime_divisors(m);

        BinPoly zeta;
        for (std::uint64_t c = 2;; ++c) {
            BinPoly cand = field.pow(BinPoly::from_word(c), cofactor);
            const bool primitive = std::none_of(primes.begin(), primes.end(), [&](int p) {
                return field.pow(cand, static_cast<unsigned __int128>(m / p)).is_one();
            });
            if (primitive && !cand.is_zero()) {
                zeta = std::move(cand);
                break;
            }
        }

        for (const auto& coset : cyclotomic_cosets(m)) {
            if (coset.front() == 0) continue;
            // prod (x + zeta^s) over the coset, coefficients in GF(2^e).
            std::vector<BinPoly> coeffs{BinPoly::one()};
            for (int s : coset) {
                const BinPoly root = field.pow(zeta, static_cast<unsigned __int128>(s));
                std::vector<BinPoly> next(coeffs.size() + 1);
                for (std::size_t i = 0; i < coeffs.size(); ++i) {
                    next[i + 1] += coeffs[i];
                    next[i] += field.mul(root, coeffs[i]);
                }
                coeffs = std::move(next);
            }
            BinPoly minpoly;
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                if (coeffs[i].is_zero()) continue;
                if (!coeffs[i].is_one()) throw std::logic_error("minimal polynomial left GF(2)");
                minpoly.set_coeff(static_cast<int>(i), true);
            }
            out.factors.push_back({std::move(minpoly), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const Factor& x, const Factor& y) { return x.poly < y.poly; });
    return out;
}

bool divisor_divides(const Divisor& a, const Divisor& b) {
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
        if (a.exponents[i] > b.exponents[i]) return false;
    return true;
}

std::vector<Divisor> enumerate_divisors(const FactoredCyclotomic& fc, std::uint64_t max_count) {
    const std::uint64_t count = fc.divisor_count();
    if (count > max_count)
        throw BudgetExceeded("x^" + std::to_string(fc.n) + "-1 has " + std::to_string(count) +
                                 " divisors, budget is " + std::to_string(max_count),
                             std::log2(static_cast<double>(count)));

    const std::size_t k = fc.factors.size();
    // powers[i][j] = factor_i^j
    std::vector<std::vector<BinPoly>> powers(k);
    for (std::size_t i = 0; i < k; ++i) {
        powers[i].push_back(BinPoly::one());
        for (int j = 1; j <= fc.factors[i].multiplicity; ++j) powers[i].push_back(powers[i].back() * fc.factors[i].poly);
    }

    std::vector<Divisor> out;
    out.reserve(count);
    std::vector<int> exps(k, 0);
    while (true) {
        BinPoly p = BinPoly::one();
        for (std::size_t i = 0; i < k; ++i) p *= powers[i][exps[i]];
        out.push_back({std::move(p), exps});
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (exps[i] < fc.factors[i].multiplicity) {
                ++exps[i];
                break;
            }
            exps[i] = 0;
            if (i == 0) return out;
        }
        if (k == 0) return out;
    }
}

std::vector<BinPoly> divisors_of_xn_minus_1(int n, std::uint64_t max_count) {
    std::vector<BinPoly> out;
    for (auto& d : enumerate_divisors(factor_xn_minus_1(n), max_count)) out.push_back(std::move(d.poly));
    return out;
}

}  // namespace z2z2u
