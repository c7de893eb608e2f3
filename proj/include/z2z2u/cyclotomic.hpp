#pragma once

#include <cstdint>
#include <vector>

#include "z2z2u/binpoly.hpp"

namespace z2z2u {

struct Factor {
    BinPoly poly;
    int multiplicity = 1;
};

/// x^n - 1 over GF(2) as a product of distinct irreducibles. For n = 2^a * m
/// with m odd every multiplicity is 2^a.
struct FactoredCyclotomic {
    int n = 0;
    std::vector<Factor> factors;  // sorted by (degree, coefficients)

    BinPoly product() const;
    std::uint64_t divisor_count() const;
};

/// Multiplicative order of 2 modulo odd m >= 1.
int order_of_two(int m);

/// 2-cyclotomic cosets modulo odd m, each listed from its smallest element.
std::vector<std::vector<int>> cyclotomic_cosets(int m);

/// Rabin irreducibility test over GF(2).
bool is_irreducible(const BinPoly& p);

/// First irreducible polynomial of degree e in increasing coefficient order.
BinPoly find_irreducible(int e);

/// Factorization via cyclotomic cosets of the odd part; each coset's minimal
/// polynomial is built from a primitive m-th root of unity in GF(2^e).
/// Throws std::domain_error for n < 1 or when e = ord_m(2) exceeds 126.
FactoredCyclotomic factor_xn_minus_1(int n);

/// A divisor of x^n - 1 together with its exponent vector over the factors.
struct Divisor {
    BinPoly poly;
    std::vector<int> exponents;
};

/// true iff the exponent vector of `a` is componentwise <= that of `b`.
bool divisor_divides(const Divisor& a, const Divisor& b);

/// All monic divisors, lexicographic over exponent vectors (last factor
/// varies fastest). Throws BudgetExceeded when the count exceeds max_count.
std::vector<Divisor> enumerate_divisors(const FactoredCyclotomic& fc, std::uint64_t max_count = 1U << 20);
std::vector<BinPoly> divisors_of_xn_minus_1(int n, std::uint64_t max_count = 1U << 20);

}  // namespace z2z2u
