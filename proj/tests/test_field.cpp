#include <catch2/catch_amalgamated.hpp>

#include <gmpxx.h>

#include "snevily/field.hpp"
#include "snevily/numtheory.hpp"
#include "snevily/random.hpp"
#include "snevily/sweeps.hpp"

using namespace snevily;

namespace {

// Test-side polynomial toolkit over F_p, independent of the library's.
using Poly = std::vector<std::uint64_t>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly mul_mod_p(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return trim(out);
}

// Remainder of a by monic b.
Poly rem_by_monic(Poly a, const Poly& b, std::uint64_t p) {
    a = trim(a);
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
        a = trim(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

// Divisibility oracle: does monic d divide monic f over F_p?
bool divides(const Poly& d, const Poly& f, std::uint64_t p) {
    return rem_by_monic(f, d, p).empty();
}

// Brute-force irreducibility: no monic factor of degree 1..deg/2.
bool brute_force_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly cand(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                cand[i] = c % p;
                c /= p;
            }
            cand[d] = 1;
            if (divides(cand, f, p)) return false;
        }
    }
    return true;
}

// Test-side integer polynomial multiply for the cyclotomic reconstruction oracle.
std::vector<mpz_class> zmul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST_CASE("GF(4) construction matches the canonical enumeration rule") {
    const PrimePowerField f(2, 3);
    CHECK(f.degree() == 2);
    CHECK(f.field_size() == 4);
    // oracle: first monic irreducible quadratic over F_2 in base-2 coefficient order
    Poly first;
    for (std::uint64_t code = 0; code < 4 && first.empty(); ++code) {
        Poly cand{code & 1, (code >> 1) & 1, 1};
        if (brute_force_irreducible(cand, 2)) first = cand;
    }
    REQUIRE(first == Poly{1, 1, 1});  // x^2 + x + 1
    CHECK(f.modulus() == first);
    CHECK(f.zeta() == PrimePowerField::Elem{0, 1});
}

TEST_CASE("degree is the multiplicative order of p mod n") {
    // oracle: brute-force order of 2 mod 7
    std::uint64_t ord = 1, acc = 2 % 7;
    while (acc != 1) {
        acc = acc * 2 % 7;
        ++ord;
    }
    REQUIRE(ord == 3);
    const PrimePowerField f(2, 7);
    CHECK(f.degree() == 3);
    CHECK(f.field_size() == 8);
}

TEST_CASE("characteristic dividing n is rejected") {
    CHECK_THROWS_AS(PrimePowerField(3, 3), std::domain_error);
    CHECK_THROWS_AS(PrimePowerField(4, 3), std::invalid_argument);  // not prime
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_poly(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_poly(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    // first index where a coefficient outside {0, +-1} appears
    const auto p105 = cyclotomic_poly(105);
    CHECK(p105.size() == 49);
    CHECK(p105[7] == -2);
    CHECK(p105[41] == -2);
}

TEST_CASE("product of Phi_d over divisors reconstructs x^n - 1, n <= 60") {
    for (std::uint64_t n = 1; n <= 60; ++n) {
        std::vector<mpz_class> prod{1};
        std::uint64_t phi_deg_sum = 0;
        for (std::uint64_t d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            const auto phi = cyclotomic_poly(d);
            phi_deg_sum += phi.size() - 1;
            prod = zmul(prod, phi);
        }
        REQUIRE(phi_deg_sum == n);
        std::vector<mpz_class> want(n + 1);
        want[0] = -1;
        want[n] = 1;
        REQUIRE(prod == want);
    }
}

TEST_CASE("cyclotomic field basics") {
    const CyclotomicField q(1);
    CHECK(q.degree() == 1);
    CHECK(q.eq(q.zeta(), q.one()));  // the rationals; zeta = 1

    const CyclotomicField c4(4);
    CHECK(c4.eq(c4.mul(c4.zeta(), c4.zeta()), c4.from_integer(-1)));  // zeta^2 = -1

    const CyclotomicField c5(5);
    CHECK(c5.eq(c5.zeta_pow(5), c5.one()));  // x^5 reduces to 1
}

TEST_CASE("GF(4) arithmetic against hand reduction") {
    const PrimePowerField f(2, 3);
    const auto x = f.zeta();
    CHECK(f.mul(x, x) == PrimePowerField::Elem{1, 1});  // x^2 = x + 1
    CHECK(f.eq(f.inv(f.one()), f.one()));
}

TEST_CASE("every nonzero element of GF(8) has a working inverse") {
    const PrimePowerField f(2, 7);
    for (std::uint64_t code = 1; code < f.field_size(); ++code) {
        const auto a = f.element_at(code);
        REQUIRE(f.eq(f.mul(a, f.inv(a)), f.one()));
    }
    CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
}

TEST_CASE("cyclotomic inverses on random elements") {
    SplitMix64 rng(42);
    for (std::uint64_t n : {3ULL, 5ULL, 6ULL, 12ULL}) {
        const CyclotomicField f(n);
        CHECK(f.eq(f.inv(f.one()), f.one()));
        CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
        for (int t = 0; t < 25; ++t) {
            const auto a = random_element(f, rng);
            if (f.is_zero(a)) continue;
            REQUIRE(f.eq(f.mul(a, f.inv(a)), f.one()));
        }
    }
}

TEST_CASE("cyclotomic ring axioms with large rational coefficients") {
    SplitMix64 rng(777);
    for (std::uint64_t n : {7ULL, 15ULL, 24ULL, 105ULL}) {
        const CyclotomicField f(n);
        const auto rnd = [&]() {
            std::vector<mpz_class> num(f.degree());
            for (auto& c : num) c = static_cast<long>(rng.below(2001)) - 1000;
            return f.make_element(std::move(num), static_cast<long>(rng.below(97)) + 1);
        };
        for (int t = 0; t < 10; ++t) {
            const auto a = rnd(), b = rnd(), c = rnd();
            REQUIRE(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
            REQUIRE(f.eq(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
            REQUIRE(f.eq(f.sub(f.add(a, b), b), a));
            if (!f.is_zero(a)) REQUIRE(f.eq(f.mul(a, f.inv(a)), f.one()));
            REQUIRE(f.eq(f.mul(f.pow(a, 3), f.pow(a, 4)), f.pow(a, 7)));
        }
    }
}

TEST_CASE("zeta_weighted_sum matches the mul/add chain") {
    SplitMix64 rng(99);
    for (std::uint64_t n : {5ULL, 12ULL, 21ULL}) {
        const CyclotomicField f(n);
        const PrimePowerField g(admissible_primes(n, 1)[0], n);
        for (int t = 0; t < 20; ++t) {
            std::vector<CyclotomicField::Elem> vals;
            std::vector<PrimePowerField::Elem> gvals;
            std::vector<std::uint64_t> exps;
            for (int i = 0; i < 6; ++i) {
                vals.push_back(random_element(f, rng));
                gvals.push_back(random_element(g, rng));
                exps.push_back(rng.below(3 * n));
            }
            auto slow = f.zero();
            auto gslow = g.zero();
            for (int i = 0; i < 6; ++i) {
                slow = f.add(slow, f.mul(vals[i], f.zeta_pow(exps[i])));
                gslow = g.add(gslow, g.mul(gvals[i], g.zeta_pow(exps[i])));
            }
            REQUIRE(f.eq(f.zeta_weighted_sum(vals, exps), slow));
            REQUIRE(g.eq(g.zeta_weighted_sum(gvals, exps), gslow));
        }
    }
}

TEST_CASE("Frobenius identity (a+b)^p = a^p + b^p") {
    SplitMix64 rng(13);
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {3, 20}, {2, 11}, {7, 16}, {5, 13}}) {
        const PrimePowerField f(p, n);
        for (int t = 0; t < 50; ++t) {
            const auto a = random_element(f, rng);
            const auto b = random_element(f, rng);
            REQUIRE(f.eq(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p))));
        }
    }
}

TEST_CASE("zeta has exact order n for n <= 30, three smallest primes each") {
    for (std::uint64_t n = 1; n <= 30; ++n) {
        for (std::uint64_t p : admissible_primes(n, 3)) {
            const PrimePowerField f(p, n);
            REQUIRE(f.has_exact_order(f.zeta(), n));
            REQUIRE((f.field_size() - 1) % n == 0);
        }
        const CyclotomicField c(n);
        REQUIRE(c.has_exact_order(c.zeta(), n));
        REQUIRE(c.eq(c.zeta_pow(n), c.one()));
        for (std::uint64_t l : prime_divisors(n))
            REQUIRE(!c.eq(c.zeta_pow(n / l), c.one()));
    }
}

TEST_CASE("chosen modulus is irreducible (independent check, d <= 4, p <= 7)") {
    const std::pair<std::uint64_t, std::uint64_t> cases[] = {
        {2, 3}, {2, 7}, {2, 5}, {2, 15}, {3, 4}, {3, 8}, {3, 5},
        {5, 3}, {5, 4}, {5, 8}, {7, 3},  {7, 4}, {7, 5},
    };
    for (const auto& [p, n] : cases) {
        const PrimePowerField f(p, n);
        if (f.degree() > 4) continue;
        INFO("p=" << p << " n=" << n << " d=" << f.degree());
        REQUIRE(brute_force_irreducible(f.modulus(), p));
    }
}

TEST_CASE("construction is deterministic") {
    const PrimePowerField a(3, 8), b(3, 8);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.zeta() == b.zeta());
    const CyclotomicField c1(12), c2(12);
    CHECK(c1.modulus() == c2.modulus());
    CHECK(c1.eq(c1.zeta(), c2.zeta()));
}

TEST_CASE("has_exact_order") {
    const PrimePowerField f(2, 3);
    CHECK(f.has_exact_order(f.one(), 1));
    CHECK(f.has_exact_order(f.zeta(), 3));
    CHECK(!f.has_exact_order(f.zeta(), 1));
    CHECK_THROWS_AS(f.has_exact_order(f.zero(), 3), std::domain_error);
}

TEST_CASE("degenerate n = 1 is supported") {
    const PrimePowerField f(2, 1);
    CHECK(f.degree() == 1);
    CHECK(f.eq(f.zeta(), f.one()));
    const CyclotomicField c(1);
    CHECK(c.eq(c.zeta(), c.one()));
}

TEST_CASE("field element text format") {
    const PrimePowerField f(2, 3);
    CHECK(f.to_string(f.add(f.one(), f.zeta())) == "[1,1]");
    const CyclotomicField c(4);
    const auto half = c.inv(c.from_integer(2));
    CHECK(c.to_string(half) == "[1/2,0]");
}
