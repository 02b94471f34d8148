#include "doctest.h"

#include <cmath>
#include <random>

#include "biserial/errors.hpp"
#include "biserial/wittrings.hpp"

using namespace biserial;

namespace {

// 2 cos(2 pi / 2^l) is a root of min_poly(l)
double eval(const IntPoly& p, double x) {
    double r = 0;
    for (int k = p.degree(); k >= 0; --k) r = r * x + double(p.coeff(k));
    return r;
}

// rank over Q by fraction-free elimination, an oracle independent of the SNF
int rational_rank(std::vector<std::vector<BigInt>> A) {
    int r = 0;
    const int m = int(A.size()), n = m ? int(A[0].size()) : 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (A[i][c] != 0) piv = i;
        if (piv < 0) continue;
        std::swap(A[r], A[piv]);
        for (int i = 0; i < m; ++i) {
            if (i == r || A[i][c] == 0) continue;
            BigInt a = A[r][c], b = A[i][c];
            for (int k = 0; k < n; ++k) A[i][k] = A[i][k] * a - A[r][k] * b;
        }
        ++r;
    }
    return r;
}

BigInt det3(const std::vector<std::vector<BigInt>>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace

TEST_CASE("polynomial text form") {
    CHECK(pd_poly(3).text() == "t");
    CHECK(pd_poly(4).text() == "t^3 - 2*t");
    CHECK(IntPoly().text() == "0");
    CHECK(IntPoly::constant(-5).text() == "-5");
    CHECK(IntPoly({BigInt(1), BigInt(-1), BigInt(3)}).text() == "3*t^2 - t + 1");
}

TEST_CASE("p_d by the product and by the recursion") {
    IntPoly t = IntPoly::monomial(1);
    for (int d = 3; d <= 12; ++d) {
        const int N = 1 << (d - 2);
        IntPoly p = pd_poly(d);
        CHECK(p.degree() == N - 1);
        CHECK(p.coeff(p.degree()) == 1);
        for (int k = 0; k < p.degree(); ++k) CHECK(p.coeff(k) % 2 == 0);
        CHECK(p.mod2() == IntPoly::monomial(N - 1));
        if (d > 3) CHECK(pd_poly(d) == pd_poly(d - 1) * min_poly(d - 1));
    }
    CHECK(min_poly(2) == t);
    CHECK(min_poly(3) == t * t - IntPoly::constant(2));
}

TEST_CASE("min_poly has the real roots 2 cos(2 pi k / 2^l)") {
    const double pi = 3.14159265358979323846;
    // doubles lose the roots beyond this degree
    for (int l = 2; l <= 5; ++l) {
        IntPoly m = min_poly(l);
        CHECK(m.degree() == (1 << (l - 2)));
        for (int k = 1; k < (1 << l); k += 2) CHECK(std::abs(eval(m, 2 * std::cos(2 * pi * k / (1 << l)))) < 1e-6);
    }
}

TEST_CASE("group ring arithmetic") {
    std::mt19937 rng(11);
    const int n = 16;
    auto rnd = [&] {
        CyclicRingElt x(n);
        for (int k = 0; k < n; ++k)
            if (rng() % 3 == 0) x.add_term(k, BigInt(int(rng() % 7) - 3));
        return x;
    };
    for (int it = 0; it < 30; ++it) {
        CyclicRingElt a = rnd(), b = rnd(), c = rnd();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).inverted() == a.inverted() * b.inverted());
        CHECK((a - a).is_zero());
    }
    CHECK(CyclicRingElt::power(8, 3) * CyclicRingElt::power(8, 6) == CyclicRingElt::power(8, 1));
    CHECK((CyclicRingElt::power(8, 1) + CyclicRingElt::power(8, 3)).text() == "s^1 + s^3");
    CHECK(CyclicRingElt::power(8, -1, 2).text() == "2*s^7");
}

TEST_CASE("identities") {
    for (int d = 3; d <= 12; ++d) {
        CHECK(verify_rho_identity(d));
        CHECK(verify_theta_identity(d));
    }
    CHECK(rho_identity_report(3).rhs == "s^1 + s^3");
    CHECK_THROWS_AS(verify_rho_identity(2), InvalidParameter);
}

TEST_CASE("a wrong identity is caught") {
    // p_4 evaluated at s + s^-1 in the group of order 8 is not s T(s^2) once the constant is changed
    const int n = 8;
    CyclicRingElt x = CyclicRingElt::power(n, 1) + CyclicRingElt::power(n, -1);
    IntPoly bad = pd_poly(4) + IntPoly::constant(2);
    CHECK(evaluate(bad, x) != CyclicRingElt::power(n, 1) * t_sigma2(4));
}

TEST_CASE("Smith normal form against rank and determinant oracles") {
    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        int m = 1 + int(rng() % 5), n = 1 + int(rng() % 5);
        std::vector<std::vector<BigInt>> A(m, std::vector<BigInt>(n));
        for (auto& row : A)
            for (auto& x : row) x = int(rng() % 9) - 4;
        if (it % 7 == 0 && m > 1) A[1] = A[0];
        SnfResult r = smith_normal_form(A);
        CHECK(verify_snf(A, r));
        CHECK(r.rank() == rational_rank(A));
        for (int i = 0; i + 1 < r.rank(); ++i) CHECK(r.diagonal[i + 1] % r.diagonal[i] == 0);
        if (m == 3 && n == 3) {
            BigInt prod = 1;
            for (const BigInt& d : r.diagonal) prod *= d;
            if (r.rank() < 3) prod = 0;
            CHECK(prod == abs(det3(A)));
        }
    }
}

TEST_CASE("tampered certificates are rejected") {
    std::vector<std::vector<BigInt>> A = {{2, 4}, {6, 8}};
    SnfResult r = smith_normal_form(A);
    REQUIRE(verify_snf(A, r));
    CHECK(r.diagonal == std::vector<BigInt>{2, 4});
    SnfResult bad = r;
    bad.diagonal[1] = 8;
    CHECK(!verify_snf(A, bad));
    if (!r.ops.empty()) {
        SnfResult bad2 = r;
        bad2.ops.pop_back();
        CHECK(!verify_snf(A, bad2));
    }
}

TEST_CASE("lattice ranks") {
    for (int d = 3; d <= 10; ++d) {
        const int N = 1 << (d - 2);
        LatticeReport a = invariant_lattice_rank(d, LatticeKind::FullInvariants);
        LatticeReport b = invariant_lattice_rank(d, LatticeKind::Sprime);
        LatticeReport c = invariant_lattice_rank(d, LatticeKind::Theta);
        CHECK(a.rank == N + 1);
        CHECK(b.rank == N - 1);
        CHECK(c.rank == N);
        CHECK(a.certificate_verified);
        CHECK(b.certificate_verified);
        CHECK(c.certificate_verified);
        CHECK(a.torsion_free);
    }
    CHECK(parse_lattice_kind("Sprime") == LatticeKind::Sprime);
    CHECK_THROWS_AS(parse_lattice_kind("nope"), InvalidParameter);
}

TEST_CASE("mod 2 ring") {
    for (int d = 3; d <= 12; ++d) {
        RingMod2Report r = ring_mod2_presentation(d);
        CHECK(r.exponent == (1 << (d - 2)));
        CHECK(r.descriptor == "k[t]/(t^" + std::to_string(1 << (d - 2)) + ")");
    }
    auto j = witt_report(4);
    CHECK(j["pd"]["text"] == "t^3 - 2*t");
    CHECK(j["rho"]["holds"] == true);
    CHECK(j["lattices"].size() == 3);
}
