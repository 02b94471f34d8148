#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace biserial {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomial in t, coefficients by degree, no zero leading term.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> c);
    static IntPoly monomial(int deg, BigInt c = 1);
    static IntPoly constant(BigInt c) { return monomial(0, std::move(c)); }

    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : BigInt(0); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    // coefficients reduced into {0, 1}
    IntPoly mod2() const;
    // t-adic valuation, -1 for zero
    int valuation() const;

    std::string text() const;  // t^3 - 2*t

private:
    std::vector<BigInt> c_;
    void trim();
};

// Element of the integral group ring of <s | s^n = 1>.
class CyclicRingElt {
public:
    explicit CyclicRingElt(int n);
    static CyclicRingElt power(int n, int k, BigInt c = 1);  // c s^k

    int order() const { return int(c_.size()); }
    const BigInt& coeff(int k) const { return c_[idx(k)]; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    void add_term(int k, const BigInt& c) { c_[idx(k)] += c; }

    CyclicRingElt operator+(const CyclicRingElt& o) const;
    CyclicRingElt operator-(const CyclicRingElt& o) const;
    CyclicRingElt operator*(const CyclicRingElt& o) const;
    CyclicRingElt scaled(const BigInt& c) const;
    bool operator==(const CyclicRingElt& o) const { return c_ == o.c_; }
    bool operator!=(const CyclicRingElt& o) const { return c_ != o.c_; }

    // s -> s^-1
    CyclicRingElt inverted() const;
    bool is_zero() const;

    std::string text() const;  // s^1 + s^3

private:
    std::vector<BigInt> c_;
    int idx(int k) const;
};

// p(s + s^-1) by Horner's rule
CyclicRingElt evaluate(const IntPoly& p, const CyclicRingElt& x);

// minimal polynomial of zeta_{2^l} + zeta_{2^l}^-1 over the 2-adic field, l >= 2
IntPoly min_poly(int l);
IntPoly pd_poly(int d);

// T(s^2) = 1 + s^2 + ... + s^(2^(d-1) - 2) in the group ring of the cyclic group of order 2^(d-1)
CyclicRingElt t_sigma2(int d);

struct IdentityReport {
    int d = 0;
    bool holds = false;
    std::vector<std::string> steps;  // each checked equality, as text
    std::string lhs, rhs;
};

// p_d(s + s^-1) = prod (s^(2^(l-2)) + s^-(2^(l-2))) = s T(s^2)
IdentityReport rho_identity_report(int d);
bool verify_rho_identity(int d);
// p_d(x) (x - 2) = 2 [T(s^2) - s T(s^2)] with x = s + s^-1
IdentityReport theta_identity_report(int d);
bool verify_theta_identity(int d);

// Smith normal form over the integers.  Every elementary operation is logged so
// that replaying the log on the input reproduces the diagonal.
struct SnfOp {
    bool row = true;
    int kind = 0;  // 0 swap(i, j), 1 add c * j to i, 2 negate i
    int i = 0, j = 0;
    BigInt c = 0;
};

struct SnfResult {
    int rows = 0, cols = 0;
    std::vector<BigInt> diagonal;  // nonzero invariant factors, each dividing the next
    std::vector<SnfOp> ops;
    int rank() const { return int(diagonal.size()); }
};

SnfResult smith_normal_form(std::vector<std::vector<BigInt>> A);
// replay the log and confirm the result is diag(diagonal) padded with zeros
bool verify_snf(const std::vector<std::vector<BigInt>>& A, const SnfResult& r);

enum class LatticeKind { FullInvariants, Sprime, Theta };
LatticeKind parse_lattice_kind(const std::string& s);
std::string lattice_kind_name(LatticeKind k);

struct LatticeReport {
    int d = 0;
    LatticeKind kind = LatticeKind::FullInvariants;
    int ambient = 0;       // size of the coordinate lattice
    int rank = 0;          // free rank of the lattice or quotient
    bool torsion_free = true;
    std::vector<std::string> invariant_factors;
    int certificate_ops = 0;
    bool certificate_verified = false;
};

// Rank of the tau-invariant subring of Z[C_{2^(d-1)}], or of its quotient by
// (T(s^2), s T(s^2)) or by (T(s^2) - s T(s^2)).
LatticeReport invariant_lattice_rank(int d, LatticeKind which);

struct RingMod2Report {
    int d = 0;
    std::vector<std::string> generators;       // p_d(t)(t - 2), 2 p_d(t)
    std::vector<std::string> generators_mod2;
    int exponent = 0;  // the ideal mod 2 is (t^exponent) in k[[t]]
    std::string descriptor;  // k[t]/(t^N)
};

RingMod2Report ring_mod2_presentation(int d);

nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const LatticeReport& r);
nlohmann::json to_json(const RingMod2Report& r);
// everything for one d
nlohmann::json witt_report(int d);

}  // namespace biserial
