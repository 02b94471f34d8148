#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biserial/repmod.hpp"
#include "json.hpp"

namespace biserial {

// hom^{kind}(x_i, y_j, l) between string modules:
//   ++ : x_{i+t} -> y_{j-l+t}     +- : x_{i+t} -> y_{j+l-t}
//   -+ : x_{i-t} -> y_{j-l+t}     -- : x_{i-t} -> y_{j+l-t}     for 0 <= t <= l
struct HomDescriptor {
    std::string kind;
    int i = 0, j = 0, l = 0;
    std::string text() const;
};

struct HomElement {
    Morphism map;
    std::optional<HomDescriptor> descriptor;
};

struct HomSpace {
    std::vector<HomElement> basis;
    int dim() const { return int(basis.size()); }
};

// Flattened coordinates of a morphism (blocks in vertex order, row major).
std::vector<Elem> flatten(const Morphism& f);

// Full solution space of N_a X_s = X_t M_a, solved as one linear system.
HomSpace intertwiner_space(const Representation& M, const Representation& N);
// Same space through a projective presentation of M; much smaller systems.
HomSpace hom_space(const Representation& M, const Representation& N);
int hom_dim(const Representation& M, const Representation& N);

// Basis from common substrings: factor strings of S matched with image strings of T.
HomSpace hom_basis_string(const Presentation& p, const StringWord& S, const StringWord& T, const Field& F = Field(1));
// The map named by a descriptor, if it is a homomorphism M(S) -> M(T).
std::optional<HomElement> hom_from_descriptor(const Presentation& p, const StringWord& S, const StringWord& T,
                                              const HomDescriptor& d, const Field& F = Field(1));

struct ProjectiveCover {
    Representation P;                   // direct sum of P(vertices[k])
    Morphism epi;                       // P -> M
    std::vector<int> vertices;          // top composition factors
    std::vector<std::vector<Elem>> lifts;  // lifts[k] in M_{vertices[k]} maps the top of summand k
};

ProjectiveCover projective_cover(const Representation& M);
Representation omega(const Representation& M);
Representation omega_inverse(const Representation& M);
// Omega^k for any integer k
Representation omega_power(const Representation& M, int k);

// Maps M -> N that factor through a projective module.
enum class FactorTest {
    Cover,  // through the projective cover of N (the default)
    AllProjectives  // through every P(v) by every map P(v) -> N
};
Span projective_factor_span(const Representation& M, const Representation& N, FactorTest t = FactorTest::Cover);
bool factors_through_projective(const Representation& M, const Representation& N, const Morphism& h);
int stable_hom_dim(const Representation& M, const Representation& N, FactorTest t = FactorTest::Cover);
int stable_end_dim(const Representation& M);
int end_dim(const Representation& M);
int ext1_dim(const Representation& M, const Representation& N);

struct IsoResult {
    bool isomorphic = false;
    std::string certificate;  // invertible-found | exhaustive | indirect | invariant:<name>
};
IsoResult isomorphism_test(const Representation& M, const Representation& N, std::uint64_t seed = 0x5eed);
bool is_isomorphic(const Representation& M, const Representation& N);

// End(M) is local with residue field the ground field.
bool is_indecomposable(const Representation& M);
bool is_projective(const Representation& M);

// A string S with M(S) isomorphic to M, searched among strings of the right length.
std::optional<StringWord> identify_string(const Representation& M);

nlohmann::json to_json(const Presentation& p, const HomSpace& h);

}  // namespace biserial
