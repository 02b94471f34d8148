#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biserial/field.hpp"
#include "biserial/matrix.hpp"
#include "biserial/presentation.hpp"
#include "biserial/strings.hpp"
#include "json.hpp"

namespace biserial {

struct Provenance {
    std::string kind = "abstract";  // string | band | projective | abstract
    std::string detail;             // word text, band text with lambda and m, vertex
};

// A module given by a vector space at each vertex and a matrix per arrow.
// map(a) has shape dim(target) x dim(source) and acts on column vectors.
class Representation {
public:
    Representation(Presentation p, Field F, std::vector<int> dims, std::vector<Matrix> maps, Provenance prov = {});

    const Presentation& presentation() const { return p_; }
    const Field& field() const { return F_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int v) const { return dims_[v]; }
    int total_dim() const;
    const Matrix& map(int a) const { return maps_[a]; }
    const std::vector<Matrix>& maps() const { return maps_; }
    const Provenance& provenance() const { return prov_; }
    void set_provenance(Provenance p) { prov_ = std::move(p); }

    // Path labels of basis vectors (projective modules only), per vertex.
    const std::vector<std::vector<Path>>& path_labels() const { return paths_; }
    void set_path_labels(std::vector<std::vector<Path>> l) { paths_ = std::move(l); }

    // image of a vector at vertex v under the path q (application order)
    std::vector<Elem> act(const Path& q, int v, std::vector<Elem> x) const;
    // matrix of the path q from vertex v
    Matrix path_matrix(const Path& q, int v) const;

    bool is_zero() const { return total_dim() == 0; }

private:
    Presentation p_;
    Field F_;
    std::vector<int> dims_;
    std::vector<Matrix> maps_;
    Provenance prov_;
    std::vector<std::vector<Path>> paths_;
};

// Per-vertex linear map between two representations; blocks[v] is N_v x M_v.
struct Morphism {
    std::vector<Matrix> blocks;
};

Morphism compose(const Field& F, const Morphism& g, const Morphism& f);  // g after f
Morphism zero_morphism(const Representation& M, const Representation& N);
Morphism identity_morphism(const Representation& M);
bool is_intertwiner(const Representation& M, const Representation& N, const Morphism& f);
bool is_injective(const Field& F, const Morphism& f);
bool is_surjective(const Field& F, const Morphism& f);
int morphism_rank(const Field& F, const Morphism& f);

// Per-vertex subspace, columns of each matrix a basis.
struct Subspace {
    std::vector<Matrix> basis;
    int dim() const;
};

// Smallest submodule containing the given vectors.
Subspace generated_submodule(const Representation& M, const Subspace& gens);
Representation submodule(const Representation& M, const Subspace& sub, Morphism* inclusion = nullptr);
Representation quotient(const Representation& M, const Subspace& sub, Morphism* projection = nullptr);
Representation kernel(const Representation& M, const Morphism& f, Morphism* inclusion = nullptr);
Representation cokernel(const Representation& N, const Morphism& f, Morphism* projection = nullptr);
Subspace image(const Field& F, const Morphism& f);

Representation direct_sum(const Representation& M, const Representation& N);
Representation zero_module(const Presentation& p, const Field& F);

// Canonical basis z_0..z_n; z_i is the local index at vertex v(i) given by position().
Representation string_module(const Presentation& p, const StringWord& s, const Field& F = Field(1));
// (vertex, local index) of z_i in string_module(p, s)
std::vector<std::pair<int, int>> string_basis_positions(const Presentation& p, const StringWord& s);
Representation band_module(const Presentation& p, const Band& b, Elem lambda, int m, const Field& F);
Representation projective_module(const Presentation& p, int u, const Field& F = Field(1));
// local index at vertex u of the socle vector of projective_module(p, u)
int projective_socle_index(const Presentation& p, int u);

// layers of the radical filtration, each the sorted list of composition factors
std::vector<std::vector<int>> radical_series(const Representation& M);
std::vector<int> top(const Representation& M);
std::vector<int> socle(const Representation& M);
std::vector<int> dimension_vector(const Representation& M);
bool is_uniserial(const Representation& M);
Subspace radical(const Representation& M);
Subspace socle_space(const Representation& M);

struct RelationCheck {
    bool ok = true;
    std::string witness;
};
RelationCheck check_relations(const Representation& M);

std::string series_text(const std::vector<std::vector<int>>& layers);

nlohmann::json to_json(const Representation& M);
Representation representation_from_json(const Presentation& p, const nlohmann::json& j);

}  // namespace biserial
