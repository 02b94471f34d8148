#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace biserial {

// Arrow indices in application order: the composite "first a, then b" is {a, b}.
using Path = std::vector<int>;

struct Arrow {
    std::string name;
    int source;
    int target;
};

struct FamilyTag {
    std::string family;  // psl1 | psl2 | a7
    int d = 0;
};

// Shape of the indecomposable projective P(u).  A biserial projective has two
// arms, each a full path from the top to the socle; a uniserial one has a single
// arm, the longest nonzero path starting at u.
struct ProjectiveShape {
    int vertex = 0;
    std::vector<Path> arms;
    bool uniserial() const { return arms.size() == 1; }
};

class Presentation {
public:
    Presentation(int num_vertices, std::vector<Arrow> arrows, std::vector<Path> forbidden,
                 std::vector<std::pair<Path, Path>> socle_pairs,
                 std::optional<FamilyTag> family = std::nullopt);

    // Same quiver and relations, with the string-algebra monomials replaced.
    Presentation with_string_forbidden(std::vector<Path> sf) const;

    int num_vertices() const;
    int num_arrows() const;
    const std::vector<Arrow>& arrows() const;
    const Arrow& arrow(int a) const;
    int arrow_index(const std::string& name) const;  // throws UnknownArrow
    const std::vector<Path>& forbidden_paths() const;
    const std::vector<std::pair<Path, Path>>& socle_pairs() const;
    const std::vector<Path>& string_forbidden() const;
    const std::optional<FamilyTag>& family() const;
    const std::vector<std::string>& derivation_errors() const;

    const ProjectiveShape& projective_shape(int u) const;
    std::vector<int> arrows_into(int v) const;
    std::vector<int> arrows_out_of(int v) const;

    bool is_composable(const Path& p) const;
    // true if some entry of string_forbidden occurs as a contiguous piece of p
    bool contains_forbidden(const Path& p) const;
    int max_forbidden_length() const;
    // the arrow b with {a, b} nonzero in the string quotient, if any
    std::optional<int> continuation(int a) const;
    std::optional<int> predecessor(int b) const;

    std::string path_text(const Path& p) const;
    Path parse_path(const std::string& text) const;

    nlohmann::json to_json() const;
    static Presentation from_json(const nlohmann::json& j);
    std::string hash() const;  // hex digest of the JSON document

    bool same_as(const Presentation& o) const { return d_ == o.d_ || hash() == o.hash(); }

    struct Data;  // opaque

private:
    std::shared_ptr<const Data> d_;
    explicit Presentation(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

Presentation build_psl1(int d);
Presentation build_psl2(int d);
Presentation build_a7();
Presentation build_family(const std::string& family, int d);

struct ValidationCheck {
    std::string name;
    bool passed = true;
    std::string witness;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool ok() const;
    const ValidationCheck* find(const std::string& name) const;
};

ValidationReport validate(const Presentation& p);
nlohmann::json to_json(const ValidationReport& r);

}  // namespace biserial
