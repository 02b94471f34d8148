#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biserial/homology.hpp"
#include "biserial/strings.hpp"
#include "json.hpp"

namespace biserial {

// The string algebra Lambda/soc(Lambda): besides the string quotient it also
// kills the arms of the uniserial projectives.  Its AR quiver is the stable AR
// quiver of Lambda, so component walks use its hooks and cohooks.
Presentation stable_string_presentation(const Presentation& p);

// M(s) is one of the uniserial projectives
bool is_projective_string(const Presentation& p, const StringWord& s);

// Irreducible maps around M(S):
//   M(S) -> M(S_h'), M(S) -> M(_h'S), M(S_c') -> M(S), M(_c'S) -> M(S).
struct ArNeighbors {
    StringWord center;
    std::optional<StringWord> right_h, left_h, right_c, left_c;
    std::vector<std::string> absent;  // names of sides with no nonprojective neighbor

    std::vector<StringWord> successors() const;
    std::vector<StringWord> predecessors() const;
};

// throws ProjectiveCenter
ArNeighbors ar_neighbors(const Presentation& p, const StringWord& s);

// tau = Omega^2 (dir = +1) or its inverse (dir = -1).  Uses the hook formula,
// falls back to Omega on modules plus string identification.
struct TauStep {
    StringWord word;
    bool combinatorial = true;
};
std::optional<TauStep> tau_string(const Presentation& p, const StringWord& s, int dir = 1);

// The string of Omega^k M(s), if it is a nonzero string module.
std::optional<StringWord> omega_word(const Presentation& p, const StringWord& s, int k = 1);

struct ComponentType {
    enum class Kind { Tube, ZAEvidence, Unknown };
    Kind kind = Kind::Unknown;
    int rank = 0;   // tube rank
    int bound = 0;  // tau steps searched
    std::vector<int> orbit_lengths;  // lengths of tau^k(s), k = 0..
    std::string text() const;        // tube(3) | ZA-inf-inf-evidence(6) | unknown
};

// tube(r) if tau^r(s) = s for some r <= radius, otherwise evidence only.
ComponentType component_type(const Presentation& p, const StringWord& s, int radius);

struct ComponentView {
    StringWord center;
    int radius = 0;
    std::vector<StringWord> nodes;             // canonical, nodes[0] is the center
    std::vector<std::pair<int, int>> edges;    // irreducible maps, (from, to)
    ComponentType type;
};

// Breadth first walk up to `radius` arrows away from s, either direction.
ComponentView component_view(const Presentation& p, const StringWord& s, int radius);
nlohmann::json to_json(const Presentation& p, const ComponentView& v);  // node-link graph
std::string adjacency_list(const Presentation& p, const ComponentView& v);

// Omega-orbit of M(s): Omega^j for j in both directions until the module has
// left the length window for a few steps or the orbit closes.
std::vector<StringWord> omega_orbit(const Presentation& p, const StringWord& s, int max_len, int max_steps = 40);

struct ClassifyOptions {
    int max_len = 8;
    int band_max_len = -1;  // -1: same as max_len, 0: no bands
    int field_ext = 2;      // bands are computed over GF(2^field_ext)
    int m2_spot = 3;        // how many bands also get m = 2
    int jobs = 1;
    int slack = 6;          // component walks use strings up to max_len + slack
    int radius = 6;
};

struct ClassRow {
    std::string kind;  // string | band
    std::string word;
    int length = 0;
    std::string lambda;  // bands only
    int m = 0;           // bands only
    std::vector<int> dimvec;
    int end_dim = 0;
    int stable_end_dim = 0;
    int ext1_dim = 0;
    bool hit = false;  // stable End = k
    std::string component;
    std::string component_type;
};

struct ComponentSummary {
    std::string key;  // shortest string seen in the walk
    std::string type;
    int hits = 0;
};

struct ClassificationTable {
    std::string family;
    int d = 0;
    ClassifyOptions options;
    std::vector<ClassRow> rows;
    std::vector<ComponentSummary> components;
};

ClassificationTable classify_stable_k(const Presentation& p, const ClassifyOptions& opt);
nlohmann::json to_json(const ClassificationTable& t);
std::string to_markdown(const ClassificationTable& t);

// Component labels for every string of length <= cap (union of the walk graph).
class ComponentIndex {
public:
    ComponentIndex(const Presentation& p, int cap);
    // key of the component of s, empty if s is projective or longer than cap
    std::string key(const StringWord& s) const;
    const std::vector<StringWord>& strings() const { return words_; }
    std::vector<StringWord> members(const std::string& key) const;

private:
    Presentation p_;
    std::vector<StringWord> words_;
    std::vector<int> parent_;
    std::vector<std::string> keys_;
    int find(int i) const;
    int index(const StringWord& s) const;
};

// Membership of the stable-End-k hits in the components named by the block
// propositions for psl1, psl2 and a7.
struct MembershipPart {
    std::string name;         // i | ii | iii
    std::vector<std::string> seeds;
    std::vector<std::string> members;   // strings of length <= max_len predicted
    int expected_ext1 = 0;
};

struct MembershipReport {
    bool ok = true;
    std::vector<MembershipPart> parts;
    std::vector<std::string> failures;
    int hits = 0;
};

MembershipReport verify_membership(const Presentation& p, const ClassificationTable& t);
nlohmann::json to_json(const MembershipReport& r);

}  // namespace biserial
