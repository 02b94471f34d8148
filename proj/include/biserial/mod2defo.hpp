#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biserial/homology.hpp"
#include "json.hpp"

namespace biserial {

struct UdrCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Mod 2 deformation ring of a uniserial module Y through the tower U of
// shape (T_1, ..., T_l)^(2^s) inside the projective cover of Y.
struct UdrMod2Report {
    std::string subject;  // provenance of Y
    std::vector<std::vector<int>> series;  // radical series of Y
    std::vector<UdrCheck> checks;
    int s = 0;
    std::optional<Representation> lift;       // U
    std::optional<Representation> truncated;  // U' = U / Y
    std::string verdict;                      // k[t]/(t^N), empty unless every check passed

    bool ok() const;
    const UdrCheck* find(const std::string& name) const;
};

// Runs every check and records the outcome; throws NotUniserial only.
UdrMod2Report uniserial_udr_report(const Representation& Y);
// Same, but throws HypothesisFailed naming the first failed check.
UdrMod2Report verify_uniserial_udr(const Representation& Y);

nlohmann::json to_json(const UdrMod2Report& r);

struct MiddleTermReport {
    bool holds = false;
    int hom_dim = 0;        // dim Hom(Y, X)
    long long searched = 0; // maps tried
    bool split = false;     // X is isomorphic to Y + Y
    std::string witness;    // how the injection was found
};

// An injection Y -> X with cokernel Y and X not isomorphic to Y + Y.
// throws DimensionMismatch unless dim X = 2 dim Y.
MiddleTermReport middle_term_report(const Representation& Y, const Representation& X, std::uint64_t seed = 0x5eed);
bool verify_middle_term(const Representation& Y, const Representation& X);

nlohmann::json to_json(const MiddleTermReport& r);

}  // namespace biserial
