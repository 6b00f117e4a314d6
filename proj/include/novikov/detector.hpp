#pragma once
// Unit-pivot elimination over the eight detection rings, the finite
// domination verdict and the B' witness.

#include "novikov/complexes.hpp"
#include "novikov/homology.hpp"
#include "novikov/square.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nov {

constexpr int kDefaultWindow = 32;

struct Pivot {
    int degree = 0;  // the pivot sits in d^degree
    int row = 0;
    int col = 0;
    Monomial leading;
    LaurentPoly entry;  // visible part of the entry at the time of the pivot
};

enum class Outcome { Contractible, NonAcyclic, Inconclusive };
std::string outcome_name(Outcome o);

struct FlavorVerdict {
    RingFlavor flavor;
    Outcome outcome = Outcome::Inconclusive;
    std::vector<Pivot> pivots;
    int window = kDefaultWindow;
    int radius = 0;            // guaranteed radius of the certificate
    std::string detail;        // obstruction or stuck state
    std::map<int, int> ranks;  // ranks left when elimination stopped
};

// throws WindowTooSmall when no unit is visible but some entry is unknown
FlavorVerdict eliminate(const FreeComplex& c, const RingFlavor& f, int window = kDefaultWindow);

// reruns the recorded pivots; checks each is a unit, d^2 = 0 on the
// guaranteed radius after every step and that nothing is left at the end
bool replay(const FreeComplex& c, const FlavorVerdict& v);

enum class Overall { FinitelyDominated, NotFinitelyDominated, Inconclusive };
std::string overall_name(Overall o);

struct DominationReport {
    std::vector<FlavorVerdict> flavors;  // detection_flavors() order
    Overall overall = Overall::Inconclusive;
    std::optional<RingFlavor> failing;
    int window = kDefaultWindow;
};

DominationReport check_finite_domination(const FreeComplex& c, int window = kDefaultWindow);

struct Witness {
    BPrime bprime;
    std::map<int, HomologyGroup> homology;
    std::vector<std::pair<std::string, bool>> transcript;
    bool passed() const;
};

Witness witness(const FreeComplex& c);

}  // namespace nov
