#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hbk/tangle.hpp"

namespace hbk {

// Citation tokens embedded in verdict reasons, naming the result used.
namespace cite {
inline constexpr std::string_view census_trichotomy =
    "annulus census trichotomy (one-third / one-over-n / neither)";
inline constexpr std::string_view slope_formula = "annulus slope formula k-1/2 and 4k+(n-4)/2";
inline constexpr std::string_view slope_invariance = "annulus slopes are oriented-equivalence invariants";
inline constexpr std::string_view fixed_k_criterion =
    "fixed-twist-count criterion: tangle equivalent to the tangle or its star";
inline constexpr std::string_view rigidity = "rigidity of the non-one-over-n family";
inline constexpr std::string_view symmetry_mcg = "symmetry group via star comparison of the tangle";
inline constexpr std::string_view mirror_relation = "mirror relation (k, tangle) -> (1-k, mirrored tangle)";
inline constexpr std::string_view exterior_invariance = "exteriors are homeomorphic across twist counts";
inline constexpr std::string_view modz_completeness =
    "mod-Z fraction class completeness (companion classification)";
inline constexpr std::string_view lee_lee_family = "Lee-Lee twisted family (one-third classes across twist counts)";
}  // namespace cite

// A handlebody-knot of the twisted family: k twists along the loop disk
// applied to the base spine, then tangle replacement at the loop vertex.
struct HbkSpec {
    Int k;
    TauTangle tangle;

    friend bool operator==(const HbkSpec&, const HbkSpec&) = default;
};

enum class AnnulusCount { InfinitelyMany, Two, One };

std::string_view to_string(AnnulusCount c);

// Essential annuli of the exterior, up to isotopy. Separating annuli carry
// slopes (oriented; mirroring negates them); the infinite case carries none.
struct AnnulusCensus {
    AnnulusCount count;
    std::vector<Fraction> slopes;  // sorted ascending

    // "InfinitelyMany", "Two; slopes: -1/2, 1/2", "One; slopes: -1/2"
    std::string str() const;
    static AnnulusCensus parse(std::string_view text);  // throws ParseError

    friend bool operator==(const AnnulusCensus&, const AnnulusCensus&) = default;
};

struct EquivVerdict {
    Ternary status;
    std::string reason;
    std::vector<std::string> citations;
};

enum class SymmetryGroup { Z1, Z2, Unknown };
enum class Chirality { Chiral, Amphichiral, Unknown };
enum class ExteriorVerdict { Homeomorphic, Unknown };

std::string_view to_string(SymmetryGroup g);
std::string_view to_string(Chirality c);
std::string_view to_string(ExteriorVerdict v);

struct SymmetryReport {
    SymmetryGroup group;
    std::string reason;
};

struct ChiralityReport {
    Chirality verdict;
    std::string reason;
};

struct ExteriorReport {
    ExteriorVerdict verdict;
    std::string reason;
};

// The class 1/n (n odd, from the odd-denominator law) when the tangle is
// rational at x with such a class; empty otherwise. Rationality at y or z
// and composite presentations are outside the one-over-n family: the
// census and the rigidity results key on rationality at x.
std::optional<Int> one_over_n_class(const TauTangle& t);

// Essential annuli of the exterior of the spec, by the trichotomy:
//   one-third classes        -> infinitely many, no slopes recorded
//   1/n classes with |n| > 3 -> two, slopes k-1/2 and 4k+(n-4)/2
//   everything else          -> one, slope k-1/2 (the Moebius band frontier)
AnnulusCensus census(const HbkSpec& spec);

// Equivalence of two specs. At equal twist counts this is the tangle test
// against the tangle and its star; across twist counts only the slope
// multisets can certify inequivalence, and agreement leaves Unknown.
EquivVerdict equivalent(const HbkSpec& a, const HbkSpec& b);

// Mirror image: (k, tangle) -> (1 - k, mirrored tangle).
HbkSpec mirror_spec(const HbkSpec& spec);

EquivVerdict equivalent_up_to_mirror(const HbkSpec& a, const HbkSpec& b);

// Chiral for every spec outside the one-over-n family; decided by slope
// comparison against the mirror otherwise. Amphichiral is never certified.
ChiralityReport chirality(const HbkSpec& spec);

// The symmetry group for specs outside the one-over-n family: Z2 when the
// tangle is equivalent to its star, Z1 when not. Unknown inside the family.
SymmetryReport symmetry_group(const HbkSpec& spec);

// Homeomorphism of exteriors, certified when the tangles agree (directly or
// via star) regardless of twist count. Never certifies a negative.
ExteriorReport exterior_homeomorphic(const HbkSpec& a, const HbkSpec& b);

// True for every valid spec; rejects ill-formed input (non-atoroidal
// declarations) by throwing std::invalid_argument like every other engine
// operation.
bool is_irreducible(const HbkSpec& spec);

}  // namespace hbk
