#include "hbk/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace hbk {

namespace {

void require_valid(const HbkSpec& spec) {
    if (!is_nontrivial(spec.tangle)) {
        throw std::invalid_argument("spec tangle must be nontrivial");
    }
    if (!is_atoroidal(spec.tangle)) {
        throw std::invalid_argument("spec tangle must be atoroidal");
    }
}

Fraction half_integer(const Int& twice) {
    return Fraction(twice, 2);
}

std::string slopes_text(const std::vector<Fraction>& slopes) {
    std::string out;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        if (i > 0) out += ", ";
        out += slopes[i].str();
    }
    return out;
}

bool one_third_class(const std::optional<Int>& n) {
    return n && boost::multiprecision::abs(*n) == 3;
}

}  // namespace

std::string_view to_string(AnnulusCount c) {
    switch (c) {
        case AnnulusCount::InfinitelyMany: return "InfinitelyMany";
        case AnnulusCount::Two: return "Two";
        case AnnulusCount::One: return "One";
    }
    return "?";
}

std::string AnnulusCensus::str() const {
    std::string out(to_string(count));
    if (count != AnnulusCount::InfinitelyMany) {
        out += "; slopes: ";
        out += slopes_text(slopes);
    }
    return out;
}

AnnulusCensus AnnulusCensus::parse(std::string_view text) {
    if (text == "InfinitelyMany") {
        return {AnnulusCount::InfinitelyMany, {}};
    }
    AnnulusCount count;
    if (text.starts_with("Two; slopes: ")) {
        count = AnnulusCount::Two;
        text.remove_prefix(13);
    } else if (text.starts_with("One; slopes: ")) {
        count = AnnulusCount::One;
        text.remove_prefix(13);
    } else {
        throw ParseError("unrecognized annulus census", std::string(text), 0);
    }
    std::vector<Fraction> slopes;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(", ", start);
        auto piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        slopes.push_back(Fraction::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 2;
    }
    std::sort(slopes.begin(), slopes.end());
    const std::size_t expected = count == AnnulusCount::Two ? 2 : 1;
    if (slopes.size() != expected) {
        throw ParseError("annulus census has the wrong number of slopes", std::string(text), 0);
    }
    return {count, std::move(slopes)};
}

std::string_view to_string(SymmetryGroup g) {
    switch (g) {
        case SymmetryGroup::Z1: return "Z1";
        case SymmetryGroup::Z2: return "Z2";
        case SymmetryGroup::Unknown: return "unknown";
    }
    return "unknown";
}

std::string_view to_string(Chirality c) {
    switch (c) {
        case Chirality::Chiral: return "chiral";
        case Chirality::Amphichiral: return "amphichiral";
        case Chirality::Unknown: return "unknown";
    }
    return "unknown";
}

std::string_view to_string(ExteriorVerdict v) {
    switch (v) {
        case ExteriorVerdict::Homeomorphic: return "true";
        case ExteriorVerdict::Unknown: return "unknown";
    }
    return "unknown";
}

std::optional<Int> one_over_n_class(const TauTangle& t) {
    const RationalTau* r = t.rational();
    if (!r || r->vertex() != VertexLabel::X) {
        return std::nullopt;
    }
    return is_one_over_n(r->fraction());
}

AnnulusCensus census(const HbkSpec& spec) {
    require_valid(spec);
    const std::optional<Int> n = one_over_n_class(spec.tangle);
    if (one_third_class(n)) {
        return {AnnulusCount::InfinitelyMany, {}};
    }
    const Fraction moebius_slope = half_integer(2 * spec.k - 1);  // k - 1/2
    if (n) {
        std::vector<Fraction> slopes{moebius_slope, half_integer(8 * spec.k + *n - 4)};  // 4k + (n-4)/2
        std::sort(slopes.begin(), slopes.end());
        return {AnnulusCount::Two, std::move(slopes)};
    }
    return {AnnulusCount::One, {moebius_slope}};
}

namespace {

EquivVerdict same_k_equivalent(const HbkSpec& a, const HbkSpec& b) {
    const TangleVerdict direct = tangle_equiv(a.tangle, b.tangle);
    if (direct.status == Ternary::Equivalent) {
        return {Ternary::Equivalent,
                "equal twist counts; tangles equivalent: " + direct.reason,
                {std::string(cite::fixed_k_criterion), std::string(cite::modz_completeness)}};
    }
    const TangleVerdict starred = tangle_equiv(a.tangle, star(b.tangle));
    if (starred.status == Ternary::Equivalent) {
        return {Ternary::Equivalent,
                "equal twist counts; tangle equivalent to the star image: " + starred.reason,
                {std::string(cite::fixed_k_criterion), std::string(cite::modz_completeness)}};
    }
    if (direct.status == Ternary::Inequivalent && starred.status == Ternary::Inequivalent) {
        return {Ternary::Inequivalent,
                "equal twist counts; tangle inequivalent to both the tangle and its star (" + direct.reason +
                    "; star: " + starred.reason + ")",
                {std::string(cite::fixed_k_criterion)}};
    }
    const std::string& undecided =
        direct.status == Ternary::Unknown ? direct.reason : starred.reason;
    return {Ternary::Unknown,
            "equal twist counts; tangle comparison undecided (" + undecided + ")",
            {std::string(cite::fixed_k_criterion)}};
}

EquivVerdict cross_k_equivalent(const HbkSpec& a, const HbkSpec& b) {
    const AnnulusCensus ca = census(a);
    const AnnulusCensus cb = census(b);
    if (ca.count != cb.count) {
        return {Ternary::Inequivalent,
                "annulus censuses differ (" + ca.str() + " vs " + cb.str() + ")",
                {std::string(cite::census_trichotomy)}};
    }
    if (ca.slopes != cb.slopes) {
        return {Ternary::Inequivalent,
                "annulus slope multisets differ (" + ca.str() + " vs " + cb.str() + ")",
                {std::string(cite::slope_formula), std::string(cite::slope_invariance)}};
    }
    EquivVerdict out{Ternary::Unknown,
                     "twist counts differ and the censuses agree (" + ca.str() +
                         "); the equivalence criterion applies at a fixed twist count only",
                     {std::string(cite::fixed_k_criterion)}};
    if (ca.count == AnnulusCount::InfinitelyMany) {
        out.citations.push_back(std::string(cite::lee_lee_family));
    }
    return out;
}

EquivVerdict combine_or(const EquivVerdict& first, const EquivVerdict& second) {
    if (first.status == Ternary::Equivalent) return first;
    if (second.status == Ternary::Equivalent) return second;
    if (first.status == Ternary::Inequivalent && second.status == Ternary::Inequivalent) {
        EquivVerdict out{Ternary::Inequivalent, first.reason + "; mirror route: " + second.reason,
                         first.citations};
        for (const std::string& c : second.citations) {
            if (std::find(out.citations.begin(), out.citations.end(), c) == out.citations.end()) {
                out.citations.push_back(c);
            }
        }
        out.citations.push_back(std::string(cite::mirror_relation));
        return out;
    }
    const EquivVerdict& undecided = first.status == Ternary::Unknown ? first : second;
    EquivVerdict out = undecided;
    out.status = Ternary::Unknown;
    return out;
}

}  // namespace

EquivVerdict equivalent(const HbkSpec& a, const HbkSpec& b) {
    require_valid(a);
    require_valid(b);
    if (a.k == b.k) {
        return same_k_equivalent(a, b);
    }
    return cross_k_equivalent(a, b);
}

HbkSpec mirror_spec(const HbkSpec& spec) {
    return HbkSpec{1 - spec.k, mirror(spec.tangle)};
}

EquivVerdict equivalent_up_to_mirror(const HbkSpec& a, const HbkSpec& b) {
    return combine_or(equivalent(a, b), equivalent(a, mirror_spec(b)));
}

ChiralityReport chirality(const HbkSpec& spec) {
    require_valid(spec);
    const std::optional<Int> n = one_over_n_class(spec.tangle);
    if (!n) {
        return {Chirality::Chiral,
                "outside the one-over-n family every equivalence is orientation-preserving (" +
                    std::string(cite::rigidity) + ")"};
    }
    if (one_third_class(n)) {
        return {Chirality::Unknown,
                "one-third class: the census is infinite and chirality is not decided here"};
    }
    const AnnulusCensus own = census(spec);
    const AnnulusCensus mirrored = census(mirror_spec(spec));
    if (own.slopes != mirrored.slopes) {
        return {Chirality::Chiral,
                "slope multisets of the spec and its mirror differ (" + own.str() + " vs " + mirrored.str() +
                    "; " + std::string(cite::slope_invariance) + ")"};
    }
    return {Chirality::Unknown,
            "slope multiset " + own.str() + " is its own mirror image; chirality undecided"};
}

SymmetryReport symmetry_group(const HbkSpec& spec) {
    require_valid(spec);
    if (one_over_n_class(spec.tangle)) {
        return {SymmetryGroup::Unknown,
                "one-over-n class: the symmetry result applies only outside that family"};
    }
    const TangleVerdict v = tangle_equiv(spec.tangle, star(spec.tangle));
    switch (v.status) {
        case Ternary::Equivalent:
            return {SymmetryGroup::Z2,
                    "tangle equivalent to its star (" + v.reason + "; " + std::string(cite::symmetry_mcg) + ")"};
        case Ternary::Inequivalent:
            return {SymmetryGroup::Z1,
                    "tangle inequivalent to its star (" + v.reason + "; " + std::string(cite::symmetry_mcg) + ")"};
        case Ternary::Unknown:
            break;
    }
    return {SymmetryGroup::Unknown, "star comparison undecided: " + v.reason};
}

ExteriorReport exterior_homeomorphic(const HbkSpec& a, const HbkSpec& b) {
    require_valid(a);
    require_valid(b);
    const TangleVerdict direct = tangle_equiv(a.tangle, b.tangle);
    if (direct.status == Ternary::Equivalent) {
        return {ExteriorVerdict::Homeomorphic,
                "tangles equivalent (" + direct.reason + "); " + std::string(cite::exterior_invariance)};
    }
    const TangleVerdict starred = tangle_equiv(a.tangle, star(b.tangle));
    if (starred.status == Ternary::Equivalent) {
        return {ExteriorVerdict::Homeomorphic,
                "tangle equivalent to the star image (" + starred.reason + "); " +
                    std::string(cite::exterior_invariance)};
    }
    return {ExteriorVerdict::Unknown,
            "tangle comparison does not certify equality; no exterior-distinguishing tool is available"};
}

bool is_irreducible(const HbkSpec& spec) {
    require_valid(spec);
    return is_nontrivial(spec.tangle);
}

}  // namespace hbk
