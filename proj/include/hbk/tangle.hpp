#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hbk/fraction.hpp"

namespace hbk {

// Boundary points of the cone. x is distinguished: it lies on the
// connecting arc of the handcuff spine.
enum class VertexLabel { X, Y, Z };

char to_char(VertexLabel v);
VertexLabel vertex_from_char(char c);  // throws ParseError

enum class Handedness { Positive, Negative, Amphichiral };

// A constituent knot of a tangle, named symbolically. Chirality is part of
// the label; an amphichiral knot is its own mirror partner.
struct KnotLabel {
    std::string name;
    Handedness handedness = Handedness::Positive;

    KnotLabel mirror_partner() const;
    bool amphichiral() const { return handedness == Handedness::Amphichiral; }

    // "trefoil+", "trefoil-", "fig8=".
    std::string label() const;

    friend auto operator<=>(const KnotLabel&, const KnotLabel&) = default;
};

// Opaque presentation id of a composite tangle, together with the moves
// recorded against it. Star on a tangle rational at x is absorbed: the
// y/z swap is a half turn, and rational two-string tangles are invariant
// under that flip.
struct Descriptor {
    std::string id;
    bool mirrored = false;
    bool starred = false;

    std::string str() const;

    friend auto operator<=>(const Descriptor&, const Descriptor&) = default;
};

// Tangle rational at a vertex, carrying its fraction class mod Z. Only
// nontrivial classes with odd reduced denominator are constructible; see
// validate_rational.
class RationalTau {
public:
    RationalTau(VertexLabel vertex, const ModZClass& fraction);

    VertexLabel vertex() const { return vertex_; }
    const ModZClass& fraction() const { return fraction_; }

    friend bool operator==(const RationalTau& a, const RationalTau& b) {
        return a.vertex_ == b.vertex_ && a.fraction_ == b.fraction_;
    }

private:
    VertexLabel vertex_;
    ModZClass fraction_;
};

// Any other tangle, presented symbolically: the unique vertex of
// rationality if one exists (without a recorded fraction), the multiset of
// constituent knots, declared atoroidality, and an opaque presentation id.
class CompositeTau {
public:
    CompositeTau(std::optional<VertexLabel> rational_vertex, std::vector<KnotLabel> knots,
                 bool atoroidal, Descriptor descriptor);

    const std::optional<VertexLabel>& rational_vertex() const { return rational_vertex_; }
    const std::vector<KnotLabel>& knots() const { return knots_; }  // kept sorted
    bool atoroidal() const { return atoroidal_; }
    const Descriptor& descriptor() const { return descriptor_; }

    friend bool operator==(const CompositeTau& a, const CompositeTau& b) = default;

private:
    std::optional<VertexLabel> rational_vertex_;
    std::vector<KnotLabel> knots_;
    bool atoroidal_;
    Descriptor descriptor_;
};

class TauTangle {
public:
    TauTangle(RationalTau t) : value_(std::move(t)) {}   // NOLINT: implicit by design
    TauTangle(CompositeTau t) : value_(std::move(t)) {}  // NOLINT

    bool is_rational() const { return std::holds_alternative<RationalTau>(value_); }
    const RationalTau* rational() const { return std::get_if<RationalTau>(&value_); }
    const CompositeTau* composite() const { return std::get_if<CompositeTau>(&value_); }

    friend bool operator==(const TauTangle& a, const TauTangle& b) = default;

private:
    std::variant<RationalTau, CompositeTau> value_;
};

// Builds the rational tangle at s with fraction r. Throws
// TrivialTangleError when r is an integer class and InvalidConnectivityError
// when the reduced denominator of the class is even.
TauTangle validate_rational(VertexLabel s, const Fraction& r);

// Orientation-reversing image: negates the fraction class of a rational
// tangle; mirrors every constituent knot and tags the presentation of a
// composite one.
TauTangle mirror(const TauTangle& t);

// Image under the half turn fixing x and swapping y, z. Identity on
// tangles rational at x; swaps the rational vertex otherwise.
TauTangle star(const TauTangle& t);

// Rational tangles have handlebody exteriors and are always atoroidal;
// composite tangles carry a declared flag.
bool is_atoroidal(const TauTangle& t);

// Every constructible TauTangle is nontrivial; trivial input is rejected
// by validate_rational.
bool is_nontrivial(const TauTangle& t);

enum class Ternary { Equivalent, Inequivalent, Unknown };

std::string_view to_string(Ternary t);

struct TangleVerdict {
    Ternary status;
    std::string reason;
};

// Three-valued tangle equivalence.
//
// Rational vs rational is decided completely: the vertex of rationality and
// the fraction class mod Z are a full invariant set (the class completeness
// is an adopted assumption, flagged in the reason). Mixed and composite
// comparisons are decided only where a symbolic invariant separates them or
// the presentations coincide; everything else is Unknown by design.
TangleVerdict tangle_equiv(const TauTangle& a, const TauTangle& b);

// The four strand endpoints of the two-string part of a diagram: the two
// points on the separating disk and the two cone points y, z.
enum class Endpoint { D1, D2, Y, Z };

std::string_view to_string(Endpoint e);

class EndpointPairing {
public:
    explicit EndpointPairing(std::array<int, 4> partner) : partner_(partner) {}

    Endpoint partner_of(Endpoint e) const {
        return static_cast<Endpoint>(partner_[static_cast<int>(e)]);
    }

    // True when each disk endpoint is joined to one of y, z; false when the
    // strands pair D1-D2 and y-z.
    bool disk_to_boundary() const;

    std::string str() const;

    friend bool operator==(const EndpointPairing&, const EndpointPairing&) = default;

private:
    std::array<int, 4> partner_;
};

// Composes, box by box, the endpoint permutation induced by the twist
// regions of the diagram layout and returns which endpoints the two strands
// join. Independent of the fraction arithmetic; used as the oracle for the
// connectivity law (denominator odd <=> disk-to-boundary pairing).
EndpointPairing endpoint_pairing(const TwistWord& word);

}  // namespace hbk
