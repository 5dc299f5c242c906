#include "hbk/tangle.hpp"

#include <algorithm>

namespace hbk {

char to_char(VertexLabel v) {
    switch (v) {
        case VertexLabel::X: return 'x';
        case VertexLabel::Y: return 'y';
        case VertexLabel::Z: return 'z';
    }
    return '?';
}

VertexLabel vertex_from_char(char c) {
    switch (c) {
        case 'x': return VertexLabel::X;
        case 'y': return VertexLabel::Y;
        case 'z': return VertexLabel::Z;
        default: throw ParseError("vertex must be one of x, y, z", std::string(1, c), 0);
    }
}

KnotLabel KnotLabel::mirror_partner() const {
    switch (handedness) {
        case Handedness::Positive: return {name, Handedness::Negative};
        case Handedness::Negative: return {name, Handedness::Positive};
        case Handedness::Amphichiral: return *this;
    }
    return *this;
}

std::string KnotLabel::label() const {
    switch (handedness) {
        case Handedness::Positive: return name + "+";
        case Handedness::Negative: return name + "-";
        case Handedness::Amphichiral: return name + "=";
    }
    return name;
}

std::string Descriptor::str() const {
    std::string out = id;
    if (mirrored) out += "~m";
    if (starred) out += "~s";
    return out;
}

RationalTau::RationalTau(VertexLabel vertex, const ModZClass& fraction)
    : vertex_(vertex), fraction_(fraction) {
    if (fraction_.is_zero()) {
        throw TrivialTangleError("fraction class " + fraction.str() + " is an integer: the tangle is trivial");
    }
    if (fraction_.rep().den() % 2 == 0) {
        throw InvalidConnectivityError("fraction class " + fraction.str() +
                                       " has even denominator: the strands would join the disk endpoints");
    }
}

CompositeTau::CompositeTau(std::optional<VertexLabel> rational_vertex, std::vector<KnotLabel> knots,
                           bool atoroidal, Descriptor descriptor)
    : rational_vertex_(rational_vertex),
      knots_(std::move(knots)),
      atoroidal_(atoroidal),
      descriptor_(std::move(descriptor)) {
    std::sort(knots_.begin(), knots_.end());
}

TauTangle validate_rational(VertexLabel s, const Fraction& r) {
    return RationalTau(s, modz_normalize(r));
}

TauTangle mirror(const TauTangle& t) {
    if (const RationalTau* r = t.rational()) {
        return RationalTau(r->vertex(), r->fraction().negated());
    }
    const CompositeTau& c = *t.composite();
    std::vector<KnotLabel> knots;
    knots.reserve(c.knots().size());
    for (const KnotLabel& k : c.knots()) {
        knots.push_back(k.mirror_partner());
    }
    Descriptor d = c.descriptor();
    d.mirrored = !d.mirrored;
    return CompositeTau(c.rational_vertex(), std::move(knots), c.atoroidal(), std::move(d));
}

namespace {

VertexLabel swap_yz(VertexLabel v) {
    switch (v) {
        case VertexLabel::X: return VertexLabel::X;
        case VertexLabel::Y: return VertexLabel::Z;
        case VertexLabel::Z: return VertexLabel::Y;
    }
    return v;
}

}  // namespace

TauTangle star(const TauTangle& t) {
    if (const RationalTau* r = t.rational()) {
        // Rational at x: the half turn is realized by the flip symmetry of
        // the rational two-string part, so the star image is the tangle
        // itself. Otherwise the vertex of rationality moves.
        return RationalTau(swap_yz(r->vertex()), r->fraction());
    }
    const CompositeTau& c = *t.composite();
    if (c.rational_vertex() == VertexLabel::X) {
        return c;
    }
    Descriptor d = c.descriptor();
    d.starred = !d.starred;
    std::optional<VertexLabel> vertex = c.rational_vertex();
    if (vertex) {
        vertex = swap_yz(*vertex);
    }
    return CompositeTau(vertex, c.knots(), c.atoroidal(), std::move(d));
}

bool is_atoroidal(const TauTangle& t) {
    if (t.is_rational()) {
        return true;
    }
    return t.composite()->atoroidal();
}

bool is_nontrivial(const TauTangle& t) {
    if (const RationalTau* r = t.rational()) {
        return !r->fraction().is_zero();
    }
    return true;
}

std::string_view to_string(Ternary t) {
    switch (t) {
        case Ternary::Equivalent: return "equivalent";
        case Ternary::Inequivalent: return "inequivalent";
        case Ternary::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::string vertex_name(const std::optional<VertexLabel>& v) {
    return v ? std::string(1, to_char(*v)) : std::string("none");
}

TangleVerdict rational_vs_composite(const RationalTau& r, const CompositeTau& c) {
    if (c.rational_vertex() != r.vertex()) {
        return {Ternary::Inequivalent,
                "vertex of rationality differs (" + std::string(1, to_char(r.vertex())) + " vs " +
                    vertex_name(c.rational_vertex()) + "); the rational vertex is unique"};
    }
    return {Ternary::Unknown,
            "composite presentation is rational at the same vertex but records no fraction"};
}

std::string knot_list(const std::vector<KnotLabel>& knots) {
    if (knots.empty()) return "(none)";
    std::string out;
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (i > 0) out += ",";
        out += knots[i].label();
    }
    return out;
}

}  // namespace

TangleVerdict tangle_equiv(const TauTangle& a, const TauTangle& b) {
    if (a.is_rational() && b.is_rational()) {
        const RationalTau& ra = *a.rational();
        const RationalTau& rb = *b.rational();
        if (ra.vertex() != rb.vertex()) {
            return {Ternary::Inequivalent,
                    "vertices of rationality differ (" + std::string(1, to_char(ra.vertex())) + " vs " +
                        std::string(1, to_char(rb.vertex())) + ")"};
        }
        if (ra.fraction() == rb.fraction()) {
            return {Ternary::Equivalent,
                    "same vertex and same fraction class " + ra.fraction().str() +
                        " mod Z (class completeness assumed per the companion classification)"};
        }
        return {Ternary::Inequivalent,
                "fraction classes differ mod Z (" + ra.fraction().str() + " vs " + rb.fraction().str() + ")"};
    }
    if (a.is_rational() != b.is_rational()) {
        const RationalTau& r = a.is_rational() ? *a.rational() : *b.rational();
        const CompositeTau& c = a.is_rational() ? *b.composite() : *a.composite();
        return rational_vs_composite(r, c);
    }

    const CompositeTau& ca = *a.composite();
    const CompositeTau& cb = *b.composite();
    if (ca.rational_vertex() != cb.rational_vertex()) {
        return {Ternary::Inequivalent,
                "vertices of rationality differ (" + vertex_name(ca.rational_vertex()) + " vs " +
                    vertex_name(cb.rational_vertex()) + ")"};
    }
    if (ca.knots() != cb.knots()) {
        return {Ternary::Inequivalent,
                "constituent knot multisets differ (" + knot_list(ca.knots()) + " vs " +
                    knot_list(cb.knots()) + ")"};
    }
    if (ca.descriptor() == cb.descriptor()) {
        return {Ternary::Equivalent, "identical presentations (" + ca.descriptor().str() + ")"};
    }
    return {Ternary::Unknown,
            "distinct composite presentations (" + ca.descriptor().str() + " vs " + cb.descriptor().str() +
                ") with no separating invariant recorded"};
}

std::string_view to_string(Endpoint e) {
    switch (e) {
        case Endpoint::D1: return "D1";
        case Endpoint::D2: return "D2";
        case Endpoint::Y: return "y";
        case Endpoint::Z: return "z";
    }
    return "?";
}

bool EndpointPairing::disk_to_boundary() const {
    const int p = partner_[static_cast<int>(Endpoint::D1)];
    return p == static_cast<int>(Endpoint::Y) || p == static_cast<int>(Endpoint::Z);
}

std::string EndpointPairing::str() const {
    // Two pairs, listed from D1 and then from the smaller free endpoint.
    std::string out = "{";
    out += to_string(Endpoint::D1);
    out += "-";
    out += to_string(partner_of(Endpoint::D1));
    for (int i = 1; i < 4; ++i) {
        if (partner_[i] != static_cast<int>(Endpoint::D1) && i < partner_[i]) {
            out += ", ";
            out += to_string(static_cast<Endpoint>(i));
            out += "-";
            out += to_string(static_cast<Endpoint>(partner_[i]));
        }
    }
    out += "}";
    return out;
}

namespace {

// Strand-end positions of the growing diagram: 0 = NW, 1 = NE, 2 = SW,
// 3 = SE. The disk endpoints sit on the west side, y and z on the east.
using Matching = std::array<int, 4>;

Matching permute(const std::array<int, 4>& perm, const Matching& m) {
    Matching out{};
    for (int i = 0; i < 4; ++i) {
        out[perm[i]] = perm[m[i]];
    }
    return out;
}

// Quarter turn NW -> NE -> SE -> SW -> NW: the reciprocal step of the
// continued fraction.
constexpr std::array<int, 4> kRotate{1, 3, 0, 2};
// Odd twist box: swaps the two east ends.
constexpr std::array<int, 4> kSwapEast{0, 3, 2, 1};

}  // namespace

EndpointPairing endpoint_pairing(const TwistWord& word) {
    Matching m{2, 3, 0, 1};  // the infinity tangle: NW-SW, NE-SE
    for (const Int& a : word.entries()) {
        m = permute(kRotate, m);
        if (a % 2 != 0) {
            m = permute(kSwapEast, m);
        }
    }
    m = permute(kRotate, m);  // final reciprocal of the bracket

    // Positions to endpoints: NW = D1, SW = D2, NE = y, SE = z.
    constexpr std::array<int, 4> position_of{0, 2, 1, 3};  // indexed by Endpoint
    std::array<int, 4> endpoint_at{};                      // inverse map
    for (int e = 0; e < 4; ++e) {
        endpoint_at[position_of[e]] = e;
    }
    std::array<int, 4> partner{};
    for (int e = 0; e < 4; ++e) {
        partner[e] = endpoint_at[m[position_of[e]]];
    }
    return EndpointPairing(partner);
}

}  // namespace hbk
