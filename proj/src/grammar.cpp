#include "hbk/grammar.hpp"

#include <cctype>

namespace hbk {

namespace {

bool identifier_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

VertexLabel parse_vertex(std::string_view text, std::size_t position) {
    if (text.size() != 1) {
        throw ParseError("vertex must be one of x, y, z", std::string(text), position);
    }
    switch (text[0]) {
        case 'x': return VertexLabel::X;
        case 'y': return VertexLabel::Y;
        case 'z': return VertexLabel::Z;
        default: throw ParseError("vertex must be one of x, y, z", std::string(text), position);
    }
}

KnotLabel parse_knot_at(std::string_view text, std::size_t position) {
    if (text.size() < 2) {
        throw ParseError("knot label needs a name and a +, - or = suffix", std::string(text), position);
    }
    Handedness handedness;
    switch (text.back()) {
        case '+': handedness = Handedness::Positive; break;
        case '-': handedness = Handedness::Negative; break;
        case '=': handedness = Handedness::Amphichiral; break;
        default:
            throw ParseError("knot label must end with +, - or =", std::string(text), position);
    }
    const std::string_view name = text.substr(0, text.size() - 1);
    for (char c : name) {
        if (!identifier_char(c) || c == '-') {
            throw ParseError("knot name must be alphanumeric or _", std::string(name), position);
        }
    }
    return KnotLabel{std::string(name), handedness};
}

Descriptor parse_descriptor(std::string_view text, std::size_t position) {
    Descriptor d;
    while (text.size() >= 2 && text[text.size() - 2] == '~') {
        const char tag = text.back();
        if (tag == 'm') {
            d.mirrored = !d.mirrored;
        } else if (tag == 's') {
            d.starred = !d.starred;
        } else {
            throw ParseError("unknown descriptor tag", std::string(text.substr(text.size() - 2)), position);
        }
        text.remove_suffix(2);
    }
    if (text.empty()) {
        throw ParseError("descriptor must be nonempty", "", position);
    }
    for (char c : text) {
        if (!identifier_char(c)) {
            throw ParseError("descriptor must be alphanumeric, _ or -", std::string(text), position);
        }
    }
    d.id = std::string(text);
    return d;
}

TauTangle parse_tangle_at(std::string_view text, std::size_t offset) {
    const auto fields = split(text, ':');
    if (fields.empty()) {
        throw ParseError("empty tangle", std::string(text), offset);
    }
    std::size_t position = offset;
    const std::string_view kind = fields[0];
    if (kind == "rational") {
        if (fields.size() != 3) {
            throw ParseError("rational tangle needs rational:<s>:<p>/<q>", std::string(text), offset);
        }
        position += kind.size() + 1;
        const VertexLabel vertex = parse_vertex(fields[1], position);
        position += fields[1].size() + 1;
        Fraction value;
        try {
            value = Fraction::parse(fields[2]);
        } catch (const ParseError& e) {
            throw ParseError("bad fraction", std::string(fields[2]), position);
        }
        return validate_rational(vertex, value);
    }
    if (kind == "composite") {
        if (fields.size() != 4) {
            throw ParseError("composite tangle needs composite:<s|->:<knots>:<descriptor>",
                             std::string(text), offset);
        }
        position += kind.size() + 1;
        std::optional<VertexLabel> vertex;
        if (fields[1] != "-") {
            vertex = parse_vertex(fields[1], position);
        }
        position += fields[1].size() + 1;
        std::vector<KnotLabel> knots;
        if (!fields[2].empty()) {
            std::size_t knot_position = position;
            for (std::string_view piece : split(fields[2], ',')) {
                knots.push_back(parse_knot_at(piece, knot_position));
                knot_position += piece.size() + 1;
            }
        }
        position += fields[2].size() + 1;
        Descriptor descriptor = parse_descriptor(fields[3], position);
        return CompositeTau(vertex, std::move(knots), /*atoroidal=*/true, std::move(descriptor));
    }
    throw ParseError("tangle must start with rational: or composite:", std::string(kind), offset);
}

}  // namespace

TauTangle parse_tangle(std::string_view text) {
    return parse_tangle_at(text, 0);
}

KnotLabel parse_knot(std::string_view text) {
    return parse_knot_at(text, 0);
}

HbkSpec parse_spec(std::string_view text) {
    if (!text.starts_with("k:")) {
        throw ParseError("spec must start with k:<int>;", std::string(text.substr(0, text.find(';'))), 0);
    }
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw ParseError("spec needs a ; between the twist count and the tangle", std::string(text), 0);
    }
    const std::string_view count = text.substr(2, semi - 2);
    std::size_t i = count.starts_with('-') || count.starts_with('+') ? 1 : 0;
    if (i == count.size()) {
        throw ParseError("twist count must be an integer", std::string(count), 2);
    }
    for (; i < count.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(count[i]))) {
            throw ParseError("twist count must be an integer", std::string(count), 2);
        }
    }
    Int k{std::string(count)};
    return HbkSpec{std::move(k), parse_tangle_at(text.substr(semi + 1), semi + 1)};
}

std::string format_knot(const KnotLabel& knot) {
    return knot.label();
}

std::string format_tangle(const TauTangle& tangle) {
    if (const RationalTau* r = tangle.rational()) {
        return std::string("rational:") + to_char(r->vertex()) + ":" + r->fraction().str();
    }
    const CompositeTau& c = *tangle.composite();
    std::string out = "composite:";
    out += c.rational_vertex() ? std::string(1, to_char(*c.rational_vertex())) : std::string("-");
    out += ":";
    for (std::size_t i = 0; i < c.knots().size(); ++i) {
        if (i > 0) out += ",";
        out += c.knots()[i].label();
    }
    out += ":";
    out += c.descriptor().str();
    return out;
}

std::string format_spec(const HbkSpec& spec) {
    return "k:" + spec.k.str() + ";" + format_tangle(spec.tangle);
}

}  // namespace hbk
