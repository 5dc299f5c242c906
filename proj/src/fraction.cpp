#include "hbk/fraction.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace hbk {

namespace {

Int checked_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace

Fraction::Fraction(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw InfiniteValueError("fraction with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    const Int g = checked_gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Int Fraction::floor() const {
    Int q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) {
        --q;
    }
    return q;
}

Fraction Fraction::reciprocal() const {
    if (num_ == 0) {
        throw InfiniteValueError("reciprocal of zero");
    }
    return Fraction(den_, num_);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_ == 0) {
        throw InfiniteValueError("division by zero");
    }
    return Fraction(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Fraction::str() const {
    std::string out = num_.str();
    if (den_ != 1) {
        out += "/";
        out += den_.str();
    }
    return out;
}

namespace {

bool is_integer_token(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

Int parse_int(std::string_view text, std::size_t position) {
    if (!is_integer_token(text)) {
        throw ParseError("expected an integer", std::string(text), position);
    }
    return Int(std::string(text));
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Fraction(parse_int(text, 0));
    }
    const Int num = parse_int(text.substr(0, slash), 0);
    const Int den = parse_int(text.substr(slash + 1), slash + 1);
    if (den == 0) {
        throw ParseError("fraction denominator must be nonzero", std::string(text.substr(slash + 1)), slash + 1);
    }
    return Fraction(num, den);
}

ModZClass::ModZClass(const Fraction& value) : rep_(value - Fraction(value.floor())) {}

ModZClass modz_normalize(const Fraction& value) {
    return ModZClass(value);
}

std::optional<Int> is_one_over_n(const ModZClass& c) {
    const Fraction& rep = c.rep();
    if (rep.is_zero()) {
        return std::nullopt;
    }
    if (rep.num() == 1) {
        return rep.den();  // rep 1/2 also matches n = -2; the positive n is canonical
    }
    if (rep.num() == rep.den() - 1 && rep.den() >= 3) {
        return -rep.den();
    }
    return std::nullopt;
}

std::string TwistWord::str() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) out += ",";
        out += entries_[i].str();
    }
    return out;
}

TwistWord TwistWord::parse(std::string_view text) {
    std::vector<Int> entries;
    if (text.empty()) {
        return TwistWord(std::move(entries));
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        entries.push_back(parse_int(piece, start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return TwistWord(std::move(entries));
}

Fraction cf_eval(const TwistWord& word) {
    // inner(a_1..a_m) kept as a coprime pair p/q with inner_0 = oo = 1/0.
    // Each step (p, q) -> (a*p + q, p) preserves coprimality, so no
    // reduction is needed along the way.
    Int p = 1;
    Int q = 0;
    for (const Int& a : word.entries()) {
        Int next = a * p + q;
        q = p;
        p = std::move(next);
    }
    if (p == 0) {
        throw InfiniteValueError("twist word [" + word.str() + "] has an infinite continued fraction value");
    }
    return Fraction(q, p);
}

TwistWord cf_expand(const Fraction& value) {
    if (value.is_zero()) {
        return TwistWord();
    }
    const bool negative = value.num() < 0;
    const Fraction magnitude = negative ? -value : value;

    // Euclidean continued fraction of 1/|value| = [b_0; b_1, ..., b_k];
    // the word is the reversed quotient list (innermost entry first).
    Int u = magnitude.den();
    Int v = magnitude.num();
    std::vector<Int> quotients;
    while (v != 0) {
        Int b = u / v;
        Int rem = u - b * v;
        quotients.push_back(std::move(b));
        u = v;
        v = std::move(rem);
    }
    std::reverse(quotients.begin(), quotients.end());
    if (negative) {
        for (Int& entry : quotients) entry = -entry;
    }
    return TwistWord(std::move(quotients));
}

namespace {

struct Mat2 {
    Int a, b, c, d;  // [[a, b], [c, d]]
};

Mat2 mul(const Mat2& lhs, const Mat2& rhs) {
    return Mat2{lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
                lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

Mat2 twist_matrix(const Int& a) {
    return Mat2{a, 1, 1, 0};
}

}  // namespace

Fraction matrix_oracle_eval(const TwistWord& word) {
    // N = M(a_n) ... M(a_1); the bracket value is the Moebius action of
    // [[0,1],[1,0]] * N on the point at infinity.
    Mat2 n{1, 0, 0, 1};
    for (const Int& a : word.entries()) {
        n = mul(twist_matrix(a), n);
    }
    const Mat2 rn = mul(Mat2{0, 1, 1, 0}, n);
    if (rn.c == 0) {
        throw InfiniteValueError("twist word [" + word.str() + "] has an infinite continued fraction value");
    }
    return Fraction(rn.a, rn.c);
}

}  // namespace hbk
