#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbk/errors.hpp"

namespace hbk {

// All integer arithmetic is arbitrary precision. The values in this domain
// are small, but an equivalence decision must never silently wrap.
using Int = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator; 0 is represented as 0/1.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(Int value) : num_(std::move(value)), den_(1) {}  // NOLINT: implicit by design
    Fraction(int value) : num_(value), den_(1) {}             // NOLINT
    Fraction(Int num, Int den);                               // reduces; throws InfiniteValueError if den == 0

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    Int floor() const;

    Fraction reciprocal() const;  // throws InfiniteValueError on 0

    friend Fraction operator-(const Fraction& a) { return Fraction(-a.num_, a.den_); }
    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b);

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

    // "p/q", with "/q" omitted when q == 1.
    std::string str() const;
    static Fraction parse(std::string_view text);  // throws ParseError

private:
    Int num_;
    Int den_;
};

// Residue class of a fraction modulo Z, stored as the unique representative
// in [0, 1). The reduced denominator is unchanged by the normalization.
class ModZClass {
public:
    explicit ModZClass(const Fraction& value);

    const Fraction& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    ModZClass negated() const { return ModZClass(-rep_); }

    friend bool operator==(const ModZClass& a, const ModZClass& b) { return a.rep_ == b.rep_; }

    std::string str() const { return rep_.str(); }

private:
    Fraction rep_;
};

ModZClass modz_normalize(const Fraction& value);

// The unique n with |n| >= 2 whose class equals c: rep 1/q gives q, rep
// (q-1)/q gives -q. Rep 1/2 matches both signs; the positive one is
// returned. Rep 0 has no such n.
std::optional<Int> is_one_over_n(const ModZClass& c);

// Parity of the diagram layout: a word of n twist boxes is drawn in the
// odd form exactly when n is odd.
enum class TwistLayout { OddForm, EvenForm };

// The integer sequence a_1,...,a_n of the twist boxes of a tangle diagram.
// Zero entries are allowed anywhere.
class TwistWord {
public:
    TwistWord() = default;
    explicit TwistWord(std::vector<Int> entries) : entries_(std::move(entries)) {}

    const std::vector<Int>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    TwistLayout layout() const {
        return entries_.size() % 2 == 1 ? TwistLayout::OddForm : TwistLayout::EvenForm;
    }

    friend bool operator==(const TwistWord& a, const TwistWord& b) {
        return a.entries_ == b.entries_;
    }

    // Comma-separated entries; the empty word is the empty string.
    std::string str() const;
    static TwistWord parse(std::string_view text);  // throws ParseError

private:
    std::vector<Int> entries_;
};

// Value of the continued fraction [a_1,...,a_n,0] over Q u {oo}:
//
//   inner(a_1)          = a_1
//   inner(a_1..a_m)     = a_m + 1/inner(a_1..a_{m-1})
//   cf_eval(a_1..a_n)   = 1/inner(a_1..a_n)
//
// The trailing 0 of the bracket is the final reciprocal and is implicit in
// the API. Intermediate infinities are legitimate states of the twist
// diagram ([0,0] evaluates to 0); only an infinite final value is an
// error, thrown as InfiniteValueError.
Fraction cf_eval(const TwistWord& word);

// Inverse of cf_eval by the Euclidean algorithm: the all-positive canonical
// expansion for positive input, its entrywise negation for negative input,
// and the empty word for 0. cf_eval(cf_expand(r)) == r for every finite r.
TwistWord cf_expand(const Fraction& value);

// Independent evaluation of the same continued fraction: composes the 2x2
// integer matrices [[a_i, 1], [1, 0]] and applies the final reciprocal as a
// Moebius action on the point at infinity. Errors exactly as cf_eval.
Fraction matrix_oracle_eval(const TwistWord& word);

}  // namespace hbk
