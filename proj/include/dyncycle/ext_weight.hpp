#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>
#include <string>

namespace dyncycle {

using Weight = double;

// Weight extended with -inf and +inf. Used for distances (+inf = unreachable)
// and for minimum cycle weights (-inf = negative cycle, +inf = acyclic).
class ExtWeight {
  public:
    enum class Tag : unsigned char { NegInf = 0, Finite = 1, PosInf = 2 };

    constexpr ExtWeight() = default;
    constexpr ExtWeight(Weight w) : tag_(Tag::Finite), value_(w) {} // NOLINT(google-explicit-constructor)

    static constexpr ExtWeight neg_inf() { return ExtWeight(Tag::NegInf); }
    static constexpr ExtWeight pos_inf() { return ExtWeight(Tag::PosInf); }

    constexpr Tag tag() const { return tag_; }
    constexpr bool is_finite() const { return tag_ == Tag::Finite; }
    constexpr bool is_neg_inf() const { return tag_ == Tag::NegInf; }
    constexpr bool is_pos_inf() const { return tag_ == Tag::PosInf; }

    // Precondition: is_finite().
    constexpr Weight value() const { return value_; }

    // Finite values map to themselves, infinities to IEEE infinities.
    double as_double() const {
        switch (tag_) {
        case Tag::NegInf:
            return -std::numeric_limits<double>::infinity();
        case Tag::PosInf:
            return std::numeric_limits<double>::infinity();
        default:
            return value_;
        }
    }

    static ExtWeight from_double(double x) {
        if (x == std::numeric_limits<double>::infinity()) {
            return pos_inf();
        }
        if (x == -std::numeric_limits<double>::infinity()) {
            return neg_inf();
        }
        return ExtWeight(x);
    }

    friend constexpr bool operator==(const ExtWeight& a, const ExtWeight& b) {
        return a.tag_ == b.tag_ && (a.tag_ != Tag::Finite || a.value_ == b.value_);
    }

    friend constexpr std::partial_ordering operator<=>(const ExtWeight& a, const ExtWeight& b) {
        if (a.tag_ != b.tag_) {
            return static_cast<int>(a.tag_) <=> static_cast<int>(b.tag_);
        }
        if (a.tag_ != Tag::Finite) {
            return std::partial_ordering::equivalent;
        }
        return a.value_ <=> b.value_;
    }

    // -inf + x = -inf for x != +inf; +inf absorbs everything else.
    friend constexpr ExtWeight operator+(const ExtWeight& a, const ExtWeight& b) {
        if (a.is_pos_inf() || b.is_pos_inf()) {
            return pos_inf();
        }
        if (a.is_neg_inf() || b.is_neg_inf()) {
            return neg_inf();
        }
        return ExtWeight(a.value_ + b.value_);
    }

    std::string to_string() const;

  private:
    constexpr explicit ExtWeight(Tag t) : tag_(t) {}

    Tag tag_ = Tag::PosInf;
    Weight value_ = 0;
};

constexpr ExtWeight min(const ExtWeight& a, const ExtWeight& b) { return b < a ? b : a; }

// Shortest round-trip decimal; integers print without a fractional part.
std::string format_weight(Weight w);

inline std::ostream& operator<<(std::ostream& os, const ExtWeight& w) { return os << w.to_string(); }

} // namespace dyncycle
