// Segments and multisegments on the integer line: the Zelevinsky parameters,
// their orders (<=_b, <=_e, precede, k-precede) and shape predicates.

#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lck {

// Integer interval [begin, end], begin <= end. length = end - begin + 1 >= 1.
struct Segment {
    int begin = 0;
    int end = 0;

    Segment() = default;
    Segment(int b, int e) : begin(b), end(e) {
        if (b > e) throw std::invalid_argument("segment: begin > end");
    }

    int length() const { return end - begin + 1; }

    // Lexicographic (begin, end); coincides with the total order <=_b.
    friend auto operator<=>(const Segment&, const Segment&) = default;
};

std::string to_string(const Segment& s);

// [a,b] shifted one step left: [a-1, b-1].
inline Segment shift_left(const Segment& s) { return Segment(s.begin - 1, s.end - 1); }

// [a+1, b]; empty (nullopt) when the segment is a singleton.
inline std::optional<Segment> minus_begin(const Segment& s) {
    if (s.begin == s.end) return std::nullopt;
    return Segment(s.begin + 1, s.end);
}

// b(d)+1 <= b(e) <= e(d)+1 <= e(e).
inline bool precedes(const Segment& d, const Segment& e) {
    return d.begin + 1 <= e.begin && e.begin <= d.end + 1 && d.end + 1 <= e.end;
}

// precedes and e(e) - b(d) < k.
inline bool k_precedes(const Segment& d, const Segment& e, int k) {
    return precedes(d, e) && e.end - d.begin < k;
}

inline bool linked(const Segment& d, const Segment& e) {
    return precedes(d, e) || precedes(e, d);
}

inline bool k_linked(const Segment& d, const Segment& e, int k) {
    return k_precedes(d, e, k) || k_precedes(e, d, k);
}

// Union of two linked segments (always an interval).
Segment cup(const Segment& d, const Segment& e);

// Intersection of two linked segments; empty for abutting ones.
std::optional<Segment> cap(const Segment& d, const Segment& e);

// Left aligned order: b(d) <= b(e), and either b(d) < b(e) or e(d) <= e(e).
inline bool leq_b(const Segment& d, const Segment& e) {
    return d.begin <= e.begin && (d.begin < e.begin || d.end <= e.end);
}

// Right aligned order: e(d) <= e(e), and either e(d) < e(e) or b(d) <= b(e).
inline bool leq_e(const Segment& d, const Segment& e) {
    return d.end <= e.end && (d.end < e.end || d.begin <= e.begin);
}

// Finite formal sum of segments. Insertion order is kept: the index sets of
// the matching machinery refer to positions in the stored order, so callers
// sort explicitly when a canonical order is wanted.
class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {}
    Multisegment(std::initializer_list<Segment> segs) : segs_(segs) {}

    const std::vector<Segment>& segments() const { return segs_; }
    std::size_t size() const { return segs_.size(); }
    bool empty() const { return segs_.empty(); }
    const Segment& operator[](std::size_t i) const { return segs_[i]; }

    void add(const Segment& s) { segs_.push_back(s); }

    // Concatenation m + n, keeping both orders.
    Multisegment operator+(const Multisegment& other) const;

    // All segments shorter than k.
    bool in_mult_k(int k) const;

    // Stable-sorted copies. "descending <=_b" is the canonical ring-key order.
    Multisegment sorted_b_ascending() const;
    Multisegment sorted_b_descending() const;
    Multisegment sorted_e_descending() const;

    // Compare as multisets of segments.
    bool same_multiset(const Multisegment& other) const;

    friend auto operator<=>(const Multisegment&, const Multisegment&) = default;

private:
    std::vector<Segment> segs_;
};

std::string to_string(const Multisegment& m);

// a_1 < ... < a_m and b_1 < ... < b_m after sorting by begins.
bool is_ladder(const Multisegment& m);

// All begins pairwise distinct and all ends pairwise distinct.
bool is_regular(const Multisegment& m);

// No Delta_i precedes Delta_j for i < j, in the stored order.
bool is_ordered(const Multisegment& m);

}  // namespace lck
