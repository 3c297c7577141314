#include "lck/segment.hpp"

#include <algorithm>
#include <map>

namespace lck {

std::string to_string(const Segment& s) {
    return "[" + std::to_string(s.begin) + "," + std::to_string(s.end) + "]";
}

Segment cup(const Segment& d, const Segment& e) {
    if (!linked(d, e)) throw std::invalid_argument("cup: segments are not linked");
    return Segment(std::min(d.begin, e.begin), std::max(d.end, e.end));
}

std::optional<Segment> cap(const Segment& d, const Segment& e) {
    if (!linked(d, e)) throw std::invalid_argument("cap: segments are not linked");
    int b = std::max(d.begin, e.begin);
    int en = std::min(d.end, e.end);
    if (b > en) return std::nullopt;
    return Segment(b, en);
}

Multisegment Multisegment::operator+(const Multisegment& other) const {
    std::vector<Segment> out = segs_;
    out.insert(out.end(), other.segs_.begin(), other.segs_.end());
    return Multisegment(std::move(out));
}

bool Multisegment::in_mult_k(int k) const {
    return std::all_of(segs_.begin(), segs_.end(),
                       [k](const Segment& s) { return s.length() < k; });
}

Multisegment Multisegment::sorted_b_ascending() const {
    std::vector<Segment> out = segs_;
    std::stable_sort(out.begin(), out.end(), [](const Segment& x, const Segment& y) {
        return x != y && leq_b(x, y);
    });
    return Multisegment(std::move(out));
}

Multisegment Multisegment::sorted_b_descending() const {
    std::vector<Segment> out = segs_;
    std::stable_sort(out.begin(), out.end(), [](const Segment& x, const Segment& y) {
        return x != y && leq_b(y, x);
    });
    return Multisegment(std::move(out));
}

Multisegment Multisegment::sorted_e_descending() const {
    std::vector<Segment> out = segs_;
    std::stable_sort(out.begin(), out.end(), [](const Segment& x, const Segment& y) {
        return x != y && leq_e(y, x);
    });
    return Multisegment(std::move(out));
}

bool Multisegment::same_multiset(const Multisegment& other) const {
    if (segs_.size() != other.segs_.size()) return false;
    std::vector<Segment> a = segs_, b = other.segs_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::string to_string(const Multisegment& m) {
    if (m.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) out += "+";
        out += to_string(m[i]);
    }
    return out;
}

bool is_ladder(const Multisegment& m) {
    std::vector<Segment> s = m.segments();
    std::sort(s.begin(), s.end());
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i - 1].begin >= s[i].begin || s[i - 1].end >= s[i].end) return false;
    }
    return true;
}

bool is_regular(const Multisegment& m) {
    std::map<int, int> begins, ends;
    for (const Segment& s : m.segments()) {
        if (++begins[s.begin] > 1) return false;
        if (++ends[s.end] > 1) return false;
    }
    return true;
}

bool is_ordered(const Multisegment& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (precedes(m[i], m[j])) return false;
        }
    }
    return true;
}

}  // namespace lck
