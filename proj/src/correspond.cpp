#include "lck/correspond.hpp"

#include <algorithm>

namespace lck {

std::string to_string(const YVariable& v) {
    return "Y_{" + std::to_string(v.node) + "," + std::to_string(v.shift) + "}";
}

void DominantMonomial::mul(const YVariable& v, int exp) {
    if (exp < 0) throw std::invalid_argument("dominant monomial: negative exponent");
    if (exp == 0) return;
    factors[v] += exp;
}

std::string to_string(const DominantMonomial& m) {
    if (m.is_identity()) return "1";
    std::string out;
    for (const auto& [v, e] : m.factors) {
        out += to_string(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

Column segment_to_column(const Segment& s, int k, int n) {
    if (s.length() >= k) {
        throw std::invalid_argument("segment_to_column: segment length must be < k");
    }
    if (s.begin > 0 || s.begin < k + 1 - n) {
        throw std::invalid_argument("segment_to_column: begin out of [k+1-n, 0]");
    }
    return fundamental_column(s.begin, s.end, k, n);
}

DominantMonomial multisegment_to_monomial(const Multisegment& m) {
    DominantMonomial out;
    for (const Segment& s : m.segments()) out.mul(segment_to_y(s));
    return out;
}

Multisegment monomial_to_multisegment(const DominantMonomial& m) {
    Multisegment out;
    for (const auto& [v, e] : m.factors) {
        for (int i = 0; i < e; ++i) out.add(y_to_segment(v));
    }
    return out;
}

Tableau multisegment_to_tableau(const Multisegment& m, int k, int n) {
    std::vector<Column> cols;
    cols.reserve(m.size());
    for (const Segment& s : m.segments()) cols.push_back(segment_to_column(s, k, n));
    std::sort(cols.begin(), cols.end(),
              [](const Column& x, const Column& y) { return x.entries < y.entries; });
    return tableau_from_columns(k, n, cols);
}

Multisegment tableau_to_multisegment(const Tableau& t) {
    Multisegment out;
    for (const Column& c : small_gap_columns(t)) out.add(column_to_segment(c));
    return out;
}

}  // namespace lck
