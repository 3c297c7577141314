// The three-way dictionary between segments, dominant monomials in the
// Y-variables, and fundamental columns, lifted to multisegments, monomials
// and tableaux. Convention: [a,b] <-> Y_{b-a+1,-a-b}.

#pragma once

#include <map>

#include "lck/segment.hpp"
#include "lck/tableau.hpp"

namespace lck {

// Variable Y_{node,shift} with node + shift odd ((i,s) in I-hat).
struct YVariable {
    int node = 1;
    int shift = 0;

    YVariable() = default;
    YVariable(int i, int s) : node(i), shift(s) {
        if (i < 1) throw std::invalid_argument("y variable: node must be >= 1");
        if (((i + s) % 2 + 2) % 2 != 1) {
            throw std::invalid_argument("y variable: node + shift must be odd");
        }
    }

    friend auto operator<=>(const YVariable&, const YVariable&) = default;
};

std::string to_string(const YVariable& v);

// Product of Y variables with positive exponents; empty map = identity.
struct DominantMonomial {
    std::map<YVariable, int> factors;

    void mul(const YVariable& v, int exp = 1);
    bool is_identity() const { return factors.empty(); }

    friend auto operator<=>(const DominantMonomial&, const DominantMonomial&) = default;
};

std::string to_string(const DominantMonomial& m);

inline YVariable segment_to_y(const Segment& s) {
    return YVariable(s.end - s.begin + 1, -s.begin - s.end);
}

inline Segment y_to_segment(const YVariable& v) {
    return Segment((1 - v.node - v.shift) / 2, (v.node - v.shift - 1) / 2);
}

Column segment_to_column(const Segment& s, int k, int n);

inline Column y_to_column(const YVariable& v, int k, int n) {
    return segment_to_column(y_to_segment(v), k, n);
}

inline YVariable column_to_y(const Column& c) { return segment_to_y(column_to_segment(c)); }

DominantMonomial multisegment_to_monomial(const Multisegment& m);
Multisegment monomial_to_multisegment(const DominantMonomial& m);

// Union of the fundamental columns of the segments; columns of the result are
// in ascending lexicographic order.
Tableau multisegment_to_tableau(const Multisegment& m, int k, int n);

// Segments of the small-gap decomposition, in lexicographic column order.
Multisegment tableau_to_multisegment(const Tableau& t);

}  // namespace lck
