#include "lck/criterion.hpp"

#include <algorithm>

namespace lck {

XYSets xy_sets(const Multisegment& m, const Multisegment& n) {
    XYSets out;
    for (int i = 1; i <= static_cast<int>(m.size()); ++i) {
        for (int j = 1; j <= static_cast<int>(n.size()); ++j) {
            if (precedes(m[i - 1], n[j - 1])) out.x.insert({i, j});
            if (precedes(shift_left(m[i - 1]), n[j - 1])) out.y.insert({i, j});
        }
    }
    return out;
}

XYSets xy_sets_k(const Multisegment& m, const Multisegment& n, int k) {
    XYSets out;
    for (int i = 1; i <= static_cast<int>(m.size()); ++i) {
        for (int j = 1; j <= static_cast<int>(n.size()); ++j) {
            if (k_precedes(m[i - 1], n[j - 1], k)) out.x.insert({i, j});
            if (k_precedes(shift_left(m[i - 1]), n[j - 1], k)) out.y.insert({i, j});
        }
    }
    return out;
}

XYSets xy_sets_tableaux(const Tableau& t, const Tableau& tp) {
    std::vector<Column> a = small_gap_columns(t);
    std::vector<Column> b = small_gap_columns(tp);
    XYSets out;
    for (int i = 1; i <= static_cast<int>(a.size()); ++i) {
        Column pr = promotion(a[i - 1]);
        for (int j = 1; j <= static_cast<int>(b.size()); ++j) {
            const Column& bj = b[j - 1];
            if (bj.min() < a[i - 1].min() && !weakly_separated(a[i - 1].entries, bj.entries)) {
                out.x.insert({i, j});
            }
            if (bj.min() <= a[i - 1].min() && !weakly_separated(pr.entries, bj.entries)) {
                out.y.insert({i, j});
            }
        }
    }
    return out;
}

MatchRelation match_relation(const Multisegment& m, const Multisegment& n) {
    return [m, n](const IndexPair& y, const IndexPair& x) {
        auto [i1, j1] = x;
        auto [i2, j2] = y;
        if (i1 == i2 && precedes(n[j2 - 1], n[j1 - 1])) return true;
        if (j1 == j2 && precedes(m[i1 - 1], m[i2 - 1])) return true;
        return false;
    };
}

MatchRelation match_relation_k(const Multisegment& m, const Multisegment& n, int k) {
    return [m, n, k](const IndexPair& y, const IndexPair& x) {
        auto [i1, j1] = x;
        auto [i2, j2] = y;
        if (i1 == i2 && k_precedes(n[j2 - 1], n[j1 - 1], k)) return true;
        if (j1 == j2 && k_precedes(m[i1 - 1], m[i2 - 1], k)) return true;
        return false;
    };
}

namespace {

// Kuhn's augmenting paths; X is tiny here.
class BipartiteMatcher {
public:
    BipartiteMatcher(int nx, int ny) : adj_(nx), match_y_(ny, -1) {}

    void add_edge(int x, int y) { adj_[x].push_back(y); }

    bool match_all() {
        for (int x = 0; x < static_cast<int>(adj_.size()); ++x) {
            std::vector<bool> used(match_y_.size(), false);
            if (!augment(x, used)) return false;
        }
        return true;
    }

    const std::vector<int>& match_y() const { return match_y_; }

private:
    bool augment(int x, std::vector<bool>& used) {
        for (int y : adj_[x]) {
            if (used[y]) continue;
            used[y] = true;
            if (match_y_[y] < 0 || augment(match_y_[y], used)) {
                match_y_[y] = x;
                return true;
            }
        }
        return false;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> match_y_;
};

bool lc_from_sets(const XYSets& sets, const MatchRelation& rel, MatchWitness* witness) {
    std::vector<IndexPair> xs(sets.x.begin(), sets.x.end());
    std::vector<IndexPair> ys(sets.y.begin(), sets.y.end());
    BipartiteMatcher matcher(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
    for (int xi = 0; xi < static_cast<int>(xs.size()); ++xi) {
        for (int yi = 0; yi < static_cast<int>(ys.size()); ++yi) {
            if (rel(ys[yi], xs[xi])) matcher.add_edge(xi, yi);
        }
    }
    if (!matcher.match_all()) return false;
    if (witness) {
        witness->clear();
        for (int yi = 0; yi < static_cast<int>(ys.size()); ++yi) {
            int xi = matcher.match_y()[yi];
            if (xi >= 0) witness->emplace_back(xs[xi], ys[yi]);
        }
        std::sort(witness->begin(), witness->end());
    }
    return true;
}

}  // namespace

bool lc(const Multisegment& m, const Multisegment& n, MatchWitness* witness) {
    return lc_from_sets(xy_sets(m, n), match_relation(m, n), witness);
}

bool lc_k(const Multisegment& m, const Multisegment& n, int k, MatchWitness* witness) {
    return lc_from_sets(xy_sets_k(m, n, k), match_relation_k(m, n, k), witness);
}

bool lc_tableaux(const Tableau& t, const Tableau& tp, MatchWitness* witness) {
    Multisegment m, n;
    for (const Column& c : small_gap_columns(t)) m.add(column_to_segment(c));
    for (const Column& c : small_gap_columns(tp)) n.add(column_to_segment(c));
    return lc_from_sets(xy_sets_tableaux(t, tp), match_relation_k(m, n, t.k()), witness);
}

Matching best_matching(const std::vector<IndexPair>& x_ordered,
                       const std::vector<IndexPair>& y_ordered, const MatchRelation& rel) {
    Matching out;
    std::vector<bool> taken(y_ordered.size(), false);
    // x in decreasing order; f(x) = min available y with y ⇝ x.
    for (auto it = x_ordered.rbegin(); it != x_ordered.rend(); ++it) {
        bool found = false;
        for (std::size_t yi = 0; yi < y_ordered.size(); ++yi) {
            if (!taken[yi] && rel(y_ordered[yi], *it)) {
                taken[yi] = true;
                out.assignment[*it] = y_ordered[yi];
                found = true;
                break;
            }
        }
        if (!found) out.unmatched.push_back(*it);
    }
    std::reverse(out.unmatched.begin(), out.unmatched.end());
    return out;
}

bool nc_k(const Multisegment& m, const Multisegment& n, int k, NCWitness* witness) {
    if (!is_ladder(m) || !is_ladder(n)) {
        throw std::invalid_argument("nc_k: both multisegments must be ladders");
    }
    Multisegment ms = m.sorted_b_ascending();
    Multisegment ns = n.sorted_b_ascending();
    XYSets sets = xy_sets_k(ms, ns, k);
    int nm = static_cast<int>(ms.size());
    int nn = static_cast<int>(ns.size());
    auto in_x = [&](int i, int j) { return sets.x.count({i, j}) > 0; };
    // Out-of-range indices count as absent.
    auto in_y = [&](int i, int j) {
        return i >= 1 && i <= nm && j >= 1 && j <= nn && sets.y.count({i, j}) > 0;
    };
    for (int i = 1; i <= nm; ++i) {
        for (int j = 1; j <= nn; ++j) {
            if (!in_x(i, j) || in_y(i, j - 1)) continue;
            for (int w = 0; i + w <= nm && j + w <= nn; ++w) {
                if (!in_x(i + w, j + w)) break;
                if (w > 0 && !(in_y(i + w, j + w - 1) && !in_x(i + w, j + w - 1))) break;
                if (!in_y(i + w + 1, j + w)) {
                    if (witness) *witness = {i, j, w};
                    return true;
                }
            }
        }
    }
    return false;
}

Multisegment socle_with_cuspidal(int a, const Multisegment& n, int k) {
    if (!n.in_mult_k(k)) throw std::invalid_argument("socle_with_cuspidal: n not in Mult_k");
    Multisegment ns = n.sorted_b_descending();
    Multisegment rho({Segment(a, a)});
    XYSets sets = xy_sets_k(rho, ns, k);
    std::vector<IndexPair> xs(sets.x.begin(), sets.x.end());
    std::vector<IndexPair> ys(sets.y.begin(), sets.y.end());
    Matching f = best_matching(xs, ys, match_relation_k(rho, ns, k));

    std::vector<Segment> result;
    if (f.unmatched.empty()) {
        result.push_back(Segment(a, a));
        for (const Segment& s : ns.segments()) result.push_back(s);
    } else {
        int i = f.unmatched.front().second;  // minimal unmatched index into ns
        for (int j = 1; j <= static_cast<int>(ns.size()); ++j) {
            result.push_back(j == i ? Segment(a, ns[j - 1].end) : ns[j - 1]);
        }
    }
    std::erase_if(result, [k](const Segment& s) { return s.length() >= k; });
    return Multisegment(std::move(result));
}

bool irreducible_snake_pair(const Multisegment& m, const Multisegment& n, int k) {
    if (!is_ladder(m) && !is_ladder(n)) {
        throw std::invalid_argument("irreducible_snake_pair: neither input is a ladder");
    }
    if (!m.in_mult_k(k) || !n.in_mult_k(k)) {
        throw std::invalid_argument("irreducible_snake_pair: segment of length >= k");
    }
    return lc_k(m, n, k) && lc_k(n, m, k);
}

bool irreducible_extremal(const Segment& seg, const Multisegment& m, int k) {
    if (seg.length() != 1 && seg.length() != k - 1) {
        throw std::invalid_argument("irreducible_extremal: factor must have length 1 or k-1");
    }
    if (!m.in_mult_k(k)) throw std::invalid_argument("irreducible_extremal: m not in Mult_k");
    Multisegment s({seg});
    return lc_k(s, m, k) && lc_k(m, s, k);
}

}  // namespace lck
