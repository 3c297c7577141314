#include "lck/ring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "lck/kl.hpp"

namespace lck {

RingElement RingElement::unit(Basis b) {
    RingElement e(b);
    e.add_term(Multisegment(), 1);
    return e;
}

void RingElement::add_term(const Multisegment& m, long long c) {
    if (c == 0) return;
    Multisegment key = canonical_key(m);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else if ((it->second += c) == 0) {
        terms_.erase(it);
    }
}

long long RingElement::coefficient(const Multisegment& m) const {
    auto it = terms_.find(canonical_key(m));
    return it == terms_.end() ? 0 : it->second;
}

std::string to_string(const RingElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    const char* tag = e.basis() == Basis::simple ? "Z" : "zeta";
    for (const auto& [m, c] : e.terms()) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        out += std::string(tag) + "(" + to_string(m) + ")";
    }
    return out;
}

Multisegment canonical_key(const Multisegment& m) { return m.sorted_b_descending(); }

SigmaData sigma_of(const Multisegment& m) {
    int n = static_cast<int>(m.size());
    SigmaData out;
    out.a.reserve(n);
    out.b.reserve(n);
    for (const Segment& s : m.segments()) {
        out.a.push_back(s.begin);
        out.b.push_back(s.end);
    }
    std::sort(out.a.begin(), out.a.end());
    std::sort(out.b.begin(), out.b.end(), std::greater<int>());

    // Assign a-positions: inside an equal-begin block, ends descending.
    std::vector<Segment> segs = m.segments();
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) {
        return x.begin != y.begin ? x.begin < y.begin : x.end > y.end;
    });
    // Assign b-positions: inside an equal-end block (ends descending across
    // blocks), a-positions ascending. segs is already ordered that way within
    // each end value because begins ascend.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return segs[x].end > segs[y].end; });
    out.sigma.assign(n, 0);
    for (int i = 0; i < n; ++i) out.sigma[order[i]] = i + 1;  // sigma(j) = i
    return out;
}

namespace {

// Enumerate the sigma' <= sigma of the basis-change sum whose terms survive:
// position j must receive a value v with b_v >= a_j - 1 (validity) and, when
// k > 0, b_v <= a_j + k - 1 (the factor survives in R_k). Both cuts are contiguous
// bands in the end-descending order, so the walk visits only useful leaves
// instead of the whole Bruhat interval. Calls f(enc, length) per survivor,
// sigma itself included.
template <typename F>
void for_each_surviving_term(const SigmaData& sd, int k, F&& f) {
    int n = static_cast<int>(sd.a.size());
    std::vector<int> lo(n, 1), hi(n, n);
    for (int j = 0; j < n; ++j) {
        int h = 0;
        while (h < n && sd.b[h] >= sd.a[j] - 1) ++h;
        hi[j] = h;  // values 1..h are valid
        if (k > 0) {
            int l = 0;
            while (l < n && sd.b[l] > sd.a[j] + k - 1) ++l;
            lo[j] = l + 1;  // values l+1.. survive reduction
        }
        if (lo[j] > hi[j]) return;  // sigma would be dead too; cannot happen for live keys
    }
    uint32_t used = 0;
    // d[t] tracks the rank-criterion margin #{placed >= t} - #{sigma-prefix >= t};
    // keeping it <= 0 at every prefix is exactly the Bruhat condition, so dead
    // branches are cut as soon as they appear.
    std::vector<int> d(n + 2, 0);
    auto rec = [&](auto&& self, int j, uint64_t enc, int inv) -> void {
        if (j == n) {
            f(enc, inv);
            return;
        }
        int wv = sd.sigma[j];
        for (int v = lo[j]; v <= hi[j]; ++v) {
            if (used & (1u << v)) continue;
            for (int t = 1; t <= v; ++t) ++d[t];
            for (int t = 1; t <= wv; ++t) --d[t];
            bool ok = true;
            for (int t = 1; t <= n && ok; ++t) ok = d[t] <= 0;
            if (ok) {
                used |= 1u << v;
                int add = std::popcount(used >> (v + 1));
                self(self, j + 1, enc | (static_cast<uint64_t>(v - 1) << (4 * j)), inv + add);
                used &= ~(1u << v);
            }
            for (int t = 1; t <= v; ++t) --d[t];
            for (int t = 1; t <= wv; ++t) ++d[t];
        }
    };
    rec(rec, 0, 0, 0);
}

// m_{sigma'} with unit factors dropped; all factors valid by the band cuts.
Multisegment pairing_of(const SigmaData& sd, const KLContext& ctx, uint64_t enc) {
    Multisegment out;
    int n = static_cast<int>(sd.a.size());
    Permutation p = ctx.decode(enc);
    for (int j = 0; j < n; ++j) {
        int a = sd.a[j];
        int b = sd.b[p.images[j] - 1];
        if (a <= b) out.add(Segment(a, b));
    }
    return out;
}

// Expansions of standard classes into (optionally R_k-reduced) simple
// classes, memoized per canonical key. k = 0 means no reduction.
class ExpansionContext {
public:
    explicit ExpansionContext(int k) : k_(k) {}

    const std::map<Multisegment, long long>& expand(const Multisegment& key) {
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        std::map<Multisegment, long long> result;
        if (k_ > 0 && !key.in_mult_k(k_ + 1)) {
            return memo_.emplace(key, std::move(result)).first->second;  // dies in R_k
        }
        auto reduced = [&](const Multisegment& m) {
            if (k_ == 0) return m;
            return *reduce_multisegment_mod_k(m, k_);
        };

        SigmaData sd = sigma_of(key);
        int n = static_cast<int>(key.size());
        Permutation sigma(sd.sigma);
        int lsig = length(sigma);
        result[reduced(key)] += 1;  // the [Z(key)] term
        if (lsig > 0) {
            KLContext& ctx = global_kl(n);
            uint64_t wenc = ctx.encode(sigma);
            std::vector<std::pair<uint64_t, int>> survivors;
            for_each_surviving_term(sd, k_, [&](uint64_t enc, int len) {
                if (enc != wenc) survivors.emplace_back(enc, len);
            });
            for (const auto& [enc, len] : survivors) {
                long long coeff = ctx.kl_encoded(enc, wenc).eval_one();
                if ((lsig + len) % 2 != 0) coeff = -coeff;
                if (coeff == 0) continue;
                Multisegment can2 = canonical_key(pairing_of(sd, ctx, enc));
                // zeta(key) = Z(key) - sum of coeff * zeta(key2), recursively.
                for (const auto& [cls, c] : expand(can2)) result[cls] -= coeff * c;
            }
            std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
        }
        return memo_.emplace(key, std::move(result)).first->second;
    }

private:
    int k_;
    std::map<Multisegment, std::map<Multisegment, long long>> memo_;
};

RingElement standard_to_simple_impl(const RingElement& e, int k) {
    ExpansionContext ctx(k);
    RingElement out(Basis::simple);
    for (const auto& [key, c] : e.terms()) {
        for (const auto& [cls, cc] : ctx.expand(key)) out.add_term(cls, c * cc);
    }
    return out;
}

}  // namespace

RingElement simple_to_standard(const Multisegment& m) {
    RingElement out(Basis::standard);
    Multisegment key = canonical_key(m);
    SigmaData sd = sigma_of(key);
    int n = static_cast<int>(key.size());
    if (n == 0) {
        out.add_term(key, 1);
        return out;
    }
    Permutation sigma(sd.sigma);
    int lsig = length(sigma);
    KLContext& ctx = global_kl(n);
    uint64_t wenc = ctx.encode(sigma);
    std::vector<std::pair<uint64_t, int>> survivors;
    for_each_surviving_term(sd, 0, [&](uint64_t enc, int len) {
        survivors.emplace_back(enc, len);
    });
    for (const auto& [enc, len] : survivors) {
        long long coeff = ctx.kl_encoded(enc, wenc).eval_one();
        if ((lsig + len) % 2 != 0) coeff = -coeff;
        out.add_term(pairing_of(sd, ctx, enc), coeff);
    }
    return out;
}

RingElement simple_to_standard(const RingElement& e) {
    if (e.basis() == Basis::standard) return e;
    RingElement out(Basis::standard);
    for (const auto& [m, c] : e.terms()) {
        for (const auto& [key, cc] : simple_to_standard(m).terms()) out.add_term(key, c * cc);
    }
    return out;
}

RingElement standard_to_simple(const RingElement& e) {
    if (e.basis() == Basis::simple) return e;
    return standard_to_simple_impl(e, 0);
}

RingElement multiply(const RingElement& e1, const RingElement& e2) {
    RingElement a = simple_to_standard(e1);
    RingElement b = simple_to_standard(e2);
    RingElement out(Basis::standard);
    for (const auto& [m1, c1] : a.terms()) {
        for (const auto& [m2, c2] : b.terms()) out.add_term(m1 + m2, c1 * c2);
    }
    return out;
}

std::optional<Multisegment> reduce_multisegment_mod_k(const Multisegment& m, int k) {
    Multisegment out;
    for (const Segment& s : m.segments()) {
        if (s.length() > k) return std::nullopt;
        if (s.length() < k) out.add(s);
    }
    return out;
}

RingElement reduce_mod_k(const RingElement& e, int k) {
    if (e.basis() != Basis::simple) {
        throw std::invalid_argument("reduce_mod_k: element must be in the simple basis");
    }
    RingElement out(Basis::simple);
    for (const auto& [m, c] : e.terms()) {
        if (auto r = reduce_multisegment_mod_k(m, k)) out.add_term(*r, c);
    }
    return out;
}

OracleResult tensor_oracle(const Multisegment& m, const Multisegment& n, int k) {
    if (!m.in_mult_k(k) || !n.in_mult_k(k)) {
        throw std::invalid_argument("tensor_oracle: inputs must lie in Mult_k");
    }
    RingElement product = multiply(simple_to_standard(m), simple_to_standard(n));
    OracleResult res;
    res.decomposition = standard_to_simple_impl(product, k);
    Multisegment expected = canonical_key(m + n);
    res.irreducible = res.decomposition.size() == 1 &&
                      res.decomposition.coefficient(expected) == 1;
    return res;
}

namespace {

struct Piece {
    Segment seg;
    bool from_m;
    int index;  // 1-based into the sorted combined list
};

// Left-aligned order with the longer segment first among equal begins.
std::vector<Piece> combined_sorted(const Multisegment& m, const Multisegment& n) {
    std::vector<Piece> all;
    for (const Segment& s : m.segments()) all.push_back({s, true, 0});
    for (const Segment& s : n.segments()) all.push_back({s, false, 0});
    std::stable_sort(all.begin(), all.end(), [](const Piece& x, const Piece& y) {
        return x.seg.begin != y.seg.begin ? x.seg.begin < y.seg.begin
                                          : x.seg.end > y.seg.end;
    });
    for (std::size_t i = 0; i < all.size(); ++i) all[i].index = static_cast<int>(i) + 1;
    return all;
}

// Core of Seq over an explicit piece list; need[] marks the part of delta
// still to cover. The opening tile comes from a segment starting exactly at
// b(delta) that fits inside delta (the longest such); later tiles come from
// the first segment, in list order, meeting the remainder on the opposite
// side.
TilingSequence seq_impl(const std::vector<Piece>& pieces, const Segment& delta) {
    TilingSequence out;
    std::vector<bool> need(delta.length(), true);
    int uncovered = delta.length();
    int prev_side = -1;  // 0 = m, 1 = n
    while (uncovered > 0) {
        const Piece* chosen = nullptr;
        if (prev_side < 0) {
            for (const Piece& p : pieces) {
                if (p.seg.begin != delta.begin || p.seg.end > delta.end) continue;
                if (!chosen || p.seg.end > chosen->seg.end) chosen = &p;
            }
        } else {
            for (const Piece& p : pieces) {
                if ((p.from_m ? 0 : 1) == prev_side) continue;
                int lo = std::max(p.seg.begin, delta.begin);
                int hi = std::min(p.seg.end, delta.end);
                bool meets = false;
                for (int v = lo; v <= hi && !meets; ++v) meets = need[v - delta.begin];
                if (meets) {
                    chosen = &p;
                    break;
                }
            }
        }
        if (!chosen) break;
        int lo = std::max(chosen->seg.begin, delta.begin);
        int hi = std::min(chosen->seg.end, delta.end);
        while (lo <= hi && !need[lo - delta.begin]) ++lo;
        while (hi >= lo && !need[hi - delta.begin]) --hi;
        bool contiguous = true;
        for (int v = lo; v <= hi; ++v) {
            if (!need[v - delta.begin]) contiguous = false;
        }
        if (!contiguous) return out;  // intersection is not a segment: not a tiling
        for (int v = lo; v <= hi; ++v) need[v - delta.begin] = false;
        uncovered -= hi - lo + 1;
        out.steps.push_back({Segment(lo, hi), chosen->index, chosen->from_m});
        prev_side = chosen->from_m ? 0 : 1;
    }
    out.tiled = uncovered == 0 &&
                std::all_of(out.steps.begin(), out.steps.end(), [&](const TilingStep& s) {
                    return s.sub.end == pieces[s.source_index - 1].seg.end;
                });
    return out;
}

}  // namespace

TilingSequence seq(const Multisegment& m, const Multisegment& n, const Segment& delta) {
    return seq_impl(combined_sorted(m, n), delta);
}

bool is_tiled(const Multisegment& m, const Multisegment& n, const Segment& delta) {
    return seq(m, n, delta).tiled;
}

bool tiles(const Multisegment& mx, const Multisegment& m, const Multisegment& n) {
    Multisegment rm = m, rn = n;
    std::vector<Segment> deltas = mx.segments();
    std::stable_sort(deltas.begin(), deltas.end(), [](const Segment& x, const Segment& y) {
        return x.begin != y.begin ? x.begin < y.begin : x.end > y.end;
    });
    for (const Segment& delta : deltas) {
        std::vector<Piece> pieces = combined_sorted(rm, rn);
        TilingSequence ts = seq_impl(pieces, delta);
        if (!ts.tiled) return false;
        // Remove each tile from its source; tiles are suffixes, so sources
        // shrink to their prefix.
        std::vector<Segment> nm, nn;
        std::vector<std::optional<Segment>> residual(pieces.size());
        for (std::size_t i = 0; i < pieces.size(); ++i) residual[i] = pieces[i].seg;
        for (const TilingStep& st : ts.steps) {
            const Segment& src = pieces[st.source_index - 1].seg;
            if (st.sub.begin == src.begin) {
                residual[st.source_index - 1] = std::nullopt;
            } else {
                residual[st.source_index - 1] = Segment(src.begin, st.sub.begin - 1);
            }
        }
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (!residual[i]) continue;
            (pieces[i].from_m ? nm : nn).push_back(*residual[i]);
        }
        rm = Multisegment(std::move(nm));
        rn = Multisegment(std::move(nn));
    }
    return true;
}

std::vector<Multisegment> ladder_decomposition(const Multisegment& m, const Multisegment& n,
                                               int budget) {
    if (!is_ladder(m) || !is_ladder(n)) {
        throw std::invalid_argument("ladder_decomposition: inputs must be ladders");
    }
    int total = static_cast<int>(m.size() + n.size());
    if (total > budget) {
        throw unsupported_error("ladder_decomposition: " + std::to_string(total) +
                                " segments exceed the enumeration budget " +
                                std::to_string(budget));
    }
    if (total == 0) return {Multisegment()};

    std::vector<int> lambda, mu;
    Multisegment combined = m + n;
    for (const Segment& s : combined.segments()) {
        lambda.push_back(s.begin);
        mu.push_back(s.end);
    }
    std::sort(lambda.begin(), lambda.end());
    std::sort(mu.begin(), mu.end());

    // One pass over S_total: group valid permutations into (lambda,mu)
    // exchange classes and keep the longest representative of each.
    struct ClassInfo {
        Permutation longest;
        int longest_len = -1;
    };
    std::map<std::vector<std::pair<int, int>>, ClassInfo> classes;
    std::vector<int> img(total);
    std::iota(img.begin(), img.end(), 1);
    do {
        bool valid = true;
        for (int i = 0; i < total && valid; ++i) {
            if (lambda[i] > mu[img[i] - 1] + 1) valid = false;
        }
        if (!valid) continue;
        std::vector<std::pair<int, int>> key(total);
        for (int i = 0; i < total; ++i) key[i] = {lambda[i], mu[img[i] - 1]};
        std::sort(key.begin(), key.end());
        Permutation x(img);
        int len = length(x);
        auto& info = classes[key];
        if (len > info.longest_len) {
            info.longest = x;
            info.longest_len = len;
        }
    } while (std::next_permutation(img.begin(), img.end()));

    std::vector<Multisegment> out;
    for (const auto& [key, info] : classes) {
        if (!is_321_avoiding(info.longest)) continue;
        Multisegment mx;
        for (const auto& [a, b] : key) {
            if (a <= b) mx.add(Segment(a, b));  // begin = end + 1 is the unit factor
        }
        if (!tiles(mx, m, n)) continue;
        out.push_back(mx.sorted_b_ascending());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Multisegment> ladder_decomposition_k(const Multisegment& m, const Multisegment& n,
                                                 int k, int budget) {
    std::vector<Multisegment> out;
    for (const Multisegment& term : ladder_decomposition(m, n, budget)) {
        if (auto r = reduce_multisegment_mod_k(term, k)) out.push_back(r->sorted_b_ascending());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lck
