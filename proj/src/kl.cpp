#include "lck/kl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

/*
  The recursion, with w*s < w for a right descent s:

    P_{x,w} = P_{xs,w}                                        if xs > x,
    P_{x,w} = P_{xs,ws} + q P_{x,ws}
              - sum_{z <= ws, zs < z} mu(z,ws) q^{(l(w)-l(z))/2} P_{x,z}   otherwise,

  where mu(z,y) is the coefficient of q^{(l(y)-l(z)-1)/2} in P_{z,y}.

  Two shortcuts carry the load at this scale: P_{x,w} = 1 when l(w)-l(x) <= 2,
  and P_{x,w} = 1 for every x <= w when w avoids 3412 and 4231
  (Lakshmibai-Sandhya). For the correction sum, candidates with codimension
  >= 3 must dominate the descent sets of ws on both sides, which prunes the
  interval scan to almost nothing; for smooth ws only covers contribute.
*/

namespace lck {

long long IntPolynomial::eval_one() const {
    long long s = 0;
    for (long long c : coeffs) s += c;
    return s;
}

void IntPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    trim();
    return *this;
}

void IntPolynomial::sub_shifted(long long c, int shift, const IntPolynomial& o) {
    if (o.coeffs.size() + shift > coeffs.size()) coeffs.resize(o.coeffs.size() + shift, 0);
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i + shift] -= c * o.coeffs[i];
    trim();
}

IntPolynomial IntPolynomial::shifted(int d) const {
    std::vector<long long> c(coeffs.size() + d, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i + d] = coeffs[i];
    return IntPolynomial(std::move(c));
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = 0; d <= p.degree(); ++d) {
        if (p.coeffs[d] == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(p.coeffs[d]);
        if (d >= 1) out += d == 1 ? "q" : "q^" + std::to_string(d);
    }
    return out;
}

KLContext::KLContext(int m) : m_(m), zero_(), one_(IntPolynomial::one()) {
    if (m < 1 || m > 15) throw std::invalid_argument("kl context: rank out of [1,15]");
}

uint64_t KLContext::encode(const Permutation& p) const {
    uint64_t e = 0;
    for (int i = 0; i < m_; ++i) e |= static_cast<uint64_t>(p.images[i] - 1) << (4 * i);
    return e;
}

Permutation KLContext::decode(uint64_t enc) const {
    std::vector<int> img(m_);
    for (int i = 0; i < m_; ++i) img[i] = at(enc, i);
    return Permutation(std::move(img));
}

uint64_t KLContext::swap_pos(uint64_t enc, int s) const {
    uint64_t a = (enc >> (4 * s)) & 0xF;
    uint64_t b = (enc >> (4 * (s + 1))) & 0xF;
    enc &= ~(0xFULL << (4 * s));
    enc &= ~(0xFULL << (4 * (s + 1)));
    return enc | (b << (4 * s)) | (a << (4 * (s + 1)));
}

int KLContext::first_right_descent(uint64_t w) const {
    for (int s = 0; s + 1 < m_; ++s) {
        if (at(w, s) > at(w, s + 1)) return s;
    }
    return -1;
}

int KLContext::length_of(uint64_t enc) const {
    int inv = 0;
    for (int i = 0; i < m_; ++i) {
        int vi = at(enc, i);
        for (int j = i + 1; j < m_; ++j) {
            if (vi > at(enc, j)) ++inv;
        }
    }
    return inv;
}

bool KLContext::leq(uint64_t x, uint64_t w) const {
    if (x == w) return true;
    int d[16] = {0};
    for (int i = 0; i < m_; ++i) {
        int vx = static_cast<int>(x & 0xF) + 1;
        int vw = static_cast<int>(w & 0xF) + 1;
        x >>= 4;
        w >>= 4;
        // only d[min+1 .. max] changes; a violation can appear there alone
        if (vx > vw) {
            for (int j = vw + 1; j <= vx; ++j) {
                if (++d[j] > 0) return false;
            }
        } else {
            for (int j = vx + 1; j <= vw; ++j) --d[j];
        }
    }
    return true;
}

std::vector<uint64_t> KLContext::covers_below(uint64_t w) const {
    int v[16];
    for (int i = 0; i < m_; ++i) v[i] = static_cast<int>((w >> (4 * i)) & 0xF);
    std::vector<uint64_t> out;
    out.reserve(m_ * 2);
    for (int i = 0; i < m_; ++i) {
        for (int j = i + 1; j < m_; ++j) {
            if (v[i] <= v[j]) continue;
            bool blocked = false;
            for (int p = i + 1; p < j; ++p) {
                if (v[p] < v[i] && v[p] > v[j]) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) continue;
            uint64_t z = w;
            z &= ~(0xFULL << (4 * i));
            z &= ~(0xFULL << (4 * j));
            out.push_back(z | (static_cast<uint64_t>(v[j]) << (4 * i)) |
                          (static_cast<uint64_t>(v[i]) << (4 * j)));
        }
    }
    return out;
}

const std::vector<uint64_t>& KLContext::interval_enc(uint64_t w) {
    auto it = intervals_.find(w);
    if (it != intervals_.end()) return it->second;
    // A cached superset interval filters much faster than a fresh BFS.
    uint64_t best = 0;
    std::size_t best_size = SIZE_MAX;
    for (uint64_t cand : interval_order_) {
        const auto& vec = intervals_.at(cand);
        if (vec.size() < best_size && leq(w, cand)) {
            best = cand;
            best_size = vec.size();
        }
    }
    std::vector<uint64_t> all;
    if (best_size != SIZE_MAX) {
        const auto& super = intervals_.at(best);
        all.reserve(super.size() / 2 + 1);
        for (uint64_t z : super) {
            if (leq(z, w)) all.push_back(z);
        }
    } else {
        std::unordered_set<uint64_t> seen{w};
        seen.reserve(4096);
        std::deque<uint64_t> queue{w};
        all.push_back(w);
        while (!queue.empty()) {
            uint64_t cur = queue.front();
            queue.pop_front();
            for (uint64_t z : covers_below(cur)) {
                if (seen.insert(z).second) {
                    all.push_back(z);
                    queue.push_back(z);
                }
            }
        }
    }
    interval_order_.push_back(w);
    return intervals_.emplace(w, std::move(all)).first->second;
}

const std::vector<uint64_t>& KLContext::interval_below(const Permutation& w) {
    return interval_enc(encode(w));
}

bool KLContext::smooth(uint64_t w) {
    auto it = smooth_.find(w);
    if (it != smooth_.end()) return it->second;
    bool s = is_smooth(decode(w));
    smooth_.emplace(w, s);
    return s;
}

namespace {

inline uint64_t inverse_enc(uint64_t enc, int m) {
    uint64_t out = 0;
    for (int i = 0; i < m; ++i) {
        uint64_t v = (enc >> (4 * i)) & 0xF;
        out |= static_cast<uint64_t>(i) << (4 * v);
    }
    return out;
}

// Bit s set iff there is a descent at position s.
inline uint32_t descent_mask(uint64_t enc, int m) {
    uint32_t mask = 0;
    for (int s = 0; s + 1 < m; ++s) {
        if (((enc >> (4 * s)) & 0xF) > ((enc >> (4 * (s + 1))) & 0xF)) mask |= 1u << s;
    }
    return mask;
}

}  // namespace

const std::vector<std::pair<uint64_t, int>>& KLContext::mu_list(uint64_t w, int s) {
    uint64_t key = w * 16 + static_cast<uint64_t>(s);
    auto it = mu_.find(key);
    if (it != mu_.end()) return it->second;

    std::vector<std::pair<uint64_t, int>> list;
    for (uint64_t z : covers_below(w)) {
        if (at(z, s) > at(z, s + 1)) list.emplace_back(z, 1);
    }
    if (!smooth(w)) {
        // Codimension >= 3 candidates must dominate both descent sets of w.
        uint32_t wr = descent_mask(w, m_);
        uint32_t wl = descent_mask(inverse_enc(w, m_), m_);
        int lw = length_of(w);
        std::vector<uint64_t> interval = interval_enc(w);  // copy: recursion mutates caches
        for (uint64_t z : interval) {
            if (at(z, s) < at(z, s + 1)) continue;
            uint32_t zr = descent_mask(z, m_);
            if ((wr & ~zr) != 0) continue;
            int diff = lw - length_of(z);
            if (diff < 3 || diff % 2 == 0) continue;
            uint32_t zl = descent_mask(inverse_enc(z, m_), m_);
            if ((wl & ~zl) != 0) continue;
            long long mu = kl_enc(z, w).coeff((diff - 1) / 2);
            if (mu != 0) list.emplace_back(z, static_cast<int>(mu));
        }
    }
    return mu_.emplace(key, std::move(list)).first->second;
}

const IntPolynomial& KLContext::kl_enc(uint64_t x, uint64_t w) {
    while (true) {
        if (x == w) return one_;
        if (!leq(x, w)) return zero_;
        if (length_of(w) - length_of(x) <= 2 || smooth(w)) return one_;
        // Lift x through any descent of w that ascends x, on either side;
        // P_{x,w} is unchanged and the pair climbs toward the cheap cases.
        bool lifted = false;
        for (int s = 0; s + 1 < m_; ++s) {
            if (at(w, s) > at(w, s + 1) && at(x, s) < at(x, s + 1)) {
                x = swap_pos(x, s);
                lifted = true;
                break;
            }
        }
        if (lifted) continue;
        uint64_t winv = inverse_enc(w, m_), xinv = inverse_enc(x, m_);
        for (int s = 0; s + 1 < m_; ++s) {
            if (at(winv, s) > at(winv, s + 1) && at(xinv, s) < at(xinv, s + 1)) {
                x = inverse_enc(swap_pos(xinv, s), m_);
                lifted = true;
                break;
            }
        }
        if (!lifted) break;
    }

    auto key = std::make_pair(x, w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    // Here every descent of w descends x as well.
    int s = first_right_descent(w);
    uint64_t xs = swap_pos(x, s);
    uint64_t ws = swap_pos(w, s);
    IntPolynomial result = kl_enc(xs, ws);
    result += kl_enc(x, ws).shifted(1);
    int lw = length_of(w);
    auto mus = mu_list(ws, s);  // copy: recursion below may rehash mu_
    for (const auto& [z, mu] : mus) {
        if (!leq(x, z)) continue;
        result.sub_shifted(mu, (lw - length_of(z)) / 2, kl_enc(x, z));
    }
    return memo_.emplace(key, std::move(result)).first->second;
}

const IntPolynomial& KLContext::kl(const Permutation& x, const Permutation& w) {
    if (x.size() != m_ || w.size() != m_) throw std::invalid_argument("kl: size mismatch");
    return kl_enc(encode(x), encode(w));
}

KLContext& global_kl(int m) {
    thread_local std::map<int, std::unique_ptr<KLContext>> contexts;
    auto& slot = contexts[m];
    if (!slot) slot = std::make_unique<KLContext>(m);
    return *slot;
}

IntPolynomial kl_poly(const Permutation& x, const Permutation& w) {
    if (x.size() != w.size()) throw std::invalid_argument("kl_poly: size mismatch");
    return global_kl(x.size()).kl(x, w);
}

}  // namespace lck
