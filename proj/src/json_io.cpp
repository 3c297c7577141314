#include "lck/json_io.hpp"

#include <algorithm>

namespace lck {

json segment_to_json(const Segment& s) { return json::array({s.begin, s.end}); }

json optional_segment_to_json(const std::optional<Segment>& s) {
    return s ? segment_to_json(*s) : json::array();
}

Segment segment_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        throw std::invalid_argument("segment: expected [a,b] with integers");
    }
    return Segment(j[0].get<int>(), j[1].get<int>());
}

json multisegment_to_json(const Multisegment& m) {
    json segs = json::array();
    for (const Segment& s : m.segments()) segs.push_back(segment_to_json(s));
    return json{{"segments", segs}};
}

Multisegment multisegment_from_json(const json& j) {
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("segments")) throw std::invalid_argument("multisegment: missing segments");
        arr = &j.at("segments");
    }
    if (!arr->is_array()) throw std::invalid_argument("multisegment: expected an array");
    Multisegment m;
    for (const json& e : *arr) m.add(segment_from_json(e));
    return m;
}

json column_to_json(const Column& c) {
    return json{{"k", c.k}, {"n", c.n}, {"entries", c.entries}};
}

Column column_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("n") || !j.contains("entries")) {
        throw std::invalid_argument("column: expected {k, n, entries}");
    }
    return Column(j.at("k").get<int>(), j.at("n").get<int>(),
                  j.at("entries").get<std::vector<int>>());
}

json tableau_to_json(const Tableau& t) {
    return json{{"k", t.k()}, {"n", t.n()}, {"rows", t.rows()}};
}

Tableau tableau_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("n") || !j.contains("rows")) {
        throw std::invalid_argument("tableau: expected {k, n, rows}");
    }
    return Tableau(j.at("k").get<int>(), j.at("n").get<int>(),
                   j.at("rows").get<std::vector<std::vector<int>>>());
}

json monomial_to_json(const DominantMonomial& m) {
    json factors = json::array();
    for (const auto& [v, e] : m.factors) factors.push_back(json::array({v.node, v.shift, e}));
    return json{{"factors", factors}};
}

DominantMonomial monomial_from_json(const json& j) {
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("factors")) throw std::invalid_argument("monomial: missing factors");
        arr = &j.at("factors");
    }
    if (!arr->is_array()) throw std::invalid_argument("monomial: expected an array");
    DominantMonomial m;
    for (const json& f : *arr) {
        if (!f.is_array() || f.size() != 3) {
            throw std::invalid_argument("monomial: factor must be [i,s,exp]");
        }
        m.mul(YVariable(f[0].get<int>(), f[1].get<int>()), f[2].get<int>());
    }
    return m;
}

json pairset_to_json(const PairSet& s) {
    json out = json::array();
    for (const auto& [i, j] : s) out.push_back(json::array({i, j}));
    return out;
}

json witness_to_json(const MatchWitness& w) {
    json out = json::array();
    for (const auto& [x, y] : w) {
        out.push_back(json::array(
            {json::array({x.first, x.second}), json::array({y.first, y.second})}));
    }
    return out;
}

json ring_element_to_json(const RingElement& e) {
    json terms = json::array();
    for (const auto& [m, c] : e.terms()) {
        json t = multisegment_to_json(m);
        t["coefficient"] = c;
        terms.push_back(std::move(t));
    }
    return json{{"basis", e.basis() == Basis::simple ? "simple" : "standard"}, {"terms", terms}};
}

json qcharacter_to_json(const QCharacter& chi) {
    json terms = json::array();
    for (const auto& [m, mult] : chi.terms) {
        json exps = json::array();
        for (const auto& [key, e] : m.exponents) {
            exps.push_back(json::array({key.first, key.second, e}));
        }
        terms.push_back(json{{"exponents", exps}, {"mult", mult}});
    }
    return json{{"k", chi.k}, {"terms", terms}};
}

namespace {

int require_int(const json& request, const json& payload, const char* name) {
    if (request.contains(name) && request.at(name).is_number_integer()) {
        return request.at(name).get<int>();
    }
    if (payload.contains(name) && payload.at(name).is_number_integer()) {
        return payload.at(name).get<int>();
    }
    throw std::invalid_argument(std::string("missing integer parameter: ") + name);
}

int optional_int(const json& request, const json& payload, const char* name, int fallback) {
    if (request.contains(name) && request.at(name).is_number_integer()) {
        return request.at(name).get<int>();
    }
    if (payload.contains(name) && payload.at(name).is_number_integer()) {
        return payload.at(name).get<int>();
    }
    return fallback;
}

json echo_multisegment(const Multisegment& m) {
    json out;
    out["given_order"] = multisegment_to_json(m)["segments"];
    out["canonical"] = multisegment_to_json(canonical_key(m))["segments"];
    return out;
}

json run_check(const json& request, const json& payload) {
    int k = require_int(request, payload, "k");
    if (k < 2) throw std::invalid_argument("check: k must be >= 2");
    Multisegment m = multisegment_from_json(payload.at("m"));
    Multisegment n = multisegment_from_json(payload.at("n"));

    bool snakes = (is_ladder(m) || is_ladder(n)) && m.in_mult_k(k) && n.in_mult_k(k);
    bool extremal = false;
    if (!snakes) {
        auto is_extremal_factor = [&](const Multisegment& a, const Multisegment& b) {
            return a.size() == 1 && (a[0].length() == 1 || a[0].length() == k - 1) &&
                   a.in_mult_k(k) && b.in_mult_k(k);
        };
        extremal = is_extremal_factor(m, n) || is_extremal_factor(n, m);
    }
    if (!snakes && !extremal) {
        throw unsupported_error(
            "check: criterion proven only for snake pairs or an extremal fundamental factor");
    }

    MatchWitness fw, bw;
    bool lc_forward = lc_k(m, n, k, &fw);
    bool lc_backward = lc_k(n, m, k, &bw);
    json out;
    out["command"] = "check";
    out["k"] = k;
    out["m"] = echo_multisegment(m);
    out["n"] = echo_multisegment(n);
    out["irreducible"] = lc_forward && lc_backward;
    out["lc_forward"] = lc_forward;
    out["lc_backward"] = lc_backward;
    json witness;
    witness["forward_matching"] = lc_forward ? witness_to_json(fw) : json();
    witness["backward_matching"] = lc_backward ? witness_to_json(bw) : json();
    if (is_ladder(m) && is_ladder(n)) {
        NCWitness nw;
        if (!lc_forward && nc_k(m, n, k, &nw)) {
            witness["forward_nc"] = json{{"i", nw.i}, {"j", nw.j}, {"m", nw.m}};
        }
        if (!lc_backward && nc_k(n, m, k, &nw)) {
            witness["backward_nc"] = json{{"i", nw.i}, {"j", nw.j}, {"m", nw.m}};
        }
    }
    out["witness"] = witness;
    return out;
}

json run_socle(const json& request, const json& payload) {
    int k = require_int(request, payload, "k");
    int a = require_int(request, payload, "a");
    Multisegment n = multisegment_from_json(payload.at("n"));
    if (!n.in_mult_k(k)) throw std::invalid_argument("socle: n must lie in Mult_k");
    Multisegment soc = socle_with_cuspidal(a, n, k);
    json out;
    out["command"] = "socle";
    out["k"] = k;
    out["a"] = a;
    out["n"] = echo_multisegment(n);
    out["socle"] = multisegment_to_json(soc)["segments"];
    return out;
}

json decomposition_terms(const std::vector<Multisegment>& terms) {
    std::map<Multisegment, long long> merged;
    for (const Multisegment& t : terms) merged[canonical_key(t)] += 1;
    json arr = json::array();
    for (const auto& [m, c] : merged) {
        json t = multisegment_to_json(m);
        t["coefficient"] = c;
        arr.push_back(std::move(t));
    }
    return arr;
}

json run_decompose(const json& request, const json& payload) {
    int k = require_int(request, payload, "k");
    int budget = optional_int(request, payload, "budget", 9);
    Multisegment m = multisegment_from_json(payload.at("m"));
    Multisegment n = multisegment_from_json(payload.at("n"));
    if (!is_ladder(m) || !is_ladder(n)) {
        throw unsupported_error("decompose: both multisegments must be ladders");
    }
    if (!m.in_mult_k(k) || !n.in_mult_k(k)) {
        throw std::invalid_argument("decompose: inputs must lie in Mult_k");
    }
    std::vector<Multisegment> terms = ladder_decomposition_k(m, n, k, budget);
    json out;
    out["command"] = "decompose";
    out["k"] = k;
    out["m"] = echo_multisegment(m);
    out["n"] = echo_multisegment(n);
    out["terms"] = decomposition_terms(terms);
    return out;
}

json run_oracle(const json& request, const json& payload) {
    int k = require_int(request, payload, "k");
    Multisegment m = multisegment_from_json(payload.at("m"));
    Multisegment n = multisegment_from_json(payload.at("n"));
    if (!m.in_mult_k(k) || !n.in_mult_k(k)) {
        throw std::invalid_argument("oracle: inputs must lie in Mult_k");
    }
    OracleResult res = tensor_oracle(m, n, k);
    json out;
    out["command"] = "oracle";
    out["k"] = k;
    out["m"] = echo_multisegment(m);
    out["n"] = echo_multisegment(n);
    out["irreducible"] = res.irreducible;
    out["decomposition"] = ring_element_to_json(res.decomposition)["terms"];
    return out;
}

json run_qchar(const json& request, const json& payload) {
    int k = require_int(request, payload, "k");
    int i = require_int(request, payload, "i");
    int p = require_int(request, payload, "p");
    QCharacter chi = fundamental_qchar(i, p, k);
    json out;
    out["command"] = "qchar";
    out["k"] = k;
    out["i"] = i;
    out["p"] = p;
    out["term_count"] = chi.term_count();
    out["terms"] = qcharacter_to_json(chi)["terms"];
    return out;
}

json run_wsep(const json& /*request*/, const json& payload) {
    if (!payload.contains("i_set") || !payload.contains("j_set")) {
        throw std::invalid_argument("wsep: expected i_set and j_set");
    }
    std::vector<int> a = payload.at("i_set").get<std::vector<int>>();
    std::vector<int> b = payload.at("j_set").get<std::vector<int>>();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a.size() != b.size()) throw std::invalid_argument("wsep: sets must have equal size");
    auto witness = separation_witness(a, b);
    json out;
    out["command"] = "wsep";
    out["i_set"] = a;
    out["j_set"] = b;
    out["weakly_separated"] = witness.has_value();
    if (witness) {
        out["partition"] = json{{"split", witness->split_j_minus_i ? "J-I" : "I-J"},
                                {"low", witness->low},
                                {"high", witness->high}};
    } else {
        out["partition"] = json();
    }
    return out;
}

json run_convert(const json& request, const json& payload) {
    json out;
    out["command"] = "convert";
    std::optional<Segment> seg;
    std::optional<Multisegment> mult;
    if (payload.contains("segment")) {
        seg = segment_from_json(payload.at("segment"));
    } else if (payload.contains("monomial")) {
        DominantMonomial m = monomial_from_json(payload.at("monomial"));
        Multisegment ms = monomial_to_multisegment(m);
        if (ms.size() == 1) seg = ms[0];
        mult = ms;
    } else if (payload.contains("multisegment")) {
        mult = multisegment_from_json(payload.at("multisegment"));
    } else if (payload.contains("column")) {
        seg = column_to_segment(column_from_json(payload.at("column")));
    } else if (payload.contains("tableau")) {
        mult = tableau_to_multisegment(tableau_from_json(payload.at("tableau")));
    } else {
        throw std::invalid_argument(
            "convert: expected one of segment, multisegment, monomial, column, tableau");
    }
    if (seg && !mult) mult = Multisegment({*seg});

    if (seg) {
        out["segment"] = segment_to_json(*seg);
        YVariable v = segment_to_y(*seg);
        out["monomial"] = json::array({json::array({v.node, v.shift, 1})});
    } else {
        out["monomial"] = monomial_to_json(multisegment_to_monomial(*mult))["factors"];
    }
    out["multisegment"] = multisegment_to_json(*mult)["segments"];

    int k = optional_int(request, payload, "k", 0);
    int n = optional_int(request, payload, "n", 0);
    if (k > 0) {
        if (k < 2) throw std::invalid_argument("convert: k must be >= 2");
        if (n <= 0) n = 2 * k + 2;  // roomy default window
        if (n < k + 2) throw std::invalid_argument("convert: need n >= k+2");
        if (seg) out["column"] = column_to_json(segment_to_column(*seg, k, n));
        out["tableau"] = tableau_to_json(multisegment_to_tableau(*mult, k, n));
    }
    return out;
}

void render_value(const json& v, const std::string& indent, std::string& out);

void render_object(const json& v, const std::string& indent, std::string& out) {
    std::size_t width = 0;
    for (auto it = v.begin(); it != v.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = v.begin(); it != v.end(); ++it) {
        out += indent + it.key() + std::string(width - it.key().size(), ' ') + " : ";
        if (it.value().is_object() && !it.value().empty()) {
            out += "\n";
            render_object(it.value(), indent + "  ", out);
        } else {
            render_value(it.value(), indent, out);
            out += "\n";
        }
    }
}

void render_value(const json& v, const std::string& indent, std::string& out) {
    if (v.is_object()) {
        std::string inner;
        render_object(v, indent + "  ", inner);
        out += "\n" + inner;
    } else {
        out += v.dump();
    }
}

}  // namespace

json run_request(const json& request) {
    if (!request.is_object() || !request.contains("command")) {
        throw std::invalid_argument("request: missing command");
    }
    std::string command = request.at("command").get<std::string>();
    json payload = request.contains("payload") ? request.at("payload") : request;
    if (command == "check") return run_check(request, payload);
    if (command == "socle") return run_socle(request, payload);
    if (command == "decompose") return run_decompose(request, payload);
    if (command == "oracle") return run_oracle(request, payload);
    if (command == "qchar") return run_qchar(request, payload);
    if (command == "wsep") return run_wsep(request, payload);
    if (command == "convert") return run_convert(request, payload);
    throw std::invalid_argument("request: unknown command " + command);
}

std::string render_text(const json& response) {
    std::string out;
    render_object(response, "", out);
    return out;
}

}  // namespace lck
