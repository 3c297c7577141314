// JSON forms of the domain values. Multisegments are {"segments": [[a,b],..]},
// an absent (empty) segment is []; monomials are {"factors": [[i,s,exp],..]};
// tableaux carry their (k,n) context.

#pragma once

#include <json.hpp>

#include "lck/correspond.hpp"
#include "lck/criterion.hpp"
#include "lck/qchar.hpp"
#include "lck/ring.hpp"
#include "lck/segment.hpp"
#include "lck/tableau.hpp"

namespace lck {

using json = nlohmann::ordered_json;

json segment_to_json(const Segment& s);
json optional_segment_to_json(const std::optional<Segment>& s);
Segment segment_from_json(const json& j);

json multisegment_to_json(const Multisegment& m);
Multisegment multisegment_from_json(const json& j);

json column_to_json(const Column& c);
Column column_from_json(const json& j);

json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

json monomial_to_json(const DominantMonomial& m);
DominantMonomial monomial_from_json(const json& j);

json pairset_to_json(const PairSet& s);
json witness_to_json(const MatchWitness& w);
json ring_element_to_json(const RingElement& e);
json qcharacter_to_json(const QCharacter& chi);

// One CLI request -> one JSON response. Throws std::invalid_argument for
// malformed input and lck::unsupported_error for out-of-scope instances.
json run_request(const json& request);

// Aligned-text rendering of a response.
std::string render_text(const json& response);

}  // namespace lck
