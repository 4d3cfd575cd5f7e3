#pragma once

#include "json.hpp"

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/symmetric_group.hpp"
#include "hurwitz/zalgebra.hpp"

namespace hurwitz::io {

using Json = nlohmann::ordered_json;

// Readers throw std::invalid_argument on malformed input.

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"q": 8, "p": 8, "beta": 14}; unbounded alphabets are omitted.
Json to_json(const Truncation& t);
Truncation truncation_from_json(const Json& j);

/// [["q",2,1], ["t",1,0,2], ["beta",3]]
Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

Json to_json(const GradedSeries& s);
GradedSeries series_from_json(const Json& j);

/// [{"gens": [[0,1],[1,1]], "coeff": "1/1"}], gens ascending.
Json to_json(const ZPoly& p);
ZPoly zpoly_from_json(const Json& j);

Json to_json(const CharTable& t);

}  // namespace hurwitz::io
