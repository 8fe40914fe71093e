#pragma once

#include <json.hpp>

#include "plactic/identity.hpp"
#include "plactic/subset.hpp"
#include "plactic/tableau.hpp"
#include "plactic/tropical.hpp"

namespace plactic {

using json = nlohmann::json;

json subset_to_json(const Subset& S);
Subset subset_from_json(const json& j, int n);

json matrix_to_json(const TropMatrix& M);
/// n is the ambient rank for subset labels; ignored for integer labels.
TropMatrix matrix_from_json(const json& j, int n);

json tableau_to_json(const Tableau& T);
Tableau tableau_from_json(const json& j);

json word_to_json(const Word& w);
Word word_from_json(const json& j, int n);

json witness_to_json(const IdentityWitness& w);
IdentityWitness witness_from_json(const json& j);

json sample_report_to_json(const SampleReport& r);

}  // namespace plactic
