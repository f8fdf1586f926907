#pragma once

#include <json.hpp>

#include "acat/cup.hpp"
#include "acat/nerve.hpp"

namespace acat {

using Json = nlohmann::json;  // keys serialize in sorted order

Json category_to_json(const FiniteCategory& c);
FiniteCategory category_from_json(const Json& j);

Json functor_to_json(const Functor& f, const std::string& name = "");
Functor functor_from_json(const Json& j);

Json complex_to_json(const SemiSimplicialSet& x);
SemiSimplicialSet complex_from_json(const Json& j);

Json homology_to_json(const std::vector<HomologyGroup>& groups, long long euler);
Json cup_report_to_json(const CupReport& r);

std::string homology_to_text(const std::vector<HomologyGroup>& groups, long long euler);

}  // namespace acat
