#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "modpure/purity.hpp"
#include "modpure/theorems.hpp"
#include "modpure/validate.hpp"
#include "modpure/zoo.hpp"

namespace modpure {

using Json = nlohmann::ordered_json;

Json to_json(const Caps& caps);
Json to_json(const LeftIdeal& l);
Json to_json(const IdealHom& f);
Json to_json(const FailingPair& fail);
Json to_json(const EquationWitness& w);
Json to_json(const Submodule& s);
Json to_json(const PurityVerdict& v);
Json to_json(const PropertyVerdict& v);
Json to_json(const ClassificationRecord& rec);
Json to_json(const ValidationReport& rep);
Json to_json(const TheoremReport& rep);
Json scope_json(const ZooScope& scope);

std::string render_text(const ClassificationRecord& rec);
std::string render_text(const PurityVerdict& v, const std::string& property);
std::string render_text(const std::vector<TheoremReport>& reports);
std::string render_text(const ValidationReport& rep, const std::string& subject);

}  // namespace modpure
