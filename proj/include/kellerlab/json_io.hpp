#ifndef KELLERLAB_JSON_IO_HPP
#define KELLERLAB_JSON_IO_HPP

#include <json.hpp>

#include "kellerlab/cmw.hpp"
#include "kellerlab/engines.hpp"
#include "kellerlab/tame.hpp"

namespace kellerlab {

using Json = nlohmann::ordered_json;

Json to_json(const Endo& f);
Json to_json(const Factor& f);
Json to_json(const TameCertificate& c);
Json to_json(const SymmetrizationTranscript& t);
Json to_json(const ParityReport& r);
Json to_json(const SearchResult& r);
Json to_json(const DruzkowskiResult& r);
Json to_json(const SubalgebraExpr& e);

Endo endo_from_json(const Json& j);
Factor factor_from_json(const Json& j);
TameCertificate certificate_from_json(const Json& j);

std::string symmetry_name(SymmetryType t);

}  // namespace kellerlab

#endif
