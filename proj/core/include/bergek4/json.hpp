#pragma once

// JSON encodings for the CLI's --json output and certification records.

#include <nlohmann/json.hpp>

#include "bergek4/bound.hpp"
#include "bergek4/detect.hpp"
#include "bergek4/search.hpp"
#include "bergek4/trace.hpp"
#include "bergek4/triple_system.hpp"

namespace bergek4 {

void to_json(nlohmann::json& j, const Triple& t);
void to_json(nlohmann::json& j, const TripleSystem& h);
void to_json(nlohmann::json& j, const Graph& g);
void to_json(nlohmann::json& j, const BergeEmbedding& e);
void to_json(nlohmann::json& j, const TraceMultigraph& t);
void to_json(nlohmann::json& j, const BoundReport& r);
void to_json(nlohmann::json& j, const SearchConfig& c);
void to_json(nlohmann::json& j, const SearchResult& r);
void to_json(nlohmann::json& j, const Certification& c);

/// Reads {"core":[...],"assignment":[{"pair":[i,j],"triple":[a,b,c]}]}.
BergeEmbedding embedding_from_json(const nlohmann::json& j);

}  // namespace bergek4
