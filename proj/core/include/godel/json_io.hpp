#pragma once

#include <nlohmann/json.hpp>

#include "godel/chain.hpp"
#include "godel/elimination.hpp"
#include "godel/first_order.hpp"
#include "godel/semantics.hpp"

namespace godel {

/// {"valid": bool, "countermodel": {atom: level}|null, "scale": k,
///  "mode": "standard"|"restricted"}
nlohmann::json to_json(const Verdict& v);

/// {"blocks": [["a"],["b"]], "bot_merged": false, "top_merged": false,
///  "links": ["strict"]}
nlohmann::json to_json(const Chain& c);

/// {"domain": d, "scale": k, "tables": {"P": {"(0,1)": 2, ...}}}
nlohmann::json to_json(const FiniteModel& m);

/// {"countermodel_found": bool, "countermodel": model|null,
///  "max_domain": d, "max_levels": k, "mode": ...}
nlohmann::json to_json(const BoundedVerdict& v);

/// {"input": ..., "mode": ..., "disjuncts": [chain...],
///  "equivalent_check": verdict}
nlohmann::json cnf_report(const std::string& input, const ChainNormalForm& cnf,
                          const Verdict& equivalent_check);

}  // namespace godel
