#include "godel/json_io.hpp"

namespace godel {

using nlohmann::json;

json to_json(const Verdict& v) {
  json out;
  out["valid"] = v.valid;
  if (v.countermodel) {
    json cm = json::object();
    for (const auto& [name, level] : v.countermodel->levels) cm[name] = level;
    out["countermodel"] = cm;
  } else {
    out["countermodel"] = nullptr;
  }
  out["scale"] = v.scale;
  out["mode"] = to_string(v.mode);
  return out;
}

json to_json(const Chain& c) {
  json blocks = json::array();
  for (const auto& block : c.blocks) blocks.push_back(block);
  json links = json::array();
  for (std::size_t i = 0; i + 1 < c.blocks.size(); ++i) links.push_back("strict");
  return json{{"blocks", blocks},
              {"bot_merged", c.bot_merged},
              {"top_merged", c.top_merged},
              {"links", links}};
}

namespace {

std::string tuple_key(const std::vector<int>& tuple) {
  std::string key = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(tuple[i]);
  }
  key += ')';
  return key;
}

}  // namespace

json to_json(const FiniteModel& m) {
  json tables = json::object();
  for (const auto& [name, table] : m.tables) {
    json entries = json::object();
    for (const auto& [tuple, level] : table) entries[tuple_key(tuple)] = level;
    tables[name] = entries;
  }
  return json{{"domain", m.domain_size},
              {"scale", m.scale.levels},
              {"tables", tables}};
}

json to_json(const BoundedVerdict& v) {
  json out;
  out["countermodel_found"] = v.countermodel_found;
  out["countermodel"] = v.countermodel ? to_json(*v.countermodel) : json(nullptr);
  out["max_domain"] = v.bounds.max_domain;
  out["max_levels"] = v.bounds.max_levels;
  out["mode"] = to_string(v.mode);
  return out;
}

json cnf_report(const std::string& input, const ChainNormalForm& cnf,
                const Verdict& equivalent_check) {
  json disjuncts = json::array();
  for (const auto& d : cnf.disjuncts) disjuncts.push_back(to_json(d.chain));
  return json{{"input", input},
              {"mode", to_string(cnf.mode)},
              {"disjuncts", disjuncts},
              {"equivalent_check", to_json(equivalent_check)}};
}

}  // namespace godel
