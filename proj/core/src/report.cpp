#include "sphex/report.hpp"

namespace sphex {

namespace {

OrderedJson rule_to_json(const RuleApplication& app) {
  OrderedJson j;
  j["rule"] = app.rule;
  j["conclusion"] = app.conclusion;
  j["valid_on"] = app.valid_on;
  j["axioms"] = app.axioms;
  OrderedJson classes = OrderedJson::object();
  for (const auto& [role, label] : app.classes_used) classes[role] = label;
  j["classes"] = std::move(classes);
  OrderedJson dims = OrderedJson::object();
  for (const auto& [key, val] : app.cited_dims) dims[key] = val;
  j["fp_dims"] = std::move(dims);
  OrderedJson wit = OrderedJson::object();
  for (const auto& [role, members] : app.witnesses) wit[role] = members;
  j["witnesses"] = std::move(wit);
  OrderedJson chains = OrderedJson::object();
  for (const auto& [role, chain] : app.oliver_chains) {
    OrderedJson c;
    c["P"] = chain.p_members;
    c["H"] = chain.h_members;
    chains[role] = std::move(c);
  }
  j["oliver_witnesses"] = std::move(chains);
  return j;
}

RuleApplication rule_from_json(const OrderedJson& j) {
  RuleApplication app;
  app.rule = j.at("rule").get<std::string>();
  app.conclusion = j.at("conclusion").get<std::string>();
  app.valid_on = j.at("valid_on").get<std::string>();
  app.axioms = j.at("axioms").get<std::vector<std::string>>();
  for (auto& [k, v] : j.at("classes").items()) app.classes_used.emplace_back(k, v.get<std::string>());
  for (auto& [k, v] : j.at("fp_dims").items()) app.cited_dims.emplace_back(k, v.get<long>());
  for (auto& [k, v] : j.at("witnesses").items()) app.witnesses.emplace_back(k, v.get<std::vector<ElemId>>());
  for (auto& [k, v] : j.at("oliver_witnesses").items()) {
    OliverChain c;
    c.p_members = v.at("P").get<std::vector<ElemId>>();
    c.h_members = v.at("H").get<std::vector<ElemId>>();
    app.oliver_chains.emplace_back(k, std::move(c));
  }
  return app;
}

} // namespace

OrderedJson report_to_json(const ExclusionReport& rep, bool trace) {
  OrderedJson j;
  j["group"] = rep.group_name;
  j["mode"] = to_string(rep.mode);
  j["scope"] = to_string(rep.scope);
  j["dimension"] = rep.dimension;
  j["effective"] = rep.effective;
  if (rep.pseudofree)
    j["pseudofree"] = *rep.pseudofree;
  else
    j["pseudofree"] = nullptr;
  j["verdict"] = rep.excluded ? "EXCLUDED" : "NOT_EXCLUDED";
  j["candidate_count"] = rep.candidates.size();
  j["surviving"] = rep.surviving;
  j["surviving_families"] = rep.surviving_families;
  if (trace) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& cv : rep.candidates) {
      OrderedJson c;
      c["module"] = cv.name;
      c["mult"] = cv.module.mult;
      c["dimension"] = cv.dimension;
      c["excluded"] = cv.excluded;
      c["rule"] = cv.rule ? rule_to_json(*cv.rule) : OrderedJson(nullptr);
      arr.push_back(std::move(c));
    }
    j["candidates"] = std::move(arr);
  }
  return j;
}

ExclusionReport report_from_json(const OrderedJson& j, const CharacterTable& t) {
  ExclusionReport rep;
  rep.group_name = j.at("group").get<std::string>();
  rep.mode = j.at("mode").get<std::string>() == "one" ? Mode::One : Mode::Odd;
  rep.scope = j.at("scope").get<std::string>() == "homology" ? Scope::Homology : Scope::Standard;
  rep.dimension = j.at("dimension").get<long>();
  rep.effective = j.at("effective").get<bool>();
  if (!j.at("pseudofree").is_null()) rep.pseudofree = j.at("pseudofree").get<int>();
  rep.excluded = j.at("verdict").get<std::string>() == "EXCLUDED";
  rep.surviving = j.at("surviving").get<std::vector<std::string>>();
  rep.surviving_families = j.at("surviving_families").get<std::vector<std::string>>();
  if (j.contains("candidates")) {
    for (const auto& c : j.at("candidates")) {
      CandidateVerdict cv;
      cv.name = c.at("module").get<std::string>();
      cv.module.mult = c.at("mult").get<std::vector<unsigned>>();
      cv.dimension = c.at("dimension").get<long>();
      cv.excluded = c.at("excluded").get<bool>();
      if (!c.at("rule").is_null()) cv.rule = rule_from_json(c.at("rule"));
      rep.candidates.push_back(std::move(cv));
    }
  }
  (void)t;
  return rep;
}

OrderedJson lattice_to_json(const SubgroupLattice& lat) {
  OrderedJson j;
  j["group"] = lat.group().name();
  j["order"] = lat.group().order();
  j["class_count"] = lat.classes().size();
  j["total_subgroups"] = lat.total_subgroups();
  OrderedJson classes = OrderedJson::array();
  for (const auto& c : lat.classes()) {
    OrderedJson e;
    e["label"] = c.label;
    e["iso"] = c.iso_name;
    e["order"] = c.order();
    e["class_size"] = c.class_size;
    e["normal"] = c.is_normal;
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  OrderedJson edges = OrderedJson::array();
  for (auto [a, b] : lat.edges()) {
    OrderedJson e = OrderedJson::array();
    e.push_back(lat.classes()[a].label);
    e.push_back(lat.classes()[b].label);
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  return j;
}

} // namespace sphex
