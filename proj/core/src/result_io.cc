#include "almoststable/result_io.h"

#include <sstream>

#include "almoststable/error.h"
#include "json.hpp"

namespace almoststable {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json pairs_json(const std::vector<AgentPair>& pairs) {
  ordered_json out = ordered_json::array();
  for (auto [a, b] : pairs) out.push_back({a + 1, b + 1});
  return out;
}

std::vector<AgentPair> pairs_from_json(const ordered_json& j) {
  std::vector<AgentPair> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) {
      throw Error(ErrorCode::kMalformed, "pair entries must be [i, j]");
    }
    out.emplace_back(p[0].get<int>() - 1, p[1].get<int>() - 1);
  }
  return out;
}

}  // namespace

ResultRecord make_record(const Matching& m, const BlockingReport& r,
                         Objective objective) {
  ResultRecord rec;
  rec.pairs = m.pairs();
  rec.unmatched = m.unmatched();
  rec.size = m.size();
  rec.total_bp = r.total_bp;
  rec.max_bp = r.max_bp;
  rec.blocking_agents = r.blocking_agents;
  rec.blocking_pairs = r.blocking_pairs;
  rec.stable = r.stable;
  rec.objective = std::string(to_string(objective));
  rec.value = r.value(objective);
  return rec;
}

std::string serialize_record(const ResultRecord& record) {
  ordered_json j;
  j["pairs"] = pairs_json(record.pairs);
  ordered_json unmatched = ordered_json::array();
  for (AgentId a : record.unmatched) unmatched.push_back(a + 1);
  j["unmatched"] = unmatched;
  j["size"] = record.size;
  j["total_bp"] = record.total_bp;
  j["max_bp"] = record.max_bp;
  j["blocking_agents"] = record.blocking_agents;
  j["blocking_pairs"] = pairs_json(record.blocking_pairs);
  j["stable"] = record.stable;
  j["objective"] = record.objective;
  j["value"] = record.value;
  return j.dump();
}

ResultRecord parse_record(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
    ResultRecord rec;
    rec.pairs = pairs_from_json(j.at("pairs"));
    for (const auto& a : j.at("unmatched")) rec.unmatched.push_back(a.get<int>() - 1);
    rec.size = j.at("size").get<int>();
    rec.total_bp = j.at("total_bp").get<int>();
    rec.max_bp = j.at("max_bp").get<int>();
    rec.blocking_agents = j.at("blocking_agents").get<int>();
    rec.blocking_pairs = pairs_from_json(j.at("blocking_pairs"));
    rec.stable = j.at("stable").get<bool>();
    rec.objective = j.at("objective").get<std::string>();
    rec.value = j.at("value").get<int>();
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformed, std::string("result record: ") + e.what());
  }
}

std::string serialize_result(const Matching& m, const BlockingReport& r,
                             Objective objective) {
  return serialize_record(make_record(m, r, objective));
}

Matching parse_matching(const Instance& inst, std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return build_matching(inst, parse_record(text).pairs);
  }
  std::vector<AgentPair> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    long long a = 0, b = 0;
    if (!(fields >> a)) continue;
    std::string extra;
    if (!(fields >> b) || (fields >> extra)) {
      throw Error(ErrorCode::kMalformed,
                  "matching line " + std::to_string(line_no) +
                      ": expected two agent ids");
    }
    pairs.emplace_back(static_cast<AgentId>(a - 1), static_cast<AgentId>(b - 1));
  }
  return build_matching(inst, pairs);
}

}  // namespace almoststable
