#ifndef ALMOSTSTABLE_RESULT_IO_H_
#define ALMOSTSTABLE_RESULT_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "almoststable/blocking.h"
#include "almoststable/instance.h"
#include "almoststable/matching.h"

namespace almoststable {

// One solve, as written to stdout by the CLI: a single-line JSON object with
// fields in this order. Ids are 1-based.
struct ResultRecord {
  std::vector<AgentPair> pairs;
  std::vector<AgentId> unmatched;
  int size = 0;
  int total_bp = 0;
  int max_bp = 0;
  int blocking_agents = 0;
  std::vector<AgentPair> blocking_pairs;
  bool stable = true;
  std::string objective = "minimax";
  int value = 0;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

// Record fields use 0-based ids in memory; conversion happens at the text
// boundary.
ResultRecord make_record(const Matching& m, const BlockingReport& r,
                         Objective objective = Objective::kMinimax);

std::string serialize_record(const ResultRecord& record);
ResultRecord parse_record(std::string_view text);

// serialize_record(make_record(m, r, objective)).
std::string serialize_result(const Matching& m, const BlockingReport& r,
                             Objective objective = Objective::kMinimax);

// Reads a matching for |inst| from either a result record or plain text with
// one "i j" pair per line ('#' comments allowed).
Matching parse_matching(const Instance& inst, std::string_view text);

}  // namespace almoststable

#endif  // ALMOSTSTABLE_RESULT_IO_H_
