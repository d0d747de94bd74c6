#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deckhand/agent/model_client.hpp"
#include "deckhand/prompts.hpp"
#include "deckhand/result.hpp"

namespace deckhand::eval {

/// Content/style quality scores, both on the 1-5 scale.
struct JudgeScore {
  double content = 0.0;
  double style = 0.0;
  std::string rationale;
};

Result<JudgeScore> parse_judge_score(const std::string& reply_text);

/// Sends the rendered deck pages plus the rubric to the judge and parses the
/// numeric scores; one re-ask on a malformed reply, then the deck is flagged
/// unscored.
Result<JudgeScore> judge_slides(const std::vector<std::vector<std::uint8_t>>& slide_pngs,
                                agent::ModelClient& judge_client, const std::string& rubric);

}  // namespace deckhand::eval
