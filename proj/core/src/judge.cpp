#include "deckhand/eval/judge.hpp"

namespace deckhand::eval {

using agent::ContentPart;
using agent::json;
using agent::ModelMessage;
using agent::Role;

Result<JudgeScore> parse_judge_score(const std::string& reply_text) {
  json j = json::parse(reply_text, nullptr, false);
  if (j.is_discarded()) {
    const std::size_t open = reply_text.find('{');
    const std::size_t close = reply_text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close <= open)
      return Err("judge reply is not JSON");
    j = json::parse(reply_text.substr(open, close - open + 1), nullptr, false);
    if (j.is_discarded()) return Err("judge reply is not JSON");
  }
  if (!j.is_object() || !j.contains("content") || !j.contains("style") ||
      !j.at("content").is_number() || !j.at("style").is_number())
    return Err("judge reply lacks numeric content/style");
  JudgeScore score;
  score.content = j.at("content").get<double>();
  score.style = j.at("style").get<double>();
  score.rationale = j.value("rationale", "");
  if (score.content < 1.0 || score.content > 5.0 || score.style < 1.0 || score.style > 5.0)
    return Err("judge scores out of the 1-5 range");
  return score;
}

Result<JudgeScore> judge_slides(const std::vector<std::vector<std::uint8_t>>& slide_pngs,
                                agent::ModelClient& judge_client, const std::string& rubric) {
  if (slide_pngs.empty()) return Err("no slide images to judge");

  std::vector<ModelMessage> request;
  request.push_back(ModelMessage::text(Role::kSystem, rubric));
  ModelMessage user;
  user.role = Role::kUser;
  user.content.push_back(ContentPart::make_text(
      "The presentation has " + std::to_string(slide_pngs.size()) + " slide(s), in order."));
  for (const auto& png : slide_pngs)
    user.content.push_back(ContentPart::make_image(png, "image/png"));
  request.push_back(std::move(user));

  auto reply = judge_client.complete(request, json::array());
  if (!reply) return Err("judge transport failure: " + reply.error().message);
  auto parsed = parse_judge_score(reply.value().text);
  if (parsed) return parsed;

  request.push_back(ModelMessage::text(
      Role::kUser, "Your reply was not valid. Return strict JSON only: "
                   "{\"content\": <1-5>, \"style\": <1-5>, \"rationale\": \"...\"}"));
  reply = judge_client.complete(request, json::array());
  if (!reply) return Err("judge transport failure: " + reply.error().message);
  parsed = parse_judge_score(reply.value().text);
  if (!parsed) return Err("unscored: judge reply malformed twice");
  return parsed;
}

}  // namespace deckhand::eval
