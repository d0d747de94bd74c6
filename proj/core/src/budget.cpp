#include "deckhand/agent/budget.hpp"

namespace deckhand::agent {

std::vector<BudgetWarning> check_budget(ContextBudget& budget, int new_used) {
  std::vector<BudgetWarning> fired;
  if (new_used < budget.used_tokens) new_used = budget.used_tokens;
  const long long limit = budget.limit_tokens;
  const long long t50 = limit * 50 / 100;
  const long long t80 = limit * 80 / 100;
  budget.used_tokens = new_used;
  if (!budget.warn50_fired && new_used >= t50) {
    budget.warn50_fired = true;
    fired.push_back(BudgetWarning::kWarn50);
  }
  if (!budget.warn80_fired && new_used >= t80) {
    budget.warn80_fired = true;
    fired.push_back(BudgetWarning::kWarn80);
  }
  return fired;
}

int estimate_tokens(const std::vector<ModelMessage>& messages,
                    std::optional<int> reported_usage) {
  if (reported_usage) return *reported_usage;
  long long total = 0;
  for (const auto& msg : messages) {
    for (const auto& part : msg.content) {
      if (part.kind == ContentPart::Kind::kImage) {
        total += kTokensPerImage;
      } else {
        total += (static_cast<long long>(part.text.size()) + 3) / 4;
      }
    }
    for (const auto& call : msg.tool_calls) {
      const std::string args = call.arguments.dump();
      total += (static_cast<long long>(call.name.size() + args.size()) + 3) / 4;
    }
  }
  return static_cast<int>(total);
}

const char* warning_text(BudgetWarning w) {
  switch (w) {
    case BudgetWarning::kWarn50:
      return "[context warning] 50% of the context window has been used. "
             "Consolidate your progress and keep further output concise.";
    case BudgetWarning::kWarn80:
      return "[context warning] 80% of the context window has been used. "
             "Wrap up the remaining work and call finalize soon.";
  }
  return "";
}

}  // namespace deckhand::agent
