#pragma once

#include <optional>
#include <vector>

#include "deckhand/agent/message.hpp"

namespace deckhand::agent {

enum class BudgetWarning { kWarn50, kWarn80 };

/// Context-window accounting for one trajectory. Each warning fires at most
/// once; warn50 always precedes or coincides with warn80.
struct ContextBudget {
  int limit_tokens = 50000;
  int used_tokens = 0;
  bool warn50_fired = false;
  bool warn80_fired = false;

  bool exhausted() const { return used_tokens >= limit_tokens; }
};

/// Advances `budget` to `new_used` and reports which warning lines were
/// crossed by this update, in firing order.
std::vector<BudgetWarning> check_budget(ContextBudget& budget, int new_used);

/// Token count for a message list. A client-reported figure wins outright;
/// the fallback charges ceil(text chars / 4) plus a flat fee per image.
int estimate_tokens(const std::vector<ModelMessage>& messages,
                    std::optional<int> reported_usage = std::nullopt);

constexpr int kTokensPerImage = 1000;

/// Fixed warning texts injected into the conversation as user messages.
const char* warning_text(BudgetWarning w);

}  // namespace deckhand::agent
