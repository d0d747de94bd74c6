#pragma once

#include <string>
#include <vector>

#include "deckhand/result.hpp"
#include "deckhand/tools/workspace.hpp"

namespace deckhand::tools {

struct TodoItem {
  std::string id;
  std::string text;
  bool done = false;
};

/// Todo list persisted as `.todo.json` in the workspace; round-trips across
/// store instances so both phases see the same list.
class TodoStore {
 public:
  explicit TodoStore(const Workspace& workspace);

  Result<TodoItem> create(const std::string& text);
  Result<void> update(const std::string& id, bool done);
  Result<std::vector<TodoItem>> list() const;

  std::string render() const;

 private:
  Result<std::vector<TodoItem>> load() const;
  Result<void> save(const std::vector<TodoItem>& items) const;
  const Workspace& workspace_;
};

}  // namespace deckhand::tools
