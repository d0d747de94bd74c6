#include "deckhand/tools/todo.hpp"

#include <nlohmann/json.hpp>

namespace deckhand::tools {

using json = nlohmann::json;

namespace {
constexpr const char* kTodoFile = ".todo.json";
}

TodoStore::TodoStore(const Workspace& workspace) : workspace_(workspace) {}

Result<std::vector<TodoItem>> TodoStore::load() const {
  auto text = workspace_.read_text(kTodoFile);
  if (!text) return std::vector<TodoItem>{};
  json j = json::parse(text.value(), nullptr, false);
  if (j.is_discarded() || !j.is_array()) return std::vector<TodoItem>{};
  std::vector<TodoItem> items;
  for (const auto& e : j) {
    items.push_back({e.value("id", ""), e.value("text", ""), e.value("done", false)});
  }
  return items;
}

Result<void> TodoStore::save(const std::vector<TodoItem>& items) const {
  json j = json::array();
  for (const auto& item : items) {
    j.push_back(json{{"id", item.id}, {"text", item.text}, {"done", item.done}});
  }
  return workspace_.write_text(kTodoFile, j.dump());
}

Result<TodoItem> TodoStore::create(const std::string& text) {
  auto items = load();
  if (!items) return items.error();
  int max_n = 0;
  for (const auto& item : items.value()) {
    if (item.id.rfind("todo_", 0) == 0) max_n = std::max(max_n, std::atoi(item.id.c_str() + 5));
  }
  TodoItem item{"todo_" + std::to_string(max_n + 1), text, false};
  items.value().push_back(item);
  if (auto saved = save(items.value()); !saved) return saved.error();
  return item;
}

Result<void> TodoStore::update(const std::string& id, bool done) {
  auto items = load();
  if (!items) return items.error();
  for (auto& item : items.value()) {
    if (item.id == id) {
      item.done = done;
      return save(items.value());
    }
  }
  return Err("unknown todo id: " + id);
}

Result<std::vector<TodoItem>> TodoStore::list() const { return load(); }

std::string TodoStore::render() const {
  auto items = load();
  std::string out = "Todo list:\n";
  if (!items || items.value().empty()) return out + "  (empty)\n";
  for (const auto& item : items.value()) {
    out += "  [" + std::string(item.done ? "x" : " ") + "] " + item.id + ": " + item.text + "\n";
  }
  return out;
}

}  // namespace deckhand::tools
