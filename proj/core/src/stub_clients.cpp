#include "deckhand/stub/stub_clients.hpp"

#include <cstdio>

#include "deckhand/inspect/markdown.hpp"
#include "deckhand/inspect/preset.hpp"
#include "deckhand/pipeline/run.hpp"
#include "deckhand/tools/providers.hpp"

namespace deckhand::stub {

using agent::json;
using agent::ModelMessage;
using agent::ModelResponse;
using agent::Role;
using agent::ToolCall;

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<synth::TaskRecord> task_from_seed(const std::vector<ModelMessage>& messages) {
  for (const auto& msg : messages) {
    if (msg.role != Role::kUser) continue;
    const std::string text = msg.joined_text();
    const std::size_t open = text.find("```json\n");
    if (open == std::string::npos) continue;
    const std::size_t close = text.find("\n```", open + 8);
    if (close == std::string::npos) continue;
    json j = json::parse(text.substr(open + 8, close - open - 8), nullptr, false);
    if (j.is_discarded()) continue;
    return synth::task_from_json(j);
  }
  return std::nullopt;
}

std::string manuscript_from_seed(const std::vector<ModelMessage>& messages) {
  for (const auto& msg : messages) {
    if (msg.role != Role::kUser) continue;
    const std::string text = msg.joined_text();
    const std::string begin = "---BEGIN MANUSCRIPT---\n";
    const std::size_t open = text.find(begin);
    if (open == std::string::npos) continue;
    const std::size_t close = text.find("\n---END MANUSCRIPT---", open);
    if (close == std::string::npos) continue;
    return text.substr(open + begin.size(), close - open - begin.size());
  }
  return "";
}

int planned_slide_count(const synth::TaskRecord& task) {
  if (!task.constraints.slide_count) return 3;
  const auto& range = *task.constraints.slide_count;
  return range.lo + (range.hi - range.lo) / 2;
}

bool wants_chinese(const synth::TaskRecord& task) {
  return task.constraints.language &&
         *task.constraints.language == inspect::Language::kChinese;
}

int assistant_turns(const std::vector<ModelMessage>& messages) {
  int n = 0;
  for (const auto& m : messages) {
    if (m.role == Role::kAssistant) ++n;
  }
  return n;
}

ModelResponse call_response(const std::string& reasoning, const std::string& name, json args,
                            int ordinal) {
  ModelResponse r;
  r.text = reasoning;
  ToolCall call;
  call.id = "stub_" + std::to_string(ordinal);
  call.name = name;
  call.arguments = std::move(args);
  r.tool_calls.push_back(std::move(call));
  return r;
}

const char* kPalette[] = {"#1d3557", "#2a9d8f", "#6d597a", "#264653",
                          "#8d5524", "#355070", "#2f3e46", "#5f0f40"};
const char* kAccent[] = {"#e63946", "#e9c46a", "#b56576", "#e76f51",
                         "#f2cc8f", "#eaac8b", "#84a98c", "#fb8b24"};

std::string escape_html(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string stub_manuscript(const synth::TaskRecord& task, const std::string& image_rel) {
  const bool zh = wants_chinese(task);
  const int slides = planned_slide_count(task);
  std::string topic_line = task.instruction.substr(0, task.instruction.find('\n'));
  if (topic_line.size() > 80) topic_line = topic_line.substr(0, 80);

  std::string out;
  char buf[256];
  for (int i = 1; i <= slides; ++i) {
    if (i > 1) out += "\n---\n";
    if (zh) {
      std::snprintf(buf, sizeof(buf), "# 第%d页 核心要点\n\n", i);
      out += buf;
      if (i == 1) {
        out += "封面主题：" + topic_line + "\n\n";
        if (!image_rel.empty())
          out += "![封面配图](" + image_rel + ")\n\n";
      }
      out += "- 趋势分析与数据支撑\n- 关键结论与建议\n- 后续行动计划\n";
    } else {
      std::snprintf(buf, sizeof(buf), "# Slide %d: Key Points\n\n", i);
      out += buf;
      if (i == 1) {
        out += "Cover topic: " + topic_line + "\n\n";
        if (!image_rel.empty())
          out += "![cover illustration](" + image_rel + ")\n\n";
      }
      out += "- Trend analysis with supporting data\n- Main findings and recommendations\n"
             "- Follow-up action plan\n";
    }
  }
  return out;
}

std::string stub_slide_html(const synth::TaskRecord& task, int slide_index,
                            const std::string& slide_text, int width_px, int height_px) {
  const std::uint64_t h = fnv1a(task.id);
  const char* bg = kPalette[h % 8];
  const char* accent = kAccent[(h >> 8) % 8];
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<style>\n"
                "html, body { margin: 0; width: %dpx; height: %dpx; overflow: hidden;"
                " background: %s; color: #f4f1de; font-family: sans-serif; }\n"
                "</style>\n</head>\n<body>\n"
                "<div style=\"position: absolute; left: 64px; top: 48px; width: %dpx;"
                " height: 14px; background: %s;\"></div>\n",
                width_px, height_px, bg, width_px - 128, accent);
  std::string html = buf;
  html += "<div style=\"position: absolute; left: 64px; top: 96px; width: " +
          std::to_string(width_px - 128) + "px;\">\n<pre style=\"font-size: 22px; "
          "white-space: pre-wrap;\">" +
          escape_html(slide_text) + "</pre>\n</div>\n";
  std::snprintf(buf, sizeof(buf),
                "<div style=\"position: absolute; left: 64px; top: %dpx; width: 120px;"
                " height: 10px; background: %s;\"></div>\n</body>\n</html>\n",
                height_px - 64, accent);
  html += buf;
  (void)slide_index;
  return html;
}

Result<ModelResponse> PlannerModelClient::complete(const std::vector<ModelMessage>& messages,
                                                   const json& tools) {
  (void)tools;
  auto task = task_from_seed(messages);
  if (!task) return Err("planner stub: seed carries no machine-readable task");
  const int turn = assistant_turns(messages);
  const bool zh = wants_chinese(*task);

  const std::string manuscript = manuscript_from_seed(messages);
  const bool presenter_phase = !manuscript.empty();

  if (!presenter_phase) {
    const std::string topic = task->instruction.substr(0, task->instruction.find('\n'));
    const std::string prompt = "cover illustration: " + topic.substr(0, 60);
    const std::string image_rel =
        "assets/gen_" + tools::fixture_key(json{{"prompt", prompt}}).substr(0, 12) + ".png";
    switch (turn) {
      case 0:
        return call_response(
            zh ? "我先规划研究步骤，再撰写讲稿。" : "Planning the research before drafting.",
            "thinking",
            json{{"thought", zh ? "先检索主题资料，生成封面配图，然后按要求页数撰写讲稿并自检。"
                                : "Search the topic, generate a cover image, then draft the "
                                  "manuscript at the required length and inspect it."}},
            turn);
      case 1:
        return call_response("", "search_web", json{{"query", topic.substr(0, 60)}}, turn);
      case 2:
        return call_response("", "image_generation", json{{"prompt", prompt}}, turn);
      case 3:
        return call_response("", "write_file",
                             json{{"path", "manuscript.md"},
                                  {"content", stub_manuscript(*task, image_rel)}},
                             turn);
      case 4:
        return call_response("", "inspect_manuscript", json{{"path", "manuscript.md"}}, turn);
      default:
        return call_response("", "finalize", json{{"path", "manuscript.md"}}, turn);
    }
  }

  // Presenter script: one HTML file per manuscript block, inspect, finalize.
  auto blocks = inspect::split_slides(manuscript);
  const std::vector<std::string> slides =
      blocks ? blocks.value() : std::vector<std::string>{manuscript};
  const int slide_count = static_cast<int>(slides.size());

  inspect::AspectPreset preset = pipeline::resolve_preset(*task);

  if (turn == 0) {
    return call_response(
        zh ? "先确定整体设计，再逐页生成。" : "Settling the design plan before writing slides.",
        "thinking",
        json{{"thought", zh ? "采用统一深色主题与强调色，按讲稿逐页生成固定尺寸HTML。"
                            : "Use one dark theme with an accent color and emit fixed-size "
                              "HTML per manuscript page."}},
        turn);
  }
  const int slide_turn = turn - 1;
  if (slide_turn < slide_count) {
    char name[32];
    std::snprintf(name, sizeof(name), "slides/slide_%03d.html", slide_turn + 1);
    return call_response(
        "", "write_file",
        json{{"path", name},
             {"content", stub_slide_html(*task, slide_turn, slides[static_cast<std::size_t>(slide_turn)],
                                         preset.width_px, preset.height_px)}},
        turn);
  }
  if (slide_turn == slide_count) {
    return call_response("", "inspect_slide", json{{"path", "slides/slide_001.html"}}, turn);
  }
  return call_response("", "finalize", json{{"path", "slides"}}, turn);
}

Result<ModelResponse> CleanCriticClient::complete(const std::vector<ModelMessage>& messages,
                                                  const json& tools) {
  (void)messages;
  (void)tools;
  ModelResponse r;
  r.text = "{\"severity\": 0, \"thought\": \"\"}";
  return r;
}

Result<ModelResponse> PassJudgeClient::complete(const std::vector<ModelMessage>& messages,
                                                const json& tools) {
  (void)messages;
  (void)tools;
  ModelResponse r;
  r.text = "{\"pass\": true, \"reason\": \"no critical defects found\"}";
  return r;
}

Result<ModelResponse> ScoringJudgeClient::complete(const std::vector<ModelMessage>& messages,
                                                   const json& tools) {
  (void)tools;
  std::string key;
  for (const auto& m : messages) {
    key += m.joined_text();
    for (const auto& part : m.content) {
      if (part.kind != agent::ContentPart::Kind::kImage) continue;
      key += std::to_string(part.image_bytes.size());
      const std::size_t take = std::min<std::size_t>(part.image_bytes.size(), 256);
      key.append(reinterpret_cast<const char*>(part.image_bytes.data()), take);
    }
  }
  const std::uint64_t h = fnv1a(key);
  const int content = 3 + static_cast<int>(h % 3);
  const int style = 3 + static_cast<int>((h >> 16) % 3);
  ModelResponse r;
  r.text = "{\"content\": " + std::to_string(content) + ", \"style\": " + std::to_string(style) +
           ", \"rationale\": \"deterministic stub scoring\"}";
  return r;
}

}  // namespace deckhand::stub
