#include "deckhand/verify/pdf_summary.hpp"

#include <zlib.h>

#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <variant>

namespace deckhand::verify {

namespace {

// ---------------------------------------------------------------------------
// PDF object model
// ---------------------------------------------------------------------------

struct PdfValue;
using PdfArray = std::vector<PdfValue>;
using PdfDict = std::map<std::string, PdfValue>;

struct PdfRef {
  int num = 0;
  int gen = 0;
};

struct PdfStream {
  PdfDict dict;
  std::string data;
};

struct PdfValue {
  std::variant<std::monostate, bool, double, std::string /*string bytes*/,
               PdfArray, PdfDict, PdfRef, std::shared_ptr<PdfStream>>
      v;
  bool is_name = false;  // distinguishes /Name from (string)

  bool is_null() const { return std::holds_alternative<std::monostate>(v); }
  bool is_number() const { return std::holds_alternative<double>(v); }
  bool is_string() const { return std::holds_alternative<std::string>(v) && !is_name; }
  bool is_name_v() const { return std::holds_alternative<std::string>(v) && is_name; }
  bool is_array() const { return std::holds_alternative<PdfArray>(v); }
  bool is_dict() const { return std::holds_alternative<PdfDict>(v); }
  bool is_ref() const { return std::holds_alternative<PdfRef>(v); }
  bool is_stream() const { return std::holds_alternative<std::shared_ptr<PdfStream>>(v); }

  double number() const { return std::get<double>(v); }
  const std::string& str() const { return std::get<std::string>(v); }
  const PdfArray& array() const { return std::get<PdfArray>(v); }
  const PdfDict& dict() const { return std::get<PdfDict>(v); }
  const PdfRef& ref() const { return std::get<PdfRef>(v); }
  const PdfStream& stream() const { return *std::get<std::shared_ptr<PdfStream>>(v); }
};

bool is_ws(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\0';
}

bool is_delim(unsigned char c) {
  return c == '(' || c == ')' || c == '<' || c == '>' || c == '[' || c == ']' || c == '{' ||
         c == '}' || c == '/' || c == '%';
}

// ---------------------------------------------------------------------------
// Tokenizer / recursive-descent parser over the raw bytes
// ---------------------------------------------------------------------------

class Lexer {
 public:
  Lexer(const std::string& data, std::size_t pos) : data_(data), pos_(pos) {}

  std::size_t pos() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }
  bool eof() const { return pos_ >= data_.size(); }
  unsigned char peek() const { return eof() ? 0 : static_cast<unsigned char>(data_[pos_]); }

  void skip_ws() {
    while (!eof()) {
      const unsigned char c = peek();
      if (is_ws(c)) {
        ++pos_;
      } else if (c == '%') {
        while (!eof() && data_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  // Reads a bare keyword (operator, obj/endobj, true/false/null, R).
  std::string keyword() {
    skip_ws();
    std::string out;
    while (!eof() && !is_ws(peek()) && !is_delim(peek())) out += data_[pos_++];
    return out;
  }

  std::optional<PdfValue> parse_value(int depth = 0);

 private:
  PdfValue parse_literal_string();
  PdfValue parse_hex_string();
  std::string parse_name_body();

  const std::string& data_;
  std::size_t pos_;
};

PdfValue Lexer::parse_literal_string() {
  ++pos_;  // consume '('
  std::string out;
  int depth = 1;
  while (!eof()) {
    char c = data_[pos_++];
    if (c == '\\') {
      if (eof()) break;
      char e = data_[pos_++];
      switch (e) {
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case '(': out += '('; break;
        case ')': out += ')'; break;
        case '\\': out += '\\'; break;
        case '\r':
          if (!eof() && data_[pos_] == '\n') ++pos_;
          break;  // line continuation
        case '\n': break;
        default:
          if (e >= '0' && e <= '7') {
            int code = e - '0';
            for (int k = 0; k < 2 && !eof() && data_[pos_] >= '0' && data_[pos_] <= '7'; ++k)
              code = code * 8 + (data_[pos_++] - '0');
            out += static_cast<char>(code & 0xff);
          } else {
            out += e;
          }
      }
      continue;
    }
    if (c == '(') ++depth;

    if (c == ')') {
      if (--depth == 0) break;
    }
    out += c;
  }
  PdfValue v;
  v.v = out;
  return v;
}

PdfValue Lexer::parse_hex_string() {
  ++pos_;  // consume '<'
  std::string out;
  int hi = -1;
  while (!eof()) {
    const char c = data_[pos_++];
    if (c == '>') break;
    int nibble = -1;
    if (c >= '0' && c <= '9') nibble = c - '0';
    else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') nibble = c - 'A' + 10;
    else continue;
    if (hi < 0) {
      hi = nibble;
    } else {
      out += static_cast<char>((hi << 4) | nibble);
      hi = -1;
    }
  }
  if (hi >= 0) out += static_cast<char>(hi << 4);
  PdfValue v;
  v.v = out;
  return v;
}

std::string Lexer::parse_name_body() {
  ++pos_;  // consume '/'
  std::string out;
  while (!eof() && !is_ws(peek()) && !is_delim(peek())) {
    char c = data_[pos_++];
    if (c == '#' && pos_ + 1 < data_.size()) {
      auto hex = [](char h) -> int {
        if (h >= '0' && h <= '9') return h - '0';
        if (h >= 'a' && h <= 'f') return h - 'a' + 10;
        if (h >= 'A' && h <= 'F') return h - 'A' + 10;
        return -1;
      };
      const int a = hex(data_[pos_]), b = hex(data_[pos_ + 1]);
      if (a >= 0 && b >= 0) {
        out += static_cast<char>((a << 4) | b);
        pos_ += 2;
        continue;
      }
    }
    out += c;
  }
  return out;
}

std::optional<PdfValue> Lexer::parse_value(int depth) {
  if (depth > 64) return std::nullopt;
  skip_ws();
  if (eof()) return std::nullopt;
  const unsigned char c = peek();

  if (c == '(') return parse_literal_string();
  if (c == '/') {
    PdfValue v;
    v.v = parse_name_body();
    v.is_name = true;
    return v;
  }
  if (c == '[') {
    ++pos_;
    PdfArray arr;
    while (true) {
      skip_ws();
      if (eof()) return std::nullopt;
      if (peek() == ']') {
        ++pos_;
        break;
      }
      auto elem = parse_value(depth + 1);
      if (!elem) return std::nullopt;
      arr.push_back(std::move(*elem));
    }
    PdfValue v;
    v.v = std::move(arr);
    return v;
  }
  if (c == '<') {
    if (pos_ + 1 < data_.size() && data_[pos_ + 1] == '<') {
      pos_ += 2;
      PdfDict dict;
      while (true) {
        skip_ws();
        if (eof()) return std::nullopt;
        if (peek() == '>') {
          if (pos_ + 1 < data_.size() && data_[pos_ + 1] == '>') {
            pos_ += 2;
            break;
          }
          return std::nullopt;
        }
        if (peek() != '/') return std::nullopt;
        const std::string key = parse_name_body();
        auto val = parse_value(depth + 1);
        if (!val) return std::nullopt;
        dict[key] = std::move(*val);
      }
      PdfValue v;
      v.v = std::move(dict);
      return v;
    }
    return parse_hex_string();
  }
  if (std::isdigit(c) || c == '+' || c == '-' || c == '.') {
    const std::size_t start = pos_;
    std::string num;
    while (!eof() && (std::isdigit(peek()) || peek() == '+' || peek() == '-' || peek() == '.'))
      num += data_[pos_++];
    // Lookahead for an indirect reference: <num> <gen> R
    if (!num.empty() && num.find('.') == std::string::npos && num[0] != '-') {
      const std::size_t after_num = pos_;
      skip_ws();
      std::string gen;
      while (!eof() && std::isdigit(peek())) gen += data_[pos_++];
      if (!gen.empty()) {
        const std::size_t after_gen = pos_;
        skip_ws();
        if (!eof() && peek() == 'R' &&
            (pos_ + 1 >= data_.size() || is_ws(data_[pos_ + 1]) ||
             is_delim(static_cast<unsigned char>(data_[pos_ + 1])))) {
          ++pos_;
          PdfValue v;
          v.v = PdfRef{std::atoi(num.c_str()), std::atoi(gen.c_str())};
          return v;
        }
        pos_ = after_gen;
      }
      pos_ = after_num;
    }
    if (num.empty() || num == "+" || num == "-" || num == ".") {
      pos_ = start;
      return std::nullopt;
    }
    PdfValue v;
    v.v = std::atof(num.c_str());
    return v;
  }
  // Keywords
  const std::string kw = keyword();
  if (kw == "true") {
    PdfValue v;
    v.v = true;
    return v;
  }
  if (kw == "false") {
    PdfValue v;
    v.v = false;
    return v;
  }
  if (kw == "null") {
    PdfValue v;
    return v;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Document: object directory built by scanning for "N G obj" headers, which
// survives damaged or absent xref tables.
// ---------------------------------------------------------------------------

class Document {
 public:
  explicit Document(std::string data) : data_(std::move(data)) {}

  Result<void> open();
  Result<PdfSummary> summarize();

 private:
  const PdfValue* object(int num);
  PdfValue resolve(const PdfValue& v);
  std::optional<double> number_of(const PdfValue& v);
  Result<void> walk_pages(const PdfValue& node_ref, PdfDict inherited, int depth,
                          std::vector<PdfDict>& leaves);
  std::string decode_stream(const PdfStream& stream);
  void extract_text(const std::string& content, std::string& out);

  std::string data_;
  std::map<int, std::size_t> offsets_;         // object number -> offset of header
  std::map<int, PdfValue> cache_;
  std::set<int> in_progress_;
  PdfDict trailer_;
};

Result<void> Document::open() {
  const std::size_t header = data_.find("%PDF-");
  if (header == std::string::npos || header > 1024) return Err("not a PDF (missing %PDF header)");

  // Directory scan: find every "N G obj"; later definitions win.
  std::size_t pos = 0;
  while ((pos = data_.find("obj", pos)) != std::string::npos) {
    const std::size_t kw = pos;
    pos += 3;
    if (kw + 3 < data_.size() && !is_ws(static_cast<unsigned char>(data_[kw + 3])) &&
        !is_delim(static_cast<unsigned char>(data_[kw + 3])))
      continue;
    // Walk back: ws, generation digits, ws, object digits.
    std::size_t p = kw;
    auto back_ws = [&] {
      std::size_t n = 0;
      while (p > 0 && is_ws(static_cast<unsigned char>(data_[p - 1]))) {
        --p;
        ++n;
      }
      return n;
    };
    auto back_digits = [&] {
      std::size_t start = p;
      while (p > 0 && std::isdigit(static_cast<unsigned char>(data_[p - 1]))) --p;
      return start - p;
    };
    if (back_ws() == 0) continue;
    if (back_digits() == 0) continue;
    const std::size_t gen_at = p;
    (void)gen_at;
    if (back_ws() == 0) continue;
    if (back_digits() == 0) continue;
    const int num = std::atoi(data_.c_str() + p);
    offsets_[num] = kw + 3;
  }
  if (offsets_.empty()) return Err("damaged PDF: no objects found");

  // Collect trailer dictionaries (any of them may carry /Root, /Encrypt).
  pos = 0;
  while ((pos = data_.find("trailer", pos)) != std::string::npos) {
    Lexer lex(data_, pos + 7);
    if (auto v = lex.parse_value(); v && v->is_dict()) {
      for (const auto& [k, val] : v->dict()) trailer_[k] = val;
    }
    pos += 7;
  }
  if (trailer_.count("Encrypt")) return Err("encrypted PDF is not supported");
  return {};
}

const PdfValue* Document::object(int num) {
  if (auto it = cache_.find(num); it != cache_.end()) return &it->second;
  auto off = offsets_.find(num);
  if (off == offsets_.end()) return nullptr;
  if (in_progress_.count(num)) return nullptr;  // reference cycle
  in_progress_.insert(num);

  Lexer lex(data_, off->second);
  auto value = lex.parse_value();
  PdfValue result;
  if (value) result = std::move(*value);

  // A stream may follow the dictionary.
  if (result.is_dict()) {
    Lexer probe(data_, lex.pos());
    const std::size_t before = probe.pos();
    if (probe.keyword() == "stream") {
      std::size_t data_start = probe.pos();
      if (data_start < data_.size() && data_[data_start] == '\r') ++data_start;
      if (data_start < data_.size() && data_[data_start] == '\n') ++data_start;
      std::size_t length = 0;
      bool have_length = false;
      if (auto it = result.dict().find("Length"); it != result.dict().end()) {
        PdfValue len = resolve(it->second);
        if (len.is_number() && len.number() >= 0) {
          length = static_cast<std::size_t>(len.number());
          have_length = data_start + length <= data_.size();
        }
      }
      if (!have_length) {
        const std::size_t end = data_.find("endstream", data_start);
        length = end == std::string::npos ? 0 : end - data_start;
      }
      auto stream = std::make_shared<PdfStream>();
      stream->dict = result.dict();
      stream->data = data_.substr(data_start, length);
      result.v = std::move(stream);
    } else {
      (void)before;
    }
  }

  in_progress_.erase(num);
  auto [it, _] = cache_.emplace(num, std::move(result));
  return &it->second;
}

PdfValue Document::resolve(const PdfValue& v) {
  if (!v.is_ref()) return v;
  const PdfValue* target = object(v.ref().num);
  if (!target) return PdfValue{};
  if (target->is_ref()) return PdfValue{};  // refuse ref-to-ref chains
  return *target;
}

std::optional<double> Document::number_of(const PdfValue& v) {
  const PdfValue r = resolve(v);
  if (r.is_number()) return r.number();
  return std::nullopt;
}

Result<void> Document::walk_pages(const PdfValue& node_ref, PdfDict inherited, int depth,
                                  std::vector<PdfDict>& leaves) {
  if (depth > 64) return Err("damaged PDF: page tree too deep");
  const PdfValue node = resolve(node_ref);
  if (!node.is_dict() && !node.is_stream())
    return Err("damaged PDF: unresolvable page tree node");
  const PdfDict& dict = node.is_stream() ? node.stream().dict : node.dict();

  PdfDict attrs = inherited;
  if (auto it = dict.find("MediaBox"); it != dict.end()) attrs["MediaBox"] = it->second;

  std::string type;
  if (auto it = dict.find("Type"); it != dict.end()) {
    const PdfValue t = resolve(it->second);
    if (t.is_name_v()) type = t.str();
  }

  const bool has_kids = dict.count("Kids") > 0;
  if (type == "Page" || (type.empty() && !has_kids && dict.count("Contents"))) {
    PdfDict leaf = attrs;
    for (const auto& [k, v] : dict) leaf[k] = v;
    leaves.push_back(std::move(leaf));
    return {};
  }
  if (!has_kids) return {};  // ignore odd intermediate nodes
  const PdfValue kids = resolve(dict.at("Kids"));
  if (!kids.is_array()) return Err("damaged PDF: Kids is not an array");
  for (const auto& kid : kids.array()) {
    if (auto walked = walk_pages(kid, attrs, depth + 1, leaves); !walked) return walked;
  }
  return {};
}

std::string inflate_bytes(const std::string& in) {
  z_stream zs;
  std::memset(&zs, 0, sizeof(zs));
  if (inflateInit(&zs) != Z_OK) return {};
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
  zs.avail_in = static_cast<uInt>(in.size());
  std::string out;
  char buf[16384];
  int rc = Z_OK;
  do {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof(buf);
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) break;
    out.append(buf, sizeof(buf) - zs.avail_out);
  } while (rc != Z_STREAM_END && zs.avail_in > 0);
  inflateEnd(&zs);
  return out;
}

std::string ascii85_decode(const std::string& in) {
  std::string out;
  out.reserve(in.size() * 4 / 5);
  std::uint32_t group = 0;
  int count = 0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const char c = in[i];
    if (is_ws(static_cast<unsigned char>(c))) continue;
    if (c == '~') break;  // "~>" terminator
    if (c == 'z' && count == 0) {
      out.append(4, '\0');
      continue;
    }
    if (c < '!' || c > 'u') continue;
    group = group * 85 + static_cast<std::uint32_t>(c - '!');
    if (++count == 5) {
      for (int k = 3; k >= 0; --k) out += static_cast<char>((group >> (8 * k)) & 0xff);
      group = 0;
      count = 0;
    }
  }
  if (count > 1) {  // partial group: pad with 'u' and keep count-1 bytes
    for (int k = count; k < 5; ++k) group = group * 85 + 84;
    for (int k = 3; k >= 5 - count; --k) out += static_cast<char>((group >> (8 * k)) & 0xff);
  }
  return out;
}

std::string asciihex_decode(const std::string& in) {
  std::string out;
  int hi = -1;
  for (char c : in) {
    if (c == '>') break;
    int nibble = -1;
    if (c >= '0' && c <= '9') nibble = c - '0';
    else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') nibble = c - 'A' + 10;
    else continue;
    if (hi < 0) hi = nibble;
    else {
      out += static_cast<char>((hi << 4) | nibble);
      hi = -1;
    }
  }
  if (hi >= 0) out += static_cast<char>(hi << 4);
  return out;
}

std::string Document::decode_stream(const PdfStream& stream) {
  std::vector<std::string> filters;
  if (auto it = stream.dict.find("Filter"); it != stream.dict.end()) {
    const PdfValue f = resolve(it->second);
    if (f.is_name_v()) {
      filters.push_back(f.str());
    } else if (f.is_array()) {
      for (const auto& e : f.array()) {
        const PdfValue name = resolve(e);
        if (!name.is_name_v()) return {};
        filters.push_back(name.str());
      }
    }
  }
  std::string data = stream.data;
  for (const auto& filter : filters) {
    if (filter == "FlateDecode" || filter == "Fl") data = inflate_bytes(data);
    else if (filter == "ASCII85Decode" || filter == "A85") data = ascii85_decode(data);
    else if (filter == "ASCIIHexDecode" || filter == "AHx") data = asciihex_decode(data);
    else return {};  // unsupported filter; skip this stream's text
    if (data.empty()) return {};
  }
  return data;
}

void Document::extract_text(const std::string& content, std::string& out) {
  Lexer lex(content, 0);
  std::vector<PdfValue> stack;
  auto emit = [&out](const std::string& bytes) {
    if (bytes.empty()) return;
    out += bytes;
  };
  while (!lex.eof()) {
    lex.skip_ws();
    if (lex.eof()) break;
    const unsigned char c = lex.peek();
    if (c == '(' || c == '<' || c == '[' || c == '/' || std::isdigit(c) || c == '+' ||
        c == '-' || c == '.') {
      auto v = lex.parse_value();
      if (!v) break;
      stack.push_back(std::move(*v));
      if (stack.size() > 64) stack.erase(stack.begin());
      continue;
    }
    const std::string op = lex.keyword();
    if (op.empty()) break;
    if (op == "Tj" || op == "'" || op == "\"") {
      if (!stack.empty() && stack.back().is_string()) emit(stack.back().str());
      if (op != "Tj") out += '\n';
    } else if (op == "TJ") {
      if (!stack.empty() && stack.back().is_array()) {
        for (const auto& e : stack.back().array()) {
          if (e.is_string()) emit(e.str());
        }
      }
    } else if (op == "Td" || op == "TD" || op == "T*" || op == "ET") {
      if (!out.empty() && out.back() != '\n') out += '\n';
    }
    stack.clear();
  }
}

Result<PdfSummary> Document::summarize() {
  // Locate the catalog: trailer /Root first, full object sweep as fallback.
  PdfValue catalog;
  if (auto it = trailer_.find("Root"); it != trailer_.end()) {
    catalog = resolve(it->second);
  }
  if (!catalog.is_dict()) {
    for (const auto& [num, off] : offsets_) {
      (void)off;
      const PdfValue* obj = object(num);
      if (obj && obj->is_dict()) {
        if (auto it = obj->dict().find("Type"); it != obj->dict().end()) {
          const PdfValue t = resolve(it->second);
          if (t.is_name_v() && t.str() == "Catalog") {
            catalog = *obj;
            break;
          }
        }
      }
    }
  }
  if (!catalog.is_dict()) return Err("damaged PDF: no document catalog");
  auto pages_it = catalog.dict().find("Pages");
  if (pages_it == catalog.dict().end()) return Err("damaged PDF: catalog has no page tree");

  std::vector<PdfDict> leaves;
  if (auto walked = walk_pages(pages_it->second, {}, 0, leaves); !walked) return walked.error();
  if (leaves.empty()) return Err("PDF has no pages");

  PdfSummary summary;
  summary.page_count = static_cast<int>(leaves.size());

  // First page media box.
  if (auto it = leaves.front().find("MediaBox"); it != leaves.front().end()) {
    const PdfValue box = resolve(it->second);
    if (box.is_array() && box.array().size() == 4) {
      double coords[4] = {0, 0, 0, 0};
      bool ok = true;
      for (int i = 0; i < 4; ++i) {
        if (auto n = number_of(box.array()[static_cast<std::size_t>(i)])) coords[i] = *n;
        else ok = false;
      }
      if (ok) {
        summary.first_page_width_pt = std::abs(coords[2] - coords[0]);
        summary.first_page_height_pt = std::abs(coords[3] - coords[1]);
      }
    }
  }
  if (summary.first_page_width_pt <= 0 || summary.first_page_height_pt <= 0)
    return Err("damaged PDF: first page has no usable MediaBox");

  // Text across all pages, in page order.
  std::string raw;
  for (const auto& leaf : leaves) {
    auto it = leaf.find("Contents");
    if (it == leaf.end()) continue;
    const PdfValue contents = resolve(it->second);
    std::vector<PdfValue> streams;
    if (contents.is_stream()) {
      streams.push_back(contents);
    } else if (contents.is_array()) {
      for (const auto& e : contents.array()) {
        const PdfValue s = resolve(e);
        if (s.is_stream()) streams.push_back(s);
      }
    }
    for (const auto& s : streams) {
      const std::string decoded = decode_stream(s.stream());
      if (!decoded.empty()) extract_text(decoded, raw);
    }
    if (!raw.empty() && raw.back() != '\n') raw += '\n';
  }

  // The text layer carries UTF-8; scrub anything that does not decode.
  std::string clean;
  clean.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    const unsigned char b = static_cast<unsigned char>(raw[i]);
    int len = 1;
    if (b >= 0xc2 && b <= 0xdf) len = 2;
    else if (b >= 0xe0 && b <= 0xef) len = 3;
    else if (b >= 0xf0 && b <= 0xf4) len = 4;
    else if (b >= 0x80) {
      clean += ' ';
      ++i;
      continue;
    }
    if (i + static_cast<std::size_t>(len) > raw.size()) {
      clean += ' ';
      ++i;
      continue;
    }
    bool valid = true;
    for (int k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(raw[i + static_cast<std::size_t>(k)]) & 0xc0) != 0x80)
        valid = false;
    }
    if (valid) {
      clean.append(raw, i, static_cast<std::size_t>(len));
      i += static_cast<std::size_t>(len);
    } else {
      clean += ' ';
      ++i;
    }
  }
  summary.text = std::move(clean);
  return summary;
}

}  // namespace

Result<PdfSummary> summarize_pdf(const std::vector<std::uint8_t>& bytes) {
  Document doc(std::string(bytes.begin(), bytes.end()));
  if (auto opened = doc.open(); !opened) return opened.error();
  return doc.summarize();
}

Result<PdfSummary> summarize_pdf(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return Err("cannot open PDF: " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (bytes.empty()) return Err("empty PDF file: " + path.string());
  return summarize_pdf(bytes);
}

}  // namespace deckhand::verify
