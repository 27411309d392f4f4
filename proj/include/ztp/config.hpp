#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ztp/core.hpp"
#include "ztp/result.hpp"

namespace ztp::config {

enum class ConfigFormat { Text, Html };

inline std::string_view format_name(ConfigFormat f) {
  return f == ConfigFormat::Text ? "text" : "html";
}

// Ordered key/value document. Keys are unique; setting an existing key
// overwrites its value in place so document order is stable.
class ConfigDocument {
 public:
  ConfigFormat format = ConfigFormat::Text;

  void set(std::string key, std::string value) {
    for (auto& e : entries_) {
      if (e.first == key) {
        e.second = std::move(value);
        return;
      }
    }
    entries_.emplace_back(std::move(key), std::move(value));
  }

  std::optional<std::string> get(std::string_view key) const {
    for (const auto& e : entries_) {
      if (e.first == key) return e.second;
    }
    return std::nullopt;
  }

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  bool operator==(const ConfigDocument& o) const { return entries_ == o.entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

namespace detail {

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline std::string_view trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && is_ascii_space(s[b])) ++b;
  while (e > b && is_ascii_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

inline bool valid_utf8(std::string_view s) {
  size_t i = 0;
  while (i < s.size()) {
    const uint8_t c = static_cast<uint8_t>(s[i]);
    size_t len;
    uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (size_t k = 1; k < len; ++k) {
      const uint8_t cc = static_cast<uint8_t>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Reject overlong encodings, surrogates and out-of-range code points.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000)) return false;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

}  // namespace detail

// A payload whose first non-whitespace byte is '<' is treated as HTML;
// anything else is the flat text format.
inline Result<ConfigFormat> detect_format(std::string_view payload) {
  for (char c : payload) {
    if (detail::is_ascii_space(c)) continue;
    return c == '<' ? ConfigFormat::Html : ConfigFormat::Text;
  }
  return Result<ConfigFormat>::failure("empty config");
}

// Flat `key=value` lines. Blank lines and '#' comments are skipped, keys and
// values are trimmed, a repeated key keeps its last value.
inline Result<ConfigDocument> parse_text(std::string_view payload) {
  if (!detail::valid_utf8(payload)) return Result<ConfigDocument>::failure("payload is not valid UTF-8");
  ConfigDocument doc;
  doc.format = ConfigFormat::Text;
  size_t pos = 0;
  int line_no = 0;
  while (pos < payload.size()) {
    const size_t nl = payload.find('\n', pos);
    const size_t end = (nl == std::string_view::npos) ? payload.size() : nl;
    std::string_view line = payload.substr(pos, end - pos);
    pos = (nl == std::string_view::npos) ? payload.size() : nl + 1;
    ++line_no;
    std::string_view stripped = detail::trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const size_t eq = stripped.find('=');
    if (eq == std::string_view::npos) {
      return Result<ConfigDocument>::failure("line " + std::to_string(line_no) + ": missing '='");
    }
    std::string_view key = detail::trim(stripped.substr(0, eq));
    std::string_view value = detail::trim(stripped.substr(eq + 1));
    if (key.empty()) {
      return Result<ConfigDocument>::failure("line " + std::to_string(line_no) + ": empty key");
    }
    doc.set(std::string(key), std::string(value));
  }
  return doc;
}

namespace detail {

struct Attr {
  std::string name;
  std::string value;
  bool has_value = false;
};

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Parses the inside of one tag (after '<', before '>') into name + attributes.
// Returns false on malformed attribute syntax.
inline bool parse_tag(std::string_view tag, std::string& name, std::vector<Attr>& attrs) {
  size_t i = 0;
  while (i < tag.size() && !is_ascii_space(tag[i]) && tag[i] != '/') ++i;
  name = to_lower(tag.substr(0, i));
  attrs.clear();
  while (i < tag.size()) {
    while (i < tag.size() && (is_ascii_space(tag[i]) || tag[i] == '/')) ++i;
    if (i >= tag.size()) break;
    size_t start = i;
    while (i < tag.size() && !is_ascii_space(tag[i]) && tag[i] != '=' && tag[i] != '/') ++i;
    Attr a;
    a.name = to_lower(tag.substr(start, i - start));
    while (i < tag.size() && is_ascii_space(tag[i])) ++i;
    if (i < tag.size() && tag[i] == '=') {
      ++i;
      while (i < tag.size() && is_ascii_space(tag[i])) ++i;
      if (i >= tag.size()) return false;
      if (tag[i] == '"' || tag[i] == '\'') {
        const char quote = tag[i++];
        size_t vstart = i;
        while (i < tag.size() && tag[i] != quote) ++i;
        if (i >= tag.size()) return false;  // unterminated quote
        a.value = std::string(tag.substr(vstart, i - vstart));
        ++i;
      } else {
        size_t vstart = i;
        while (i < tag.size() && !is_ascii_space(tag[i])) ++i;
        a.value = std::string(tag.substr(vstart, i - vstart));
      }
      a.has_value = true;
    }
    if (!a.name.empty()) attrs.push_back(std::move(a));
  }
  return true;
}

}  // namespace detail

// Single-pass scan for `<input name=... value=...>` elements. The payload is
// machine-generated form markup, not arbitrary HTML; entity references are
// kept verbatim.
inline Result<ConfigDocument> parse_html(std::string_view payload) {
  if (!detail::valid_utf8(payload)) return Result<ConfigDocument>::failure("payload is not valid UTF-8");
  ConfigDocument doc;
  doc.format = ConfigFormat::Html;
  size_t pos = 0;
  bool found_any = false;
  while (true) {
    const size_t open = payload.find('<', pos);
    if (open == std::string_view::npos) break;
    const size_t close = payload.find('>', open + 1);
    if (close == std::string_view::npos) {
      return Result<ConfigDocument>::failure("unterminated tag at byte " + std::to_string(open));
    }
    std::string_view tag = payload.substr(open + 1, close - open - 1);
    pos = close + 1;
    std::string name;
    std::vector<detail::Attr> attrs;
    if (!detail::parse_tag(tag, name, attrs)) {
      return Result<ConfigDocument>::failure("malformed tag at byte " + std::to_string(open));
    }
    if (name != "input") continue;
    std::optional<std::string> field;
    std::optional<std::string> value;
    for (const detail::Attr& a : attrs) {
      if (a.name == "name" && a.has_value) field = a.value;
      if (a.name == "value" && a.has_value) value = a.value;
    }
    if (field && value && !field->empty()) {
      doc.set(*field, *value);
      found_any = true;
    }
  }
  if (!found_any) return Result<ConfigDocument>::failure("no config fields");
  return doc;
}

inline Result<ConfigDocument> parse_config(std::string_view payload) {
  Result<ConfigFormat> fmt = detect_format(payload);
  if (!fmt.ok()) return Result<ConfigDocument>::failure(fmt.error());
  return fmt.value() == ConfigFormat::Html ? parse_html(payload) : parse_text(payload);
}

// Canonical `key=value\n` per entry, in stored order.
inline std::string serialize_text(const ConfigDocument& doc) {
  std::string out;
  for (const auto& [key, value] : doc.entries()) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  }
  return out;
}

// Device-side settings the provisioning flows mutate. `ssid`/`passphrase`
// are reserved keys that also update the network credentials.
struct DeviceSettings {
  Credentials credentials;
  ConfigDocument values;
};

inline DeviceSettings apply_config(DeviceSettings current, const ConfigDocument& doc) {
  for (const auto& [key, value] : doc.entries()) {
    current.values.set(key, value);
    if (key == "ssid") current.credentials.ssid = value;
    if (key == "passphrase") current.credentials.passphrase = value;
  }
  return current;
}

}  // namespace ztp::config
