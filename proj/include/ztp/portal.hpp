#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ztp/config.hpp"
#include "ztp/core.hpp"
#include "ztp/result.hpp"

// The embedded web server side of Soft-AP provisioning: a minimal HTTP/1.1
// codec, the probe-capture redirect, the portal page and its form parser.
// Capture is modeled at the HTTP layer; redirecting every non-portal path is
// observably equivalent to the usual DNS-based trick.

namespace ztp::portal {

struct HttpRequest {
  std::string method;  // GET or POST
  std::string path;    // starts with '/'
  std::vector<std::pair<std::string, std::string>> headers;
  std::string body;

  std::optional<std::string> header(std::string_view name) const {
    for (const auto& [k, v] : headers) {
      if (k == name) return v;
    }
    return std::nullopt;
  }
};

struct HttpResponse {
  int status = 200;  // 200, 302, 400 or 404
  std::vector<std::pair<std::string, std::string>> headers;
  std::string body;

  std::optional<std::string> header(std::string_view name) const {
    for (const auto& [k, v] : headers) {
      if (k == name) return v;
    }
    return std::nullopt;
  }
};

struct PortalPage {
  std::vector<std::pair<std::string, double>> visible_networks;  // (ssid, band_ghz)
  bool has_manual_entry = true;
};

inline std::string_view reason_phrase(int status) {
  switch (status) {
    case 200: return "OK";
    case 302: return "Found";
    case 400: return "Bad Request";
    case 404: return "Not Found";
  }
  return "Unknown";
}

namespace detail {

// Splits "buf" into request/status line + headers + body using CRLF framing.
struct Frame {
  std::string first_line;
  std::vector<std::pair<std::string, std::string>> headers;
  std::string_view rest;  // bytes after the blank line
};

inline Result<Frame> split_frame(std::string_view buf) {
  Frame f;
  const size_t line_end = buf.find("\r\n");
  if (line_end == std::string_view::npos) return Result<Frame>::failure("missing request line terminator");
  f.first_line = std::string(buf.substr(0, line_end));
  size_t pos = line_end + 2;
  while (true) {
    const size_t next = buf.find("\r\n", pos);
    if (next == std::string_view::npos) return Result<Frame>::failure("missing header terminator");
    if (next == pos) {  // blank line
      pos += 2;
      break;
    }
    std::string_view line = buf.substr(pos, next - pos);
    const size_t colon = line.find(':');
    if (colon == std::string_view::npos) return Result<Frame>::failure("malformed header line");
    std::string_view name = line.substr(0, colon);
    std::string_view value = line.substr(colon + 1);
    while (!value.empty() && value.front() == ' ') value.remove_prefix(1);
    f.headers.emplace_back(std::string(name), std::string(value));
    pos = next + 2;
  }
  f.rest = buf.substr(pos);
  return f;
}

}  // namespace detail

inline Result<HttpRequest> parse_request(std::string_view bytes) {
  Result<detail::Frame> frame = detail::split_frame(bytes);
  if (!frame.ok()) return Result<HttpRequest>::failure(frame.error());
  const std::string& line = frame.value().first_line;

  const size_t sp1 = line.find(' ');
  const size_t sp2 = (sp1 == std::string::npos) ? std::string::npos : line.find(' ', sp1 + 1);
  if (sp1 == std::string::npos || sp2 == std::string::npos) {
    return Result<HttpRequest>::failure("malformed request line");
  }
  HttpRequest req;
  req.method = line.substr(0, sp1);
  req.path = line.substr(sp1 + 1, sp2 - sp1 - 1);
  const std::string version = line.substr(sp2 + 1);
  if (req.method != "GET" && req.method != "POST") {
    return Result<HttpRequest>::failure("unsupported method: " + req.method);
  }
  if (req.path.empty() || req.path.front() != '/') {
    return Result<HttpRequest>::failure("path must start with '/'");
  }
  if (version != "HTTP/1.1" && version != "HTTP/1.0") {
    return Result<HttpRequest>::failure("unsupported HTTP version");
  }
  req.headers = std::move(frame.value().headers);

  std::string_view rest = frame.value().rest;
  const std::optional<std::string> cl = req.header("Content-Length");
  if (cl.has_value()) {
    size_t len = 0;
    for (char c : *cl) {
      if (c < '0' || c > '9') return Result<HttpRequest>::failure("invalid Content-Length");
      len = len * 10 + static_cast<size_t>(c - '0');
    }
    if (rest.size() < len) return Result<HttpRequest>::failure("truncated body");
    req.body = std::string(rest.substr(0, len));
  } else if (!rest.empty()) {
    return Result<HttpRequest>::failure("body without Content-Length");
  }
  return req;
}

inline std::string serialize_request(const HttpRequest& req) {
  std::string out = req.method + " " + req.path + " HTTP/1.1\r\n";
  for (const auto& [k, v] : req.headers) {
    out += k;
    out += ": ";
    out += v;
    out += "\r\n";
  }
  out += "\r\n";
  out += req.body;
  return out;
}

inline std::string serialize_response(const HttpResponse& resp) {
  std::string out = "HTTP/1.1 " + std::to_string(resp.status) + " " +
                    std::string(reason_phrase(resp.status)) + "\r\n";
  for (const auto& [k, v] : resp.headers) {
    out += k;
    out += ": ";
    out += v;
    out += "\r\n";
  }
  out += "\r\n";
  out += resp.body;
  return out;
}

inline Result<HttpResponse> parse_response(std::string_view bytes) {
  Result<detail::Frame> frame = detail::split_frame(bytes);
  if (!frame.ok()) return Result<HttpResponse>::failure(frame.error());
  const std::string& line = frame.value().first_line;
  if (line.rfind("HTTP/1.", 0) != 0) return Result<HttpResponse>::failure("malformed status line");
  const size_t sp1 = line.find(' ');
  if (sp1 == std::string::npos || sp1 + 4 > line.size()) {
    return Result<HttpResponse>::failure("malformed status line");
  }
  HttpResponse resp;
  resp.status = 0;
  for (size_t i = sp1 + 1; i < line.size() && line[i] >= '0' && line[i] <= '9'; ++i) {
    resp.status = resp.status * 10 + (line[i] - '0');
  }
  if (resp.status < 100 || resp.status > 599) return Result<HttpResponse>::failure("bad status code");
  resp.headers = std::move(frame.value().headers);
  std::string_view rest = frame.value().rest;
  const std::optional<std::string> cl = resp.header("Content-Length");
  if (cl.has_value()) {
    size_t len = 0;
    for (char c : *cl) {
      if (c < '0' || c > '9') return Result<HttpResponse>::failure("invalid Content-Length");
      len = len * 10 + static_cast<size_t>(c - '0');
    }
    if (rest.size() < len) return Result<HttpResponse>::failure("truncated body");
    resp.body = std::string(rest.substr(0, len));
  } else {
    resp.body = std::string(rest);
  }
  return resp;
}

// Marker for requests the captive portal lets through to the real handlers.
struct PassThrough {};

using ProbeDecision = std::variant<HttpResponse, PassThrough>;

// Everything except the portal page and the form submission endpoint gets
// bounced to the portal, which is what keeps the newly connected user captive.
inline ProbeDecision handle_probe(const HttpRequest& req, std::string_view portal_host) {
  if (req.path == "/portal" || req.path == "/submit") return PassThrough{};
  HttpResponse resp;
  resp.status = 302;
  resp.headers.emplace_back("Location", "http://" + std::string(portal_host) + "/portal");
  resp.headers.emplace_back("Content-Length", "0");
  return resp;
}

inline std::string html_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// The configuration page: one selectable entry per visible network plus
// manual-entry fields for hidden networks. Field names `ssid`, `ssid_manual`
// and `passphrase` are a wire contract with parse_submission.
inline HttpResponse render_portal(const PortalPage& page) {
  std::string body;
  body += "<html><head><title>Device setup</title></head><body>\n";
  body += "<h1>Connect this device to your network</h1>\n";
  body += "<form action=\"/submit\" method=\"post\">\n";
  for (const auto& [ssid, band] : page.visible_networks) {
    const std::string esc = html_escape(ssid);
    body += "<label><input type=\"radio\" name=\"ssid\" value=\"" + esc + "\"> " + esc;
    body += band >= 5.0 ? " (5 GHz)" : " (2.4 GHz)";
    body += "</label><br>\n";
  }
  body += "<label>Hidden network SSID: <input type=\"text\" name=\"ssid_manual\" value=\"\"></label><br>\n";
  body += "<label>Passphrase: <input type=\"password\" name=\"passphrase\" value=\"\"></label><br>\n";
  body += "<input type=\"submit\" value=\"Provision\">\n";
  body += "</form></body></html>\n";

  HttpResponse resp;
  resp.status = 200;
  resp.headers.emplace_back("Content-Type", "text/html; charset=utf-8");
  resp.headers.emplace_back("Content-Length", std::to_string(body.size()));
  resp.body = std::move(body);
  return resp;
}

inline std::string url_encode(std::string_view s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
        c == '-' || c == '_' || c == '.' || c == '~') {
      out.push_back(ch);
    } else if (c == ' ') {
      out.push_back('+');
    } else {
      out.push_back('%');
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 0x0F]);
    }
  }
  return out;
}

inline Result<std::string> url_decode(std::string_view s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '+') {
      out.push_back(' ');
    } else if (s[i] == '%') {
      if (i + 2 >= s.size()) return Result<std::string>::failure("truncated percent escape");
      auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        return -1;
      };
      const int hi = nibble(s[i + 1]);
      const int lo = nibble(s[i + 2]);
      if (hi < 0 || lo < 0) return Result<std::string>::failure("invalid percent escape");
      out.push_back(static_cast<char>((hi << 4) | lo));
      i += 2;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

// Builds the URL-encoded body a browser would send for the portal form.
inline std::string encode_form(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string out;
  for (const auto& [k, v] : fields) {
    if (!out.empty()) out.push_back('&');
    out += url_encode(k);
    out.push_back('=');
    out += url_encode(v);
  }
  return out;
}

// Reads the submitted form. The radio selection wins; the manual field is
// the hidden-network fallback.
inline Result<Credentials> parse_submission(const HttpRequest& req) {
  if (req.method != "POST" || req.path != "/submit") {
    return Result<Credentials>::failure("not a form submission");
  }
  std::string ssid;
  std::string ssid_manual;
  std::string passphrase;
  std::string_view body = req.body;
  size_t pos = 0;
  while (pos < body.size()) {
    const size_t amp = body.find('&', pos);
    const size_t end = (amp == std::string_view::npos) ? body.size() : amp;
    std::string_view pair = body.substr(pos, end - pos);
    pos = (amp == std::string_view::npos) ? body.size() : amp + 1;
    const size_t eq = pair.find('=');
    std::string_view raw_key = (eq == std::string_view::npos) ? pair : pair.substr(0, eq);
    std::string_view raw_val = (eq == std::string_view::npos) ? std::string_view{} : pair.substr(eq + 1);
    Result<std::string> key = url_decode(raw_key);
    Result<std::string> val = url_decode(raw_val);
    if (!key.ok()) return Result<Credentials>::failure(key.error());
    if (!val.ok()) return Result<Credentials>::failure(val.error());
    if (key.value() == "ssid") ssid = val.value();
    if (key.value() == "ssid_manual") ssid_manual = val.value();
    if (key.value() == "passphrase") passphrase = val.value();
    if (amp == body.size()) break;
    pos = amp + 1;
  }
  Credentials c;
  c.ssid = !ssid.empty() ? ssid : ssid_manual;
  c.passphrase = passphrase;
  if (c.ssid.empty()) return Result<Credentials>::failure("no network chosen");
  return c;
}

}  // namespace ztp::portal
