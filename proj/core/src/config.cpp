#include "kaonbell/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "kaonbell/errors.hpp"

namespace kaonbell {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError("config: cannot parse value '" + std::string(value) + "' for key '" +
                      std::string(key) + "'");
  }
  return out;
}

}  // namespace

DecayParams parse_decay_params(std::string_view text) {
  DecayParams params;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!seen.emplace(key).second) {
      throw DomainError("config: duplicate key '" + std::string(key) + "'");
    }

    if (key == "gamma_s") {
      params.gamma_s = parse_number(key, value);
    } else if (key == "gamma_l") {
      params.gamma_l = parse_number(key, value);
    } else if (key == "delta_m") {
      params.delta_m = parse_number(key, value);
    } else if (key == "velocity") {
      params.velocity = parse_number(key, value);
    } else {
      throw DomainError("config: unknown key '" + std::string(key) + "'");
    }
  }
  params.validate();
  return params;
}

DecayParams load_decay_params(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("config: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_decay_params(buf.str());
}

}  // namespace kaonbell
