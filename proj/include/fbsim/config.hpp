#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>

#include "fbsim/error.hpp"
#include "fbsim/fbs.hpp"

namespace fbsim {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line) {
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError("invalid number '" + std::string(text) + "'", line);
  }
  return value;
}

}  // namespace detail

/// Applies `key=value` lines on top of `base`. Keys: epsilon, tolerance, n,
/// lambda, combiner (linear|saturation), k1, k2, rounds. `#` starts a comment.
inline FbsConfig load_fbs_config(std::istream& in, FbsConfig base = {}) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", line_no);
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    if (key == "epsilon") {
      base.ppr.epsilon = detail::parse_number<double>(value, line_no);
    } else if (key == "tolerance") {
      base.ppr.tolerance = detail::parse_number<double>(value, line_no);
    } else if (key == "n") {
      base.n = detail::parse_number<std::size_t>(value, line_no);
    } else if (key == "lambda") {
      base.combiner.lambda = detail::parse_number<double>(value, line_no);
    } else if (key == "k1") {
      base.combiner.k1 = detail::parse_number<double>(value, line_no);
    } else if (key == "k2") {
      base.combiner.k2 = detail::parse_number<double>(value, line_no);
    } else if (key == "rounds") {
      base.rounds = detail::parse_number<std::size_t>(value, line_no);
    } else if (key == "combiner") {
      if (value == "linear") {
        base.combiner.kind = CombinerKind::kLinear;
      } else if (value == "saturation") {
        base.combiner.kind = CombinerKind::kSaturation;
      } else {
        throw ParseError("combiner must be 'linear' or 'saturation'", line_no);
      }
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no);
    }
  }
  try {
    base.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), line_no);
  }
  return base;
}

inline FbsConfig load_fbs_config_file(const std::string& path, FbsConfig base = {}) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return load_fbs_config(in, base);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), e.line(), path);
  }
}

}  // namespace fbsim
