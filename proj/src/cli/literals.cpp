#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <string>

#include "schreier/cli.hpp"
#include "schreier/errors.hpp"

namespace schreier::cli {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

Natural parse_index(const std::string& token) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw PreconditionError("'" + token + "' is not a positive decimal integer");
  }
  Natural value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw PreconditionError("'" + token + "' is out of range");
  }
  if (value == 0) throw PreconditionError("indices start at 1, got 0");
  return value;
}

double parse_value(const std::string& token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw PreconditionError("'" + token + "' is not a decimal number");
  }
  if (!std::isfinite(value)) throw PreconditionError("'" + token + "' is not finite");
  return value;
}

}  // namespace

FinVec parse_vector_literal(std::string_view text) {
  const std::string compact = strip_spaces(text);
  FinVec out;
  if (compact.empty()) return out;
  std::set<Natural> seen;
  for (const auto& pair : split(compact, ',')) {
    const auto colon = pair.find(':');
    if (colon == std::string::npos) throw PreconditionError("expected index:value, got '" + pair + "'");
    const Natural index = parse_index(pair.substr(0, colon));
    const double value = parse_value(pair.substr(colon + 1));
    if (!seen.insert(index).second) throw PreconditionError("duplicate index " + std::to_string(index));
    out.set(index, value);
  }
  return out;
}

FinSet parse_set_literal(std::string_view text) {
  const std::string compact = strip_spaces(text);
  if (compact.empty()) return FinSet{};
  std::vector<Natural> elements;
  for (const auto& token : split(compact, ',')) elements.push_back(parse_index(token));
  return FinSet(std::move(elements));
}

}  // namespace schreier::cli
