#include "simplexquant/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace simplexquant {

namespace {

Distribution make(std::vector<double> values, bool renormalize) {
  try {
    if (renormalize) return Distribution::renormalized(std::move(values));
    return Distribution(std::move(values));
  } catch (const std::invalid_argument& err) {
    // Surface malformed data as a data error, not a usage error.
    throw std::runtime_error(err.what());
  }
}

}  // namespace

Distribution read_distribution(std::istream& in, bool renormalize) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw std::runtime_error("empty distribution input");
  }
  std::vector<double> values;
  if (text[first] == '[') {
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
      throw std::runtime_error(std::string("invalid JSON distribution: ") +
                               err.what());
    }
    if (!parsed.is_array()) {
      throw std::runtime_error("JSON distribution must be an array");
    }
    for (const auto& item : parsed) {
      if (!item.is_number()) {
        throw std::runtime_error("JSON distribution must contain numbers");
      }
      values.push_back(item.get<double>());
    }
  } else {
    std::istringstream tokens(text);
    double value = 0.0;
    while (tokens >> value) values.push_back(value);
    if (!tokens.eof()) {
      throw std::runtime_error("distribution file has a non-numeric token");
    }
  }
  return make(std::move(values), renormalize);
}

Distribution read_distribution_file(const std::string& path,
                                    bool renormalize) {
  if (path == "-") {
    return read_distribution(std::cin, renormalize);
  }
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  return read_distribution(in, renormalize);
}

std::string format_distribution(const Distribution& dist) {
  std::string out;
  char buf[64];
  for (int i = 0; i < dist.m(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", dist[i]);
    if (i) out += ' ';
    out += buf;
  }
  return out;
}

}  // namespace simplexquant
