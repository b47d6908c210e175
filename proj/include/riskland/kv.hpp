#pragma once

#include <string>
#include <vector>

namespace riskland {

// Line-oriented key-value text with [section] headers and '#' comments.
// Sections may repeat; entries keep file order.
struct KvEntry {
  std::string section;
  std::string key;
  std::string value;
  int line = 0;
};

std::vector<KvEntry> parse_kv_text(const std::string& text);
std::vector<KvEntry> load_kv_file(const std::string& path);

// Parse helpers; all throw std::invalid_argument naming the key on bad input.
double kv_double(const KvEntry& e);
long kv_long(const KvEntry& e);
bool kv_bool(const KvEntry& e);
std::vector<double> kv_doubles(const KvEntry& e);  // whitespace-separated

}  // namespace riskland
