#include "nichols/result_cache.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nichols {

using nlohmann::json;

std::string canonical_scalar(const CyclotomicNumber& x) {
  CyclotomicNumber m = x.minimal_conductor_form();
  if (m.is_rational()) return m.rational_value().str();
  std::ostringstream os;
  os << "cyc(" << m.conductor() << ";";
  for (std::size_t i = 0; i < m.coeffs().size(); ++i)
    os << (i ? "," : "") << m.coeffs()[i].str();
  os << ")";
  return os.str();
}

std::string canonical_point(const ParamPoint& pt) {
  return "a=" + canonical_scalar(pt.a) + ",b=" + canonical_scalar(pt.b) +
         ",e=" + canonical_scalar(pt.e);
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string ResultCache::file_name(const std::string& key) {
  // FNV-1a, 64 bit: stable across runs and platforms.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::string op = key.substr(0, key.find('|'));
  std::ostringstream os;
  os << op << '-' << std::hex << h << ".json";
  return os.str();
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
  std::filesystem::path path = dir_ / file_name(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    json doc = json::parse(buf.str());
    if (doc.at("key").get<std::string>() != key) return std::nullopt;
    return doc.at("payload").get<std::string>();
  } catch (const json::exception&) {
    return std::nullopt;  // unreadable entry: treat as a miss, recompute
  }
}

void ResultCache::store(const std::string& key,
                        const std::string& payload) const {
  json doc = {{"key", key}, {"payload", payload}};
  std::filesystem::path path = dir_ / file_name(key);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace nichols
