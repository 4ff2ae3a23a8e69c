#pragma once

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orientals/chain.hpp"
#include "orientals/enumeration.hpp"
#include "orientals/json_io.hpp"
#include "orientals/morphism.hpp"

namespace testing_support {

using namespace orientals;

inline std::string fixture_path(const std::string& name) { return std::string(ORIENTALS_FIXTURE_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string fixture_text(const std::string& name) { return read_file(fixture_path(name)); }
inline OrMorphism fixture(const std::string& name) { return parse_morphism(fixture_text(name + ".json")); }

// Builds a chain map from textual images; unlisted basis elements go to 0.
inline ChainMap chain_map(int m, int n, const std::vector<std::pair<std::string, std::string>>& images) {
  std::vector<Chain> out;
  for (VertexMask a = 1; a <= mask::low(m + 1); ++a) out.emplace_back(n, mask::size(a) - 1);
  for (const auto& [basis, image] : images) {
    const Chain b = parse_chain(basis, m);
    if (b.terms().size() != 1) throw std::runtime_error("not a basis element: " + basis);
    const VertexMask a = b.terms()[0].mask;
    out[a - 1] = parse_chain(image, n, mask::size(a) - 1);
  }
  return ChainMap(m, n, std::move(out));
}

inline OrMorphism morphism(int m, int n, const std::vector<std::pair<std::string, std::string>>& images) {
  return validate(chain_map(m, n, images));
}

// Enumerations are shared across tests in one binary.
inline const std::vector<OrMorphism>& all_or(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<OrMorphism>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({m, n});
  if (it == cache.end()) it = cache.emplace(std::make_pair(m, n), enumerate_or(m, n)).first;
  return it->second;
}

// Or(0,n), ..., Or(max_dim,n).
inline std::vector<std::vector<OrMorphism>> graded_or(int n, int max_dim) {
  std::vector<std::vector<OrMorphism>> out;
  for (int m = 0; m <= max_dim; ++m) out.push_back(all_or(m, n));
  return out;
}

}  // namespace testing_support
