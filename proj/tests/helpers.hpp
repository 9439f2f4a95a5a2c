#ifndef HOMCX_TESTS_HELPERS_HPP
#define HOMCX_TESTS_HELPERS_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "homcx/hom.hpp"

namespace homcx::test {

inline std::string data_path(const std::string& name) {
#ifdef HOMCX_DATA_DIR
  return std::string(HOMCX_DATA_DIR) + "/" + name;
#else
  return "data/" + name;
#endif
}

inline nlohmann::json load_json(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("cannot open " + name);
  return nlohmann::json::parse(in);
}

inline std::vector<int> cells_per_dim(const HomComplex& h) {
  std::vector<int> out;
  for (int d = 0; d <= h.dim(); ++d) out.push_back(h.cells_in_dim(d));
  return out;
}

}  // namespace homcx::test

#endif
