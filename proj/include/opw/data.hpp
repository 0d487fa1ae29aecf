#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "opw/poset.hpp"

#ifndef OPW_DATA_DIR
#define OPW_DATA_DIR "data"
#endif

namespace opw {

/// Directory holding the checked-in catalogs: the OPW_DATA_DIR environment
/// variable when set, otherwise the compile-time default.
inline std::string data_dir() {
  const char* env = std::getenv("OPW_DATA_DIR");
  if (env != nullptr && *env != '\0') return env;
  return OPW_DATA_DIR;
}

inline std::string data_file(const std::string& name) {
  return data_dir() + "/" + name;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Err::BadInput, "cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace opw
