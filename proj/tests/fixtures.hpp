#pragma once

#include "ncmorse/json_io.hpp"

#include <string>

inline std::string fixture_path(const std::string& name) { return std::string(NCMORSE_FIXTURES) + "/" + name; }

inline ncmorse::CellComplex load_fixture(const std::string& name) {
  return ncmorse::complex_from_json(ncmorse::load_json_file(fixture_path(name + ".json")));
}

inline ncmorse::MorseFunction load_function(const std::string& name) {
  return ncmorse::morse_function_from_json(ncmorse::load_json_file(fixture_path(name + ".json")));
}
