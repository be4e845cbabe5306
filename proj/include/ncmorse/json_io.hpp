#pragma once

// Readers and writers for the on-disk formats and the JSON reports. Readers
// throw invalid_input_error with a path to the offending field.

#include "ncmorse/cell_complex.hpp"
#include "ncmorse/chain_lattice.hpp"
#include "ncmorse/homology.hpp"
#include "ncmorse/morse.hpp"
#include "ncmorse/nccw.hpp"
#include "ncmorse/poset.hpp"

#include <json.hpp>

#include <filesystem>

namespace ncmorse {

using json = nlohmann::json;

json load_json_file(const std::filesystem::path& path);

CellComplex complex_from_json(const json& j);
json to_json(const CellComplex& complex);

FinitePoset poset_from_json(const json& j);
json to_json(const FinitePoset& poset);
/// Either a bare array of ids or {"members": [...]}.
IdSet subset_from_json(const json& j);

MorseFunction morse_function_from_json(const json& j);
json to_json(const MorseFunction& f);

NCCWDescriptor descriptor_from_json(const json& j);
json to_json(const NCCWDescriptor& d);

json to_json(const ComplexValidation& report);
json to_json(const ChainLattice& lattice);
json to_json(const MorseValidity& report);
json to_json(const CriticalReport& report);
json to_json(const MorseMatching& matching);
json to_json(const HomologyProfile& profile);
json to_json(const CollapseReport& report);
json to_json(const DescriptorValidation& report);

json integer_to_json(const Integer& value);

}  // namespace ncmorse
