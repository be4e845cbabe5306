#include "ncmorse/errors.hpp"

namespace ncmorse {

void throw_invalid_input(const std::string& what) { throw invalid_input_error(what); }

}  // namespace ncmorse
