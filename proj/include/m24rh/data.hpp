#pragma once

// Shipped data files (character table, class form data, multiplicity
// fixtures) embedded at build time, with path/environment overrides so data
// fixes do not require recompilation.

#include <array>
#include <string>
#include <vector>

#include "m24rh/m24.hpp"

namespace m24rh::data {

const char* embedded_character_table();
const char* embedded_class_form_data();
const char* embedded_multiplicity_fixtures();

inline constexpr const char* kCharacterTableFile = "m24_character_table.txt";
inline constexpr const char* kClassFormFile = "class_form_data.txt";
inline constexpr const char* kMultiplicityFixtureFile = "multiplicity_fixtures.txt";
inline constexpr const char* kDataDirEnv = "M24RH_DATA_DIR";

// explicit path (if nonempty) > $M24RH_DATA_DIR/<filename> > embedded copy
std::string load_text(const std::string& explicit_path, const char* filename,
                      const char* embedded);

// the embedded table, loaded and validated once
const CharacterTable& builtin_table();

// fixture grid indexed [j-1][chi index], j = 1..19
std::vector<std::array<Int, kNumClasses>> parse_multiplicity_fixtures(const std::string& text);

}  // namespace m24rh::data
