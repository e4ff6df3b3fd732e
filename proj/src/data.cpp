#include "m24rh/data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace m24rh::data {

std::string load_text(const std::string& explicit_path, const char* filename,
                      const char* embedded) {
    std::string path = explicit_path;
    if (path.empty()) {
        if (const char* dir = std::getenv(kDataDirEnv)) {
            path = std::string(dir) + "/" + filename;
        }
    }
    if (path.empty()) return embedded;
    std::ifstream in(path);
    if (!in) throw DataError("cannot open data file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const CharacterTable& builtin_table() {
    static const CharacterTable table = CharacterTable::load(embedded_character_table());
    return table;
}

std::vector<std::array<Int, kNumClasses>> parse_multiplicity_fixtures(const std::string& text) {
    std::vector<std::array<Int, kNumClasses>> grid;
    std::istringstream in(text);
    std::string line;
    int chi = 0;
    int jmax = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string a, b;
        ls >> a >> b;
        if (a == "chi") {
            chi = std::stoi(b);
            if (chi < 1 || chi > kNumClasses) throw DataError("fixture chi index out of range");
            continue;
        }
        if (chi == 0) throw DataError("fixture row before any chi header");
        int j = std::stoi(a);
        if (j < 1) throw DataError("fixture j out of range");
        if (j > jmax) {
            jmax = j;
            grid.resize(static_cast<size_t>(jmax));
        }
        grid[static_cast<size_t>(j - 1)][static_cast<size_t>(chi - 1)] = Int(b);
    }
    if (grid.empty()) throw DataError("empty multiplicity fixture file");
    return grid;
}

}  // namespace m24rh::data
