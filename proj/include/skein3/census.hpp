#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skein3/parallel.hpp"
#include "skein3/textio.hpp"
#include "skein3/tlink.hpp"

namespace skein3 {

/// One canonical form of the braid-index-3 T-link family with its link data
/// and the equal T-link presentations from the classification.
struct CensusRow {
    CanonicalForm3 canonical;
    std::vector<std::string> tlink_forms;
    int braid_index = 3;
    int components = 1;
    int writhe = 0;
    HalfLaurent jones;
    std::optional<std::pair<int, int>> torus;
};

/// The T-link presentations listed by the classification for one canonical
/// form (primary representative first).
inline std::vector<std::string> classification_tlink_forms(const CanonicalForm3& c) {
    std::vector<std::string> out;
    auto add = [&](const TLink& L) {
        const std::string s = render_tlink(L);
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    const int x = c.x, y = c.y, z = c.z;
    if (x == 0 && y == 0) {
        add(TLink({{3, z}}));
    } else if (y == 0) {
        add(TLink({{2, x}, {3, z}}));
    } else if (x == 1 && y == 1) {
        add(TLink({{3, z + 1}}));
    } else if (y == 1) {
        add(TLink({{2, x - 1}, {3, z + 1}}));
        if (x == 3) add(TLink({{3, z + 2}}));
    } else {
        // x, y >= 2: the 3-tier forms and their duals
        add(TLink({{2, x - 1}, {3, z - 1}, {2 + y, 2}}));
        if (x != y) add(TLink({{2, y - 1}, {3, z - 1}, {2 + x, 2}}));
        if (x == 2 && y == 2) add(TLink({{3, z - 2}, {4, 3}}));
        add(normalize(dual(TLink({{2, x - 1}, {3, z - 1}, {2 + y, 2}}))));
    }
    return out;
}

inline CensusRow make_census_row(const CanonicalForm3& c) {
    CensusRow row;
    row.canonical = c;
    row.tlink_forms = classification_tlink_forms(c);
    row.braid_index = 3;
    const BraidWord word = canonical_to_braid(c);
    const ClosureShape shape = closure_shape(word);
    row.components = shape.components;
    row.writhe = shape.writhe;
    row.jones = jones_xy_fulltwists(c.x, c.y, c.z).reconstruct();
    row.torus = torus_detect(c);
    return row;
}

/// All canonical forms with x <= x_max, y <= y_max, z <= z_max in
/// lexicographic (z, x, y) order.
inline std::vector<CanonicalForm3> census_grid(int x_max, int y_max, int z_max) {
    std::vector<CanonicalForm3> grid;
    for (int z = 3; z <= z_max; z += 3)
        for (int x = 0; x <= x_max; ++x)
            for (int y = 0; y <= std::min(x, y_max); ++y) grid.push_back(CanonicalForm3{x, y, z});
    return grid;
}

inline std::vector<CensusRow> run_census(int x_max, int y_max, int z_max, int jobs = 1) {
    if (x_max < 0 || y_max < 0 || z_max < 3)
        throw PreconditionViolated("census: need bounds >= 0 and z_max >= 3");
    const auto grid = census_grid(x_max, y_max, z_max);
    return parallel_map_indexed<CensusRow>(grid.size(), jobs,
                                           [&](std::size_t i) { return make_census_row(grid[i]); });
}

inline std::string census_csv_header() {
    return "canonical;x;y;z;braid_index;components;writhe;jones;torus;tlink_forms";
}

inline std::string census_row_csv(const CensusRow& r) {
    std::string forms;
    for (std::size_t i = 0; i < r.tlink_forms.size(); ++i) {
        if (i) forms += "|";
        forms += r.tlink_forms[i];
    }
    std::string torus = r.torus ? ("T(" + std::to_string(r.torus->first) + "," + std::to_string(r.torus->second) + ")")
                                : "";
    return render_canonical(r.canonical) + ";" + std::to_string(r.canonical.x) + ";" +
           std::to_string(r.canonical.y) + ";" + std::to_string(r.canonical.z) + ";" +
           std::to_string(r.braid_index) + ";" + std::to_string(r.components) + ";" +
           std::to_string(r.writhe) + ";" + serialize_poly(r.jones) + ";" + torus + ";" + forms;
}

inline std::string census_to_csv(const std::vector<CensusRow>& rows) {
    std::string out = census_csv_header() + "\n";
    for (const CensusRow& r : rows) out += census_row_csv(r) + "\n";
    return out;
}

inline nlohmann::json census_row_json(const CensusRow& r) {
    nlohmann::json j;
    j["canonical"] = render_canonical(r.canonical);
    j["x"] = r.canonical.x;
    j["y"] = r.canonical.y;
    j["z"] = r.canonical.z;
    j["braid_index"] = r.braid_index;
    j["components"] = r.components;
    j["writhe"] = r.writhe;
    j["jones"] = serialize_poly(r.jones);
    j["torus"] = r.torus ? ("T(" + std::to_string(r.torus->first) + "," + std::to_string(r.torus->second) + ")")
                         : "";
    j["tlink_forms"] = r.tlink_forms;
    return j;
}

inline std::string census_to_json(const std::vector<CensusRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CensusRow& r : rows) arr.push_back(census_row_json(r));
    return arr.dump(2) + "\n";
}

inline CensusRow parse_census_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t semi = line.find(';', pos);
        if (semi == std::string::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, semi - pos));
        pos = semi + 1;
    }
    if (fields.size() != 10) throw SyntaxError("census row: expected 10 fields");
    CensusRow r;
    r.canonical = parse_canonical(fields[0]);
    r.braid_index = std::stoi(fields[4]);
    r.components = std::stoi(fields[5]);
    r.writhe = std::stoi(fields[6]);
    r.jones = parse_poly(fields[7]);
    if (!fields[8].empty()) {
        int a, b;
        if (std::sscanf(fields[8].c_str(), "T(%d,%d)", &a, &b) != 2)
            throw SyntaxError("census row: bad torus field");
        r.torus = {a, b};
    }
    std::size_t fpos = 0;
    const std::string& forms = fields[9];
    while (fpos < forms.size()) {
        std::size_t bar = forms.find('|', fpos);
        if (bar == std::string::npos) bar = forms.size();
        r.tlink_forms.push_back(forms.substr(fpos, bar - fpos));
        fpos = bar + (bar < forms.size() ? 1 : 0);
    }
    return r;
}

} // namespace skein3
