// Writes the built-in corpus as fan files plus a manifest.
//   export_corpus DIR

#include <fstream>
#include <iostream>

#include "toric/toric.hpp"

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: export_corpus DIR\n";
        return 2;
    }
    const std::string dir = argv[1];
    toric::Json manifest = toric::Json::array();
    for (const auto& e : toric::corpus()) {
        toric::Json j = toric::fan_to_json(e.fan);
        j["provenance"] = e.provenance;
        std::ofstream out(dir + "/" + e.id + ".json");
        out << toric::pretty(j) << "\n";
        manifest.push_back({{"id", e.id}, {"file", e.id + ".json"}, {"provenance", e.provenance}});
    }
    std::ofstream out(dir + "/manifest.json");
    out << toric::pretty(manifest) << "\n";
    return 0;
}
