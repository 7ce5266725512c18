#include "cambmin/cartan.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cambmin {

void CartanData::validate() const {
    if (n == 0) throw std::invalid_argument("empty Cartan matrix");
    if (a.size() != n || d.size() != n) throw std::invalid_argument("Cartan data size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("Cartan matrix not square");
        if (a[i][i] != 2) throw std::invalid_argument("Cartan diagonal entry != 2");
        if (d[i] <= 0) throw std::invalid_argument("symmetrizer entry not positive");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw std::invalid_argument("positive off-diagonal Cartan entry");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw std::invalid_argument("Cartan zero pattern not symmetric");
            if (static_cast<long>(d[i]) * a[i][j] != static_cast<long>(d[j]) * a[j][i])
                throw std::invalid_argument("symmetrizer does not symmetrize the Cartan matrix");
        }
    }
}

CartanData CartanData::from_matrix(std::vector<std::vector<int>> matrix,
                                   std::vector<int> symmetrizer) {
    CartanData cd;
    cd.n = matrix.size();
    cd.a = std::move(matrix);
    cd.d = std::move(symmetrizer);
    cd.validate();
    return cd;
}

CartanData cartan_registry(const std::string& name) {
    if (name == "A1") return CartanData::from_matrix({{2}}, {1});
    if (name == "A2") return CartanData::from_matrix({{2, -1}, {-1, 2}}, {1, 1});
    if (name == "A3")
        return CartanData::from_matrix({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1});
    if (name == "B2") return CartanData::from_matrix({{2, -1}, {-2, 2}}, {2, 1});
    if (name == "G2") return CartanData::from_matrix({{2, -1}, {-3, 2}}, {3, 1});
    if (name == "A1(1)" || name == "A1~" || name == "A1^1")
        return CartanData::from_matrix({{2, -2}, {-2, 2}}, {1, 1});
    if (name == "A2(1)" || name == "A2~" || name == "A2^1")
        return CartanData::from_matrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, {1, 1, 1});
    throw std::invalid_argument("unknown Cartan type: " + name);
}

std::vector<std::string> cartan_registry_names() {
    return {"A1", "A2", "A3", "B2", "G2", "A1(1)", "A2(1)"};
}

CartanData cartan_from_json_text(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::size_t rank = j.at("rank").get<std::size_t>();
    auto matrix = j.at("matrix").get<std::vector<std::vector<int>>>();
    std::vector<int> sym;
    if (j.contains("symmetrizer"))
        sym = j.at("symmetrizer").get<std::vector<int>>();
    else
        sym.assign(rank, 1);
    if (matrix.size() != rank) throw std::invalid_argument("rank does not match matrix size");
    return CartanData::from_matrix(std::move(matrix), std::move(sym));
}

CartanData cartan_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open Cartan config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return cartan_from_json_text(ss.str());
}

}  // namespace cambmin
