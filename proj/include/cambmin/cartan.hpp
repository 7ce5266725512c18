#pragma once

#include <string>
#include <vector>

#include "cambmin/rational.hpp"

namespace cambmin {

// Symmetrizable generalized Cartan matrix with a fixed positive symmetrizer.
// Rows/columns are indexed 0..n-1 internally; the public names s1..sn in
// words and reports are 1-based.
struct CartanData {
    std::size_t n = 0;
    std::vector<std::vector<int>> a;  // a[i][j]
    std::vector<int> d;               // d[i] a[i][j] == d[j] a[j][i]

    int entry(std::size_t i, std::size_t j) const { return a[i][j]; }
    void validate() const;  // throws std::invalid_argument on malformed data

    static CartanData from_matrix(std::vector<std::vector<int>> matrix, std::vector<int> symmetrizer);
};

// Built-in registry: A1, A2, A3, B2, G2 and the rank-2/3 affine types
// A1(1), A2(1). Accepts a few spelling aliases (e.g. "A1~").
CartanData cartan_registry(const std::string& name);
std::vector<std::string> cartan_registry_names();

// JSON config: {"rank": n, "matrix": [[...]], "symmetrizer": [...]}
CartanData cartan_from_json_file(const std::string& path);
CartanData cartan_from_json_text(const std::string& text);

}  // namespace cambmin
