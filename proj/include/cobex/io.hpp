#ifndef COBEX_IO_HPP
#define COBEX_IO_HPP

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cobex/complex.hpp"

namespace cobex {

/// { "top_dim": d, "cells": [[labels dim 0], ...], "boundary": [per dim >= 1, ...] }
inline nlohmann::json complex_to_json(const Complex& X) {
    nlohmann::json j;
    j["top_dim"] = X.top_dim;
    j["cells"] = X.cells;
    j["boundary"] = X.boundary;
    return j;
}

/// Accepts the full format above or the simplicial shorthand
/// { "maximal_faces": [[v, ...], ...] } (1-based vertices, closure computed).
inline Complex complex_from_json(const nlohmann::json& j) {
    if (j.contains("maximal_faces")) {
        std::vector<std::vector<int>> faces =
            j.at("maximal_faces").get<std::vector<std::vector<int>>>();
        for (auto& f : faces)
            for (int& v : f) {
                if (v < 1) throw std::runtime_error("maximal_faces: vertices are 1-based");
                --v;
            }
        Complex X = build_simplicial(faces);
        X.validate();
        return X;
    }
    Complex X;
    X.top_dim = j.at("top_dim").get<int>();
    X.cells = j.at("cells").get<std::vector<std::vector<std::string>>>();
    X.boundary =
        j.at("boundary").get<std::vector<std::vector<std::vector<std::size_t>>>>();
    X.label_kind = LabelKind::Opaque;
    X.validate();
    return X;
}

inline void save_complex(const Complex& X, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << complex_to_json(X).dump(2) << "\n";
}

inline Complex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    nlohmann::json j;
    in >> j;
    return complex_from_json(j);
}

}  // namespace cobex

#endif
