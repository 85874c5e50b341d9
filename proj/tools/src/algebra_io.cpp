#include "algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace manin::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::pair<int, int> line_col(const std::string& text, size_t byte_pos) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte_pos && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Rat parse_rat_field(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (!v.is_string()) throw ParseError(where + ": rational values must be strings \"p/q\"");
    try {
        return Rat::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
}

}  // namespace

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_json(buf.str(), path);
}

AlgebraFile parse_algebra_json(const std::string& text, const std::string& path) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte);
        throw ParseError("JSON parse error at line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + e.what(),
                         line, col);
    }

    AlgebraFile out;
    out.path = path;
    out.digest = fnv1a64_hex(text);
    out.format_version = doc.value("format_version", 1);
    if (out.format_version != 1)
        throw ParseError("unsupported format_version " + std::to_string(out.format_version));

    if (!doc.contains("name") || !doc["name"].is_string())
        throw ParseError("missing string field 'name'");
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
        throw ParseError("missing integer field 'dimension'");
    int n = doc["dimension"].get<int>();
    if (n <= 0 || n > 32) throw ParseError("dimension out of range [1, 32]");

    BasedSpace space(n);
    StructureConstants f(space);
    std::vector<bool> given(static_cast<size_t>(n) * n * n, false);
    if (doc.contains("structure_constants")) {
        if (!doc["structure_constants"].is_array())
            throw ParseError("'structure_constants' must be an array of records");
        for (const auto& rec : doc["structure_constants"]) {
            if (!rec.contains("i") || !rec.contains("j") || !rec.contains("k") ||
                !rec.contains("value"))
                throw ParseError("structure constant records need fields i, j, k, value");
            int i = rec["i"].get<int>(), j = rec["j"].get<int>(), k = rec["k"].get<int>();
            if (i < 1 || i > n || j < 1 || j > n || k < 1 || k > n)
                throw ParseError("structure constant index out of range: (" + std::to_string(i) +
                                 "," + std::to_string(j) + "," + std::to_string(k) + ")");
            Rat v = parse_rat_field(rec["value"], "structure_constants");
            f.set_raw(i - 1, j - 1, k - 1, v);
            given[((i - 1) * n + (j - 1)) * n + (k - 1)] = true;
        }
        // mirror entries omitted from the file are implied by antisymmetry
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (given[(i * n + j) * n + k] && !given[(j * n + i) * n + k])
                        f.set_raw(j, i, k, -f.f(i, j, k));
    }

    std::optional<RatMat> K;
    if (doc.contains("bilinear_form") && !doc["bilinear_form"].is_null()) {
        const auto& rows = doc["bilinear_form"];
        if (!rows.is_array() || static_cast<int>(rows.size()) != n)
            throw ParseError("'bilinear_form' must be an n x n matrix");
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) {
            if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
                throw ParseError("'bilinear_form' must be an n x n matrix");
            for (int j = 0; j < n; ++j)
                m.at(i, j) = parse_rat_field(rows[i][j], "bilinear_form");
        }
        K = std::move(m);
    }

    out.model.algebra = LieAlgebraSpec{doc["name"].get<std::string>(), f, K};

    if (doc.contains("representation") && !doc["representation"].is_null()) {
        const auto& rep = doc["representation"];
        if (!rep.contains("size") || !rep.contains("matrices"))
            throw ParseError("'representation' needs fields size and matrices");
        int size = rep["size"].get<int>();
        if (size <= 0 || size > 16) throw ParseError("representation size out of range");
        if (static_cast<int>(rep["matrices"].size()) != n)
            throw ParseError("representation must give one matrix per basis element");
        out.model.rep_size = size;
        for (const auto& mat : rep["matrices"]) {
            if (!mat.is_array() || static_cast<int>(mat.size()) != size * size)
                throw ParseError("representation matrices must be row-major with size*size entries");
            std::vector<double> flat;
            flat.reserve(size * size);
            for (const auto& v : mat) {
                if (!v.is_number()) throw ParseError("representation entries must be numbers");
                flat.push_back(v.get<double>());
            }
            out.model.rep.push_back(std::move(flat));
        }
    }
    return out;
}

std::string algebra_to_json(const models::AlgebraModel& model) {
    const auto& g = model.algebra;
    int n = g.dim();
    ordered_json doc;
    doc["format_version"] = 1;
    doc["name"] = g.name;
    doc["dimension"] = n;
    ordered_json entries = ordered_json::array();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!g.f.f(i, j, k).is_zero())
                    entries.push_back(ordered_json{{"i", i + 1},
                                                   {"j", j + 1},
                                                   {"k", k + 1},
                                                   {"value", g.f.f(i, j, k).str()}});
    doc["structure_constants"] = entries;
    if (g.K) {
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < n; ++i) {
            ordered_json row = ordered_json::array();
            for (int j = 0; j < n; ++j) row.push_back(g.K->at(i, j).str());
            rows.push_back(row);
        }
        doc["bilinear_form"] = rows;
    }
    if (model.has_rep()) {
        ordered_json mats = ordered_json::array();
        for (const auto& m : model.rep) mats.push_back(m);
        doc["representation"] = ordered_json{{"size", model.rep_size}, {"matrices", mats}};
    }
    return doc.dump(2) + "\n";
}

Twist parse_twist_spec(const std::string& spec, const BasedSpace& space) {
    Tensor2 t(space);
    if (spec.empty()) return Twist::from_tensor(t);
    std::stringstream ss(spec);
    std::string term;
    while (std::getline(ss, term, ',')) {
        auto caret = term.find('^');
        auto colon = term.find(':');
        if (caret == std::string::npos || colon == std::string::npos || colon < caret)
            throw ParseError("twist term '" + term + "' is not of the form ei^ej:p/q");
        std::string left = term.substr(0, caret);
        std::string right = term.substr(caret + 1, colon - caret - 1);
        int i = space.index_of(left);
        int j = space.index_of(right);
        if (i < 0 || j < 0)
            throw ParseError("twist term '" + term + "' names an unknown basis element");
        if (i == j) throw ParseError("twist term '" + term + "' repeats a basis element");
        Rat v;
        try {
            v = Rat::parse(term.substr(colon + 1));
        } catch (const std::exception& e) {
            throw ParseError(std::string("twist coefficient: ") + e.what());
        }
        t.at(i, j) += v;
        t.at(j, i) += -v;
    }
    return Twist::from_tensor(t);
}

}  // namespace manin::cli
