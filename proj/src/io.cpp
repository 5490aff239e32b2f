#include "steenq/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace steenq {

namespace {

std::vector<VertexId> parse_vertex_line(const std::string& line, std::size_t lineno) {
    std::istringstream words(line);
    std::vector<VertexId> verts;
    std::string token;
    while (words >> token) {
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || value < 0)
            throw parse_error("line " + std::to_string(lineno) + ": bad vertex '" + token + "'");
        verts.push_back(static_cast<VertexId>(value));
    }
    return verts;
}

}  // namespace

SimplicialComplex read_complex(std::istream& in) {
    std::vector<Simplex> listed;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<VertexId> verts = parse_vertex_line(line, lineno);
        if (verts.empty()) continue;
        try {
            listed.emplace_back(std::move(verts));
        } catch (const std::invalid_argument& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return SimplicialComplex::from_maximal_simplices(listed);
}

SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open complex file: " + path);
    return read_complex(in);
}

std::string complex_to_text(const SimplicialComplex& X) {
    std::ostringstream out;
    for (const Simplex& s : maximal_simplices(X)) {
        for (std::size_t i = 0; i < s.vertex_count(); ++i) {
            if (i) out << ' ';
            out << s.vertex(i);
        }
        out << '\n';
    }
    return out.str();
}

Cochain read_cochain(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("bad cochain JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("degree") || !doc.contains("support"))
        throw parse_error("cochain JSON needs 'degree' and 'support' keys");
    Cochain out;
    try {
        out.degree = doc.at("degree").get<int>();
        for (const auto& entry : doc.at("support"))
            out.support.insert(Simplex(entry.get<std::vector<VertexId>>()));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad cochain JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("bad cochain support: ") + e.what());
    }
    try {
        validate_cochain(out);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
    return out;
}

Cochain read_cochain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open cochain file: " + path);
    return read_cochain(in);
}

std::string cochain_to_json(const Cochain& a) {
    nlohmann::json doc;
    doc["degree"] = a.degree;
    auto support = nlohmann::json::array();
    for (const Simplex& s : a.sorted_support()) support.push_back(s.vertices());
    doc["support"] = std::move(support);
    return doc.dump();
}

}  // namespace steenq
