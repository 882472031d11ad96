#include "cubehd/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cubehd {

using nlohmann::json;

std::string vertex_to_string(Vertex v, int d) {
    if (d < 1 || d > kMaxDimension) throw std::invalid_argument("bad dimension");
    std::string s(static_cast<std::size_t>(d), '0');
    for (int i = 0; i < d; ++i)
        if ((v >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Vertex vertex_from_string(const std::string& s) {
    if (s.empty() || s.size() > kMaxDimension)
        throw FormatError("vertex string length must be 1..30");
    Vertex v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v |= Vertex{1} << i;
        else if (s[i] != '0')
            throw FormatError("vertex string may contain only 0 and 1");
    }
    return v;
}

RepresentationFile make_representation_file(const SeedSet& s, bool verified) {
    return RepresentationFile{s.d, s.seeds, s.rng_seed, verified};
}

SeedSet to_seed_set(const RepresentationFile& file) {
    return SeedSet{file.d, file.seeds, file.rng_seed};
}

CubeRepresentation to_cube_representation(const RepresentationFile& file) {
    return cube_representation(file.seeds, file.d);
}

std::string write_representation_json(const RepresentationFile& file) {
    json j;
    j["d"] = file.d;
    json seeds = json::array();
    for (Vertex v : file.seeds) seeds.push_back(vertex_to_string(v, file.d));
    j["seeds"] = std::move(seeds);
    j["rng_seed"] = file.rng_seed;
    j["verified"] = file.verified;
    return j.dump(2) + "\n";
}

RepresentationFile read_representation_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("representation file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("d") || !j.contains("seeds"))
        throw FormatError("representation file: missing d or seeds");
    RepresentationFile file;
    try {
        file.d = j.at("d").get<int>();
        if (file.d < 1 || file.d > kMaxDimension)
            throw FormatError("representation file: d out of range");
        for (const auto& item : j.at("seeds")) {
            std::string s = item.get<std::string>();
            if (static_cast<int>(s.size()) != file.d)
                throw FormatError("representation file: seed string length != d");
            file.seeds.push_back(vertex_from_string(s));
        }
        if (file.seeds.empty()) throw FormatError("representation file: no seeds");
        file.rng_seed = j.value("rng_seed", std::uint64_t{0});
        file.verified = j.value("verified", false);
    } catch (const json::exception& e) {
        throw FormatError(std::string("representation file: ") + e.what());
    }
    return file;
}

void save_representation(const std::string& path, const RepresentationFile& file) {
    write_text_file(path, write_representation_json(file));
}

RepresentationFile load_representation(const std::string& path) {
    return read_representation_json(read_text_file(path));
}

std::string write_small_graph_json(const SmallGraph& g) {
    json j;
    j["n"] = g.n;
    json edges = json::array();
    for (int i = 0; i < g.n; ++i)
        for (int k = i + 1; k < g.n; ++k)
            if (g.adjacent(i, k)) edges.push_back(json::array({i, k}));
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

SmallGraph read_small_graph_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("graph file: ") + e.what());
    }
    try {
        int n = j.at("n").get<int>();
        if (n < 1 || n > kMaxRecognitionVertices)
            throw FormatError("graph file: n out of range (1..10)");
        SmallGraph g = SmallGraph::with_vertices(n);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw FormatError("graph file: bad edge entry");
            int a = e[0].get<int>(), b = e[1].get<int>();
            if (a < 0 || b < 0 || a >= n || b >= n || a == b)
                throw FormatError("graph file: edge endpoints out of range");
            g.add_edge(a, b);
        }
        return g;
    } catch (const json::exception& e) {
        throw FormatError(std::string("graph file: ") + e.what());
    }
}

SmallGraph load_small_graph(const std::string& path) {
    return read_small_graph_json(read_text_file(path));
}

namespace {

json bound_report_to_json(const BoundReport& r) {
    json j;
    j["d"] = r.d;
    j["c"] = r.c;
    j["t"] = r.t;
    j["log2_bound_A"] = r.log2_bound_a;  // -inf serializes as null
    j["log2_bound_B"] = r.log2_bound_b;
    j["log2_total"] = r.log2_total;
    j["c1"] = r.c1;
    j["b_side_empty"] = r.b_side_empty;
    j["total_lt_1"] = r.total_lt_1;
    j["log_base"] = 2;
    return j;
}

}  // namespace

std::string bound_report_json(const BoundReport& report) {
    return bound_report_to_json(report).dump(2) + "\n";
}

std::string bound_report_csv_row(const BoundReport& r) {
    std::ostringstream out;
    out.precision(10);
    out << r.d << ',' << r.c << ',' << r.t << ',' << r.log2_bound_a << ','
        << r.log2_bound_b << ',' << r.log2_total << ',' << r.c1 << ','
        << (r.total_lt_1 ? 1 : 0);
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path);
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << text;
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace cubehd
