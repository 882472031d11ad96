#pragma once

#include <string>
#include <vector>

#include "cubehd/builder.hpp"
#include "cubehd/errors.hpp"
#include "cubehd/oracle.hpp"
#include "cubehd/probability.hpp"

// File formats. Vertex strings in files are human-oriented: the leftmost
// character is string position 1, which the core packs into bit 0, so the
// (de)serializer owns the reversal.

namespace cubehd {

struct RepresentationFile {
    int d = 0;
    std::vector<Vertex> seeds;
    std::uint64_t rng_seed = 0;
    bool verified = false;
};

/// d characters, position 1 first: "01" is the vertex with bit 0 clear
/// and bit 1 set.
std::string vertex_to_string(Vertex v, int d);
Vertex vertex_from_string(const std::string& s);

RepresentationFile make_representation_file(const SeedSet& s, bool verified);
SeedSet to_seed_set(const RepresentationFile& file);
/// The geometric object a representation file denotes.
CubeRepresentation to_cube_representation(const RepresentationFile& file);

std::string write_representation_json(const RepresentationFile& file);
/// Lenient on optional fields (rng_seed, verified default to 0/false);
/// strict on d, seed strings, and ranges. Throws FormatError.
RepresentationFile read_representation_json(const std::string& text);

void save_representation(const std::string& path, const RepresentationFile& file);
RepresentationFile load_representation(const std::string& path);

/// {"n": int, "edges": [[i, j], ...]}, 0-based vertices.
std::string write_small_graph_json(const SmallGraph& g);
SmallGraph read_small_graph_json(const std::string& text);
SmallGraph load_small_graph(const std::string& path);

std::string bound_report_json(const BoundReport& report);

inline constexpr const char* kBoundCsvSchema =
    "# cubehd-bounds-v1\nd,c,t,log2_bound_A,log2_bound_B,log2_total,c1,total_lt_1";
std::string bound_report_csv_row(const BoundReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cubehd
