#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "cubehd/experiment.hpp"
#include "cubehd/io.hpp"

using namespace cubehd;

TEST_CASE("vertex strings put position 1 leftmost") {
    CHECK(vertex_to_string(0b01, 2) == "10");
    CHECK(vertex_to_string(0b10, 2) == "01");
    CHECK(vertex_to_string(0b0, 2) == "00");
    CHECK(vertex_from_string("10") == 0b01);
    CHECK(vertex_from_string("01") == 0b10);
    for (Vertex v = 0; v < 32; ++v) CHECK(vertex_from_string(vertex_to_string(v, 5)) == v);
    CHECK_THROWS_AS(vertex_from_string("10x"), FormatError);
    CHECK_THROWS_AS(vertex_from_string(""), FormatError);
}

TEST_CASE("representation file round-trip") {
    SeedSet s{3, {0b000, 0b101, 0b101}, 42};
    RepresentationFile file = make_representation_file(s, true);
    std::string text = write_representation_json(file);

    RepresentationFile back = read_representation_json(text);
    CHECK(back.d == 3);
    CHECK(back.seeds == s.seeds);
    CHECK(back.rng_seed == 42);
    CHECK(back.verified);
    CHECK(write_representation_json(back) == text);  // byte-identical rewrite

    SeedSet restored = to_seed_set(back);
    CHECK(restored.seeds == s.seeds);
    CHECK(restored.d == 3);
}

TEST_CASE("reading accepts handmade files without optional fields") {
    RepresentationFile file = read_representation_json(R"({"d": 2, "seeds": ["00"]})");
    CHECK(file.d == 2);
    CHECK(file.seeds == std::vector<Vertex>{0b00});
    CHECK(file.rng_seed == 0);
    CHECK_FALSE(file.verified);
}

TEST_CASE("malformed representation files") {
    CHECK_THROWS_AS(read_representation_json("{not json"), FormatError);
    CHECK_THROWS_AS(read_representation_json(R"({"seeds": ["00"]})"), FormatError);
    CHECK_THROWS_AS(read_representation_json(R"({"d": 2})"), FormatError);
    CHECK_THROWS_AS(read_representation_json(R"({"d": 2, "seeds": []})"), FormatError);
    CHECK_THROWS_AS(read_representation_json(R"({"d": 2, "seeds": ["000"]})"), FormatError);
    CHECK_THROWS_AS(read_representation_json(R"({"d": 2, "seeds": ["0x"]})"), FormatError);
    CHECK_THROWS_AS(read_representation_json(R"({"d": 0, "seeds": []})"), FormatError);
    CHECK_THROWS_AS(read_representation_json(R"({"d": "two", "seeds": ["00"]})"), FormatError);
}

TEST_CASE("small graph json") {
    SmallGraph g = read_small_graph_json(R"({"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]})");
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.adjacent(3, 0));

    std::string text = write_small_graph_json(g);
    SmallGraph back = read_small_graph_json(text);
    CHECK(back.edge_mask() == g.edge_mask());

    CHECK_THROWS_AS(read_small_graph_json(R"({"n": 4})"), FormatError);
    CHECK_THROWS_AS(read_small_graph_json(R"({"n": 4, "edges": [[0,4]]})"), FormatError);
    CHECK_THROWS_AS(read_small_graph_json(R"({"n": 4, "edges": [[1,1]]})"), FormatError);
    CHECK_THROWS_AS(read_small_graph_json(R"({"n": 99, "edges": []})"), FormatError);
    CHECK_THROWS_AS(read_small_graph_json("["), FormatError);
}

TEST_CASE("bound report serialization") {
    BoundReport report = failure_bound(1024, 20.0);
    std::string j = bound_report_json(report);
    CHECK(j.find("\"log2_bound_A\"") != std::string::npos);
    CHECK(j.find("\"log_base\": 2") != std::string::npos);

    std::string row = bound_report_csv_row(report);
    CHECK(row.rfind("1024,20,10,", 0) == 0);

    // empty near side serializes as "-inf" in CSV and null in JSON
    BoundReport degenerate = failure_bound(16, 1.0);
    CHECK(bound_report_csv_row(degenerate).find("-inf") != std::string::npos);
    CHECK(bound_report_json(degenerate).find("\"log2_bound_B\": null") != std::string::npos);
}

TEST_CASE("text file io") {
    std::string path = (std::filesystem::temp_directory_path() / "cubehd_io_test.txt").string();
    write_text_file(path, "hello\n");
    CHECK(read_text_file(path) == "hello\n");
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_text_file("/nonexistent/nope.txt"), IoError);
    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/nope.txt", "x"), IoError);
}

TEST_CASE("saved representations verify identically after reload") {
    BuildResult build = build_representation(5, 4.0, 11, 40);
    REQUIRE(build.success);
    std::string path =
        (std::filesystem::temp_directory_path() / "cubehd_roundtrip.json").string();
    save_representation(path, make_representation_file(build.seeds, true));
    SeedSet restored = to_seed_set(load_representation(path));
    std::remove(path.c_str());

    CHECK(restored.seeds == build.seeds.seeds);
    CHECK(verify_separation_pairwise(restored).satisfied ==
          verify_separation_pairwise(build.seeds).satisfied);
    CHECK(verify_separation_classwise(restored).satisfied);
}

TEST_CASE("experiment csv schema") {
    std::vector<ExperimentRow> rows{{4, 1.5, 9, 5, 1.5, 2, 0}, {4, 1.5, 9, 6, 1.5, 1, 1}};
    std::string csv = experiment_csv(rows);
    CHECK(csv.rfind("# cubehd-experiment-v1\n", 0) == 0);
    CHECK(csv.find("d,c_used,seed_count,minimized_count,cmo_floor,attempts,verify_millis\n") !=
          std::string::npos);
    CHECK(csv.find("4,1.5,9,5,1.5,2,0\n") != std::string::npos);
    CHECK(csv.find("# summary d=4 trials=2 min_minimized=5") != std::string::npos);
}
