#include <cstdint>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "rcross.h"

using nlohmann::json;

namespace {

// copy a C-API string into std::string and release the original
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  rx_string_free(s);
  return out;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  REQUIRE(f != nullptr);
  REQUIRE(std::fwrite(bytes.data(), 1, bytes.size(), f) == bytes.size());
  std::fclose(f);
}

}  // namespace

TEST_CASE("c api: version and graph construction round trips") {
  CHECK(std::string(rx_version()) == "0.1.0");

  rx_status st = RX_ERROR_INTERNAL;
  const std::string text = "4 2\n0 1\n2 3\n";
  rx_graph* g = rx_graph_parse(text.c_str(), &st);
  REQUIRE(st == RX_OK);
  CHECK(rx_graph_order(g) == 4);
  CHECK(rx_graph_is_weighted(g) == 0);
  CHECK(take(rx_graph_format(g, &st)) == text);
  rx_graph_free(g);

  rx_graph* w = rx_graph_parse("4 2\n0 1 1/2\n2 3 1/4\n", &st);
  REQUIRE(st == RX_OK);
  CHECK(rx_graph_is_weighted(w) == 1);
  rx_graph_free(w);

  rx_graph* k5 = rx_graph_complete(5, &st);
  REQUIRE(st == RX_OK);
  CHECK(rx_graph_order(k5) == 5);
  rx_graph_free(k5);

  // gnp is deterministic in the seed
  rx_graph* a = rx_graph_gnp(8, "1/2", 7, &st);
  REQUIRE(st == RX_OK);
  rx_graph* b = rx_graph_gnp(8, "1/2", 7, &st);
  CHECK(take(rx_graph_format(a, &st)) == take(rx_graph_format(b, &st)));
  rx_graph_free(a);
  rx_graph_free(b);

  rx_graph* p5 = rx_graph_paley(5, &st);
  REQUIRE(st == RX_OK);
  CHECK(rx_graph_order(p5) == 5);
  rx_graph_free(p5);
}

TEST_CASE("c api: errors set status, return NULL, and leave a message") {
  rx_status st = RX_OK;
  CHECK(rx_graph_parse("3 1\n0 0\n", &st) == nullptr);
  CHECK(st == RX_ERROR_PARSE);
  CHECK(std::string(rx_last_error()).find("loop") != std::string::npos);

  CHECK(rx_graph_parse(nullptr, &st) == nullptr);
  CHECK(st == RX_ERROR_PARAMETER);

  CHECK(rx_graph_gnp(8, nullptr, 0, &st) == nullptr);
  CHECK(st == RX_ERROR_PARAMETER);

  CHECK(rx_graph_paley(9, &st) == nullptr);  // prime power, not prime
  CHECK(st == RX_ERROR_PARAMETER);

  CHECK(rx_graph_parse_file("no_such_graph_file.txt", &st) == nullptr);
  CHECK(st == RX_ERROR_PARAMETER);

  // status pointer is optional
  CHECK(rx_graph_parse("nonsense", nullptr) == nullptr);
  CHECK(*rx_last_error() != '\0');

  CHECK(rx_graph_order(nullptr) == -1);
  CHECK(rx_graph_is_weighted(nullptr) == 0);
}

TEST_CASE("c api: catalog build, save, load, ingest, merge") {
  rx_status st = RX_ERROR_INTERNAL;
  rx_catalog* c4 = rx_catalog_build(4, 3, 0, 0, &st);
  REQUIRE(st == RX_OK);
  auto info = json::parse(take(rx_catalog_info_json(c4, &st)));
  CHECK(info["n"] == 4);
  CHECK(info["entries"] == 2);
  CHECK(info["source"] == "grid");
  CHECK(info["exhaustive"] == true);

  const std::string path = "test_capi_catalog.rxot";
  REQUIRE(rx_catalog_save_file(c4, path.c_str()) == RX_OK);
  rx_catalog* loaded = rx_catalog_load_file(path.c_str(), &st);
  REQUIRE(st == RX_OK);
  auto linfo = json::parse(take(rx_catalog_info_json(loaded, &st)));
  CHECK(linfo["entries"] == 2);
  CHECK(linfo["source"] == "file");
  std::remove(path.c_str());

  CHECK(rx_catalog_load_file("no_such_catalog.rxot", &st) == nullptr);
  CHECK(st == RX_ERROR_PARAMETER);

  write_file(path, "RXOT not a catalog at all");
  CHECK(rx_catalog_load_file(path.c_str(), &st) == nullptr);
  CHECK(st == RX_ERROR_FORMAT);
  std::remove(path.c_str());

  // one 8-bit record: the triangle (0,0), (2,0), (0,2)
  const uint8_t rec[6] = {0, 0, 2, 0, 0, 2};
  rx_catalog* ing = rx_catalog_ingest(3, rec, sizeof rec, &st);
  REQUIRE(st == RX_OK);
  auto iinfo = json::parse(take(rx_catalog_info_json(ing, &st)));
  CHECK(iinfo["entries"] == 1);
  CHECK(iinfo["source"] == "ingest");
  CHECK(rx_catalog_ingest(3, rec, 5, &st) == nullptr);
  CHECK(st == RX_ERROR_FORMAT);

  rx_catalog* c4b = rx_catalog_build(4, 4, 0, 0, &st);
  REQUIRE(rx_catalog_merge_into(c4b, c4) == RX_OK);
  auto minfo = json::parse(take(rx_catalog_info_json(c4b, &st)));
  CHECK(minfo["source"] == "merge");
  CHECK(minfo["entries"] == 2);
  CHECK(rx_catalog_merge_into(c4b, ing) == RX_ERROR_PARAMETER);  // n mismatch
  CHECK(rx_catalog_save_file(nullptr, path.c_str()) == RX_ERROR_PARAMETER);

  rx_catalog_free(c4b);
  rx_catalog_free(ing);
  rx_catalog_free(loaded);
  rx_catalog_free(c4);
}

TEST_CASE("c api: exact minimization and drawing counts") {
  rx_status st = RX_ERROR_INTERNAL;
  rx_catalog* c4 = rx_catalog_build(4, 3, 0, 0, &st);
  rx_catalog* c5 = rx_catalog_build(5, 4, 0, 0, &st);
  rx_graph* k4 = rx_graph_complete(4, &st);
  rx_graph* k5 = rx_graph_complete(5, &st);

  auto j4 = json::parse(take(rx_exact_json(k4, c4, &st)));
  CHECK(j4["n"] == 4);
  CHECK(j4["value"] == "0");
  CHECK(j4["points"].size() == 4);
  CHECK(j4["catalog_entries"] == 2);
  CHECK(j4["catalog_exhaustive"] == true);

  auto j5 = json::parse(take(rx_exact_json(k5, c5, &st)));
  CHECK(j5["value"] == "1");
  CHECK(j5["point_of"].size() == 5);

  CHECK(rx_exact_json(k5, c4, &st) == nullptr);  // catalog n mismatch
  CHECK(st == RX_ERROR_PARAMETER);
  CHECK(rx_exact_json(nullptr, c4, &st) == nullptr);
  CHECK(st == RX_ERROR_PARAMETER);

  // counting a concrete placement: the convex square forces one crossing
  auto cnt = json::parse(take(rx_count_json(k4, "0 0\n1 0\n1 1\n0 1\n", &st)));
  CHECK(cnt["value"] == "1");
  REQUIRE(cnt["pairs"].size() == 1);
  CHECK(cnt["pairs"][0] == json::array({0, 2, 1, 3}));

  // collinear triple: edge 0-2 passes through vertex 1
  CHECK(rx_count_json(k4, "0 0\n1 0\n2 0\n1 1\n", &st) == nullptr);
  CHECK(st == RX_ERROR_DEGENERACY);

  const std::string svg = take(rx_render_svg(k4, "0 0\n1 0\n1 1\n0 1\n", &st));
  CHECK(svg.rfind("<svg", 0) == 0);

  rx_graph_free(k5);
  rx_graph_free(k4);
  rx_catalog_free(c5);
  rx_catalog_free(c4);
}

TEST_CASE("c api: pipeline draw, partition, and cut distance") {
  rx_status st = RX_ERROR_INTERNAL;
  rx_graph* k4 = rx_graph_complete(4, &st);
  rx_graph* k5 = rx_graph_complete(5, &st);

  auto d4 = json::parse(
      take(rx_draw_json(k4, R"({"mode":"singleton","grid_side":3})", &st)));
  CHECK(d4["n"] == 4);
  CHECK(d4["K"] == 4);
  CHECK(d4["crossing_count"] == 0);
  CHECK(d4["diagnostics"]["certificate"]["verified_exact"] == true);
  CHECK(!d4["diagnostics"].contains("timings"));

  auto d5 = json::parse(take(rx_draw_json(
      k5, R"({"mode":"singleton","grid_side":4,"timings":true})", &st)));
  CHECK(d5["crossing_count"] == 1);
  CHECK(d5["diagnostics"].contains("timings"));

  const std::string svg =
      take(rx_draw_svg(k4, R"({"mode":"singleton","grid_side":3})", &st));
  CHECK(svg.rfind("<svg", 0) == 0);

  CHECK(rx_draw_json(k4, "{nope", &st) == nullptr);
  CHECK(st == RX_ERROR_PARSE);
  CHECK(rx_draw_json(k4, R"({"mode":"fancy"})", &st) == nullptr);
  CHECK(st == RX_ERROR_PARAMETER);

  rx_graph* w = rx_graph_parse("4 1\n0 1 1/2\n", &st);
  CHECK(rx_draw_json(w, nullptr, &st) == nullptr);  // weighted graphs can't draw
  CHECK(st == RX_ERROR_PARAMETER);

  rx_graph* k12 = rx_graph_complete(12, &st);
  auto part = json::parse(take(rx_partition_json(k12, "1/4", 8, 1, 0, &st)));
  CHECK(part["K"] == 1);
  CHECK(part["rounds"] == 0);
  CHECK(part["cap_exceeded"] == false);
  CHECK(part["partition"].size() == 12);
  CHECK(rx_partition_json(k12, nullptr, 8, 1, 0, &st) == nullptr);
  CHECK(st == RX_ERROR_PARAMETER);

  rx_graph* e4 = rx_graph_parse("4 0\n", &st);
  auto same = json::parse(take(rx_cutdist_json(k4, k4, 20, 1, 0, &st)));
  CHECK(same["value"] == "0");
  CHECK(same["exact"] == true);
  auto far = json::parse(take(rx_cutdist_json(k4, e4, 20, 1, 0, &st)));
  CHECK(far["value"] == "12");  // S = T = V counts each edge twice
  auto lower = json::parse(take(rx_cutdist_json(k4, e4, 2, 1, 0, &st)));
  CHECK(lower["exact"] == false);
  CHECK(lower.contains("witness_S"));

  rx_graph_free(e4);
  rx_graph_free(k12);
  rx_graph_free(w);
  rx_graph_free(k5);
  rx_graph_free(k4);
}

TEST_CASE("c api: k-colored search, estimation, and experiments") {
  rx_status st = RX_ERROR_INTERNAL;
  rx_catalog* c5 = rx_catalog_build(5, 4, 0, 0, &st);
  rx_graph* k5 = rx_graph_complete(5, &st);

  auto kp = json::parse(take(rx_kplanar_json(k5, 2, c5, 1000000, &st)));
  CHECK(kp["value"] == 0);
  CHECK(kp["colors"].size() == 10);
  CHECK(kp["edges"].size() == 10);

  rx_graph* k6 = rx_graph_complete(6, &st);
  rx_catalog* c6 = rx_catalog_build(6, 7, 0, 0, &st);
  CHECK(rx_kplanar_json(k6, 4, c6, 1000, &st) == nullptr);
  CHECK(st == RX_ERROR_BUDGET);
  CHECK(std::string(rx_last_error()).find("exceed") != std::string::npos);

  rx_graph* k8 = rx_graph_complete(8, &st);
  auto est = json::parse(take(rx_estimate_json(k8, 5, 3, 9, c5, &st)));
  CHECK(est["t"] == 5);
  REQUIRE(est["trial_values"].size() == 3);
  for (const auto& v : est["trial_values"]) CHECK(v == "4096/625");
  CHECK(est["median"] == "4096/625");
  CHECK(rx_estimate_json(k8, 3, 3, 9, c5, &st) == nullptr);  // t below 4
  CHECK(st == RX_ERROR_PARAMETER);

  const char* spec =
      R"({"family":"complete","n":9,"trials":1,"seed":5,"grid_side":4})";
  const std::string csv = take(rx_experiment_report(spec, "csv", &st));
  CHECK(csv.rfind("family,n,p,trial,upper_bound,normalizer,ratio,seconds\n",
                  0) == 0);
  CHECK(csv.find(",1.000000,") != std::string::npos);
  auto rows = json::parse(take(rx_experiment_report(spec, "json", &st)));
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["ratio"] == "1.000000");
  CHECK(rows[0]["family"] == "complete");

  CHECK(rx_experiment_report(spec, "xml", &st) == nullptr);
  CHECK(st == RX_ERROR_PARAMETER);
  CHECK(rx_experiment_report("not json", "csv", &st) == nullptr);
  CHECK(st == RX_ERROR_PARSE);
  CHECK(rx_experiment_report("{}", "csv", &st) == nullptr);
  CHECK(st == RX_ERROR_PARAMETER);

  rx_graph_free(k8);
  rx_graph_free(k6);
  rx_graph_free(k5);
  rx_catalog_free(c6);
  rx_catalog_free(c5);
}
