#include <algorithm>
#include <random>
#include <string>

#include "catalog.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "helpers.hpp"

using namespace rcross;

namespace {

// every witness must be in general position and realize its key
void check_witnesses(const OrderTypeCatalog& cat) {
  for (const auto& [sig, wit] : cat.entries) {
    REQUIRE(static_cast<int>(wit.size()) == cat.n);
    CHECK(canonicalize(order_type(wit)) == sig);
  }
}

}  // namespace

TEST_CASE("grid enumeration: tiny counts") {
  // one order type of 3 points; two of 4 (convex / one inside)
  const auto c3 = enumerate_grid_order_types(3, 2, 0);
  CHECK(c3.entries.size() == 1);
  const auto c4 = enumerate_grid_order_types(4, 3, 0);
  CHECK(c4.entries.size() == 2);
  CHECK(c4.meta.exhaustive);
  CHECK(c4.meta.grid_side == 3);
  check_witnesses(c4);
  // exactly one of the two 4-point types is convex
  int convex = 0;
  for (const auto& [sig, wit] : c4.entries) convex += is_convex_position(wit);
  CHECK(convex == 1);
}

TEST_CASE("grid enumeration: n=5 count stabilizes at 3") {
  std::size_t prev = 0;
  for (int side : {4, 5, 6}) {
    const auto cat = enumerate_grid_order_types(5, side, 0);
    CHECK(cat.entries.size() >= prev);  // larger grids never lose types
    prev = cat.entries.size();
    if (side >= 4) CHECK(cat.entries.size() == 3);
  }
}

TEST_CASE("grid enumeration: n=6 counts grow to 16") {
  std::size_t prev = 0;
  std::size_t last = 0;
  for (int side : {5, 6, 7}) {
    const auto cat = enumerate_grid_order_types(6, side, 0);
    CHECK(cat.entries.size() >= prev);
    prev = last = cat.entries.size();
  }
  CHECK(last == 16);
}

TEST_CASE("grid enumeration: parameter validation") {
  CHECK_THROWS_AS(enumerate_grid_order_types(2, 4, 0), ParameterError);
  CHECK_THROWS_AS(enumerate_grid_order_types(11, 4, 0), ParameterError);
  CHECK_THROWS_AS(enumerate_grid_order_types(5, 1, 0), ParameterError);
  CHECK_THROWS_AS(enumerate_grid_order_types(5, 17, 0), ParameterError);
  CHECK_THROWS_AS(enumerate_grid_order_types(5, 4, -1), ParameterError);
}

TEST_CASE("budgeted sampling is deterministic and sound") {
  const auto full = enumerate_grid_order_types(5, 4, 0);
  const auto a = enumerate_grid_order_types(5, 4, 300, 99);
  const auto b = enumerate_grid_order_types(5, 4, 300, 99);
  CHECK(a.entries.size() == b.entries.size());
  CHECK(std::equal(a.entries.begin(), a.entries.end(), b.entries.begin()));
  CHECK(!a.meta.exhaustive);
  CHECK(a.meta.seed == 99);
  CHECK(a.meta.tested > 0);      // draws that were in general position
  CHECK(a.meta.tested <= 300);
  // sampled keys are a subset of the exhaustive ones
  for (const auto& [sig, wit] : a.entries) CHECK(full.entries.count(sig) == 1);
  check_witnesses(a);
  // a budget covering all C(16,5) = 4368 subsets is effectively exhaustive
  const auto big = enumerate_grid_order_types(5, 4, 10000, 7);
  CHECK(big.meta.exhaustive);
  CHECK(big.entries.size() == full.entries.size());
}

TEST_CASE("save/load round trip") {
  const auto cat = enumerate_grid_order_types(5, 4, 0);
  const std::string blob = save_catalog(cat);
  const auto back = load_catalog(blob);
  CHECK(back.n == cat.n);
  REQUIRE(back.entries.size() == cat.entries.size());
  auto it = cat.entries.begin();
  for (const auto& [sig, wit] : back.entries) {
    CHECK(sig == it->first);
    CHECK(wit == it->second);
    ++it;
  }
}

TEST_CASE("load_catalog rejects corrupt blobs") {
  const auto cat = enumerate_grid_order_types(4, 3, 0);
  std::string blob = save_catalog(cat);

  std::string bad_magic = blob;
  bad_magic[0] ^= 0x5a;
  CHECK_THROWS_AS(load_catalog(bad_magic), FormatError);

  CHECK_THROWS_AS(load_catalog(blob.substr(0, blob.size() - 3)), FormatError);
  CHECK_THROWS_AS(load_catalog(std::string()), FormatError);

  // flipping the first entry's signature bits breaks either the ordering
  // check or the witness-realizes-key check
  std::string flipped = blob;
  flipped[20] ^= 0x0f;
  CHECK_THROWS_AS(load_catalog(flipped), FormatError);
}

TEST_CASE("save_catalog requires small integer witnesses") {
  OrderTypeCatalog cat;
  cat.n = 3;
  Configuration w = {make_point(0, 0), make_point(1, 0), make_point(0, 1)};
  insert_witness(cat, w);
  CHECK_NOTHROW(save_catalog(cat));
  // blow a coordinate past 32 bits
  cat.entries.begin()->second[0].x = Rational(Int(1) << 40);
  CHECK_THROWS_AS(save_catalog(cat), FormatError);
}

TEST_CASE("ingest_database parses raw records and names bad ones") {
  // two 3-point records in 8-bit coordinates; the second is a relabeling
  // of the first, so only one canonical type results
  const std::string bytes = {0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0};
  const auto cat = ingest_database(3, bytes);
  CHECK(cat.entries.size() == 1);
  CHECK(cat.meta.source == "ingest");
  check_witnesses(cat);

  // collinear record is rejected with its index
  const std::string collinear = {0, 0, 1, 1, 2, 2};
  CHECK_THROWS_WITH_AS(ingest_database(3, collinear),
                       "record 0: collinear triple (0,1,2)", DegeneracyError);
  CHECK_THROWS_AS(ingest_database(3, std::string(5, 'x')), FormatError);
  CHECK_THROWS_AS(ingest_database(2, std::string()), ParameterError);
}

TEST_CASE("ingest_database reads 16-bit coordinates for n=9") {
  // nine points: eight on a circle-ish convex ring plus one near the center,
  // written as little-endian u16 pairs
  const int pts[9][2] = {{0, 0},   {300, 10},  {600, 90}, {700, 300}, {650, 600},
                         {400, 700}, {100, 650}, {5, 350}, {260, 330}};
  std::string bytes;
  for (const auto& p : pts)
    for (int c : {p[0], p[1]}) {
      bytes.push_back(static_cast<char>(c & 0xff));
      bytes.push_back(static_cast<char>((c >> 8) & 0xff));
    }
  const auto cat = ingest_database(9, bytes);
  CHECK(cat.n == 9);
  CHECK(cat.entries.size() == 1);
  check_witnesses(cat);
}

TEST_CASE("merge_catalogs commutes and unions keys") {
  const auto a = enumerate_grid_order_types(5, 3, 0);
  const auto b = enumerate_grid_order_types(5, 4, 0);
  const auto ab = merge_catalogs(a, b);
  const auto ba = merge_catalogs(b, a);
  CHECK(ab.entries.size() == ba.entries.size());
  CHECK(std::equal(ab.entries.begin(), ab.entries.end(), ba.entries.begin()));
  for (const auto& [sig, wit] : a.entries) CHECK(ab.entries.count(sig) == 1);
  for (const auto& [sig, wit] : b.entries) CHECK(ab.entries.count(sig) == 1);
  CHECK(ab.meta.source == "merge");
  check_witnesses(ab);
  OrderTypeCatalog other;
  other.n = 4;
  CHECK_THROWS_AS(merge_catalogs(a, other), ParameterError);
}

TEST_CASE("insert_witness adds new types and keeps better witnesses") {
  OrderTypeCatalog cat;
  cat.n = 4;
  insert_witness(cat, {make_point(0, 0), make_point(3, 0), make_point(0, 3),
                       make_point(1, 1)});
  CHECK(cat.entries.size() == 1);
  // convex quadrilateral is the other type
  insert_witness(cat, {make_point(0, 0), make_point(1, 0), make_point(1, 1),
                       make_point(0, 1)});
  CHECK(cat.entries.size() == 2);
  // a bigger witness of an existing type does not displace the smaller one
  insert_witness(cat, {make_point(0, 0), make_point(100, 0), make_point(100, 100),
                       make_point(0, 100)});
  bool saw_unit = false;
  for (const auto& [sig, wit] : cat.entries)
    for (const auto& p : wit)
      if (p.x == 1 && p.y == 1) saw_unit = true;
  CHECK(saw_unit);
  check_witnesses(cat);

  CHECK_THROWS_AS(
      insert_witness(cat, {make_point(0, 0), make_point(1, 0), make_point(0, 1)}),
      ParameterError);  // wrong n
  Configuration frac = {make_point(0, 0), make_point(1, 0), make_point(0, 1),
                        ExactPoint{Rational(1, 2), Rational(1, 3)}};
  CHECK_THROWS_AS(insert_witness(cat, frac), ParameterError);
}
