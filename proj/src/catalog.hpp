#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "geometry.hpp"

namespace rcross {

// How a catalog came to be; informational only, not persisted.
struct CatalogMeta {
  std::string source;            // "grid", "ingest", "file", "merge", "insert"
  int grid_side = 0;
  bool exhaustive = false;       // full sweep vs seeded sampling
  std::uint64_t seed = 0;        // sampling seed, meaningful when !exhaustive
  std::uint64_t tested = 0;      // candidate subsets examined
};

// Realizable order types for one n: canonical signature -> witness with
// small integer coordinates.
struct OrderTypeCatalog {
  int n = 0;
  std::map<OrderTypeSignature, Configuration> entries;
  CatalogMeta meta;
};

// One witness per distinct canonical order type found among general-position
// n-subsets of the grid_side x grid_side integer grid. Exhaustive when
// C(grid_side^2, n) <= budget, otherwise `budget` seeded pseudo-random draws.
// Witness ties are broken by (max coordinate, lexicographic coordinates), so
// shard merges commute.
OrderTypeCatalog enumerate_grid_order_types(int n, int grid_side,
                                            long long budget,
                                            std::uint64_t seed = 0);

// Raw concatenated n-point records: unsigned 8-bit coordinates for n <= 8,
// unsigned 16-bit little-endian for n in {9,10}; no header.
OrderTypeCatalog ingest_database(int n, const std::string& bytes);

std::string save_catalog(const OrderTypeCatalog& cat);
OrderTypeCatalog load_catalog(const std::string& blob);

// Key-set union; witness collisions resolved by the same deterministic
// preference as enumeration, so merging is associative and commutative.
OrderTypeCatalog merge_catalogs(const OrderTypeCatalog& a,
                                const OrderTypeCatalog& b);

// Adds (or improves the witness of) the canonical order type of the given
// integer-coordinate configuration. Used to seed catalogs with explicitly
// constructed drawings.
void insert_witness(OrderTypeCatalog& cat, const Configuration& witness);

}  // namespace rcross
