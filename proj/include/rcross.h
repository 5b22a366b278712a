#ifndef RCROSS_H
#define RCROSS_H

/* C interface to the rectilinear crossing toolkit. All functions are
 * synchronous; handles are freed with the matching *_free. Functions that
 * return char* allocate with malloc semantics — release with
 * rx_string_free. On failure they return NULL/nonzero, set *status when
 * given, and leave a message in rx_last_error() (thread-local). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rx_status {
  RX_OK = 0,
  RX_ERROR_PARSE = 1,      /* malformed input text */
  RX_ERROR_PARAMETER = 2,  /* argument outside its contract */
  RX_ERROR_FORMAT = 3,     /* corrupt catalog/database bytes */
  RX_ERROR_DEGENERACY = 4, /* degenerate geometry */
  RX_ERROR_BUDGET = 5,     /* enumeration/coloring cap exceeded */
  RX_ERROR_INTERNAL = 6
} rx_status;

typedef struct rx_graph rx_graph;     /* weighted or unweighted graph */
typedef struct rx_catalog rx_catalog; /* order-type catalog for one n */

const char* rx_version(void);
const char* rx_last_error(void);
void rx_string_free(char* s);

/* Graph text format: header "n m", then m lines "u v" or "u v w" with w a
 * rational in [0,1]. */
rx_graph* rx_graph_parse(const char* text, rx_status* status);
rx_graph* rx_graph_parse_file(const char* path, rx_status* status);
rx_graph* rx_graph_complete(int n, rx_status* status);
rx_graph* rx_graph_gnp(int n, const char* p, uint64_t seed, rx_status* status);
rx_graph* rx_graph_paley(int q, rx_status* status);
int rx_graph_order(const rx_graph* g);
int rx_graph_is_weighted(const rx_graph* g);
char* rx_graph_format(const rx_graph* g, rx_status* status);
void rx_graph_free(rx_graph* g);

rx_catalog* rx_catalog_build(int n, int grid_side, long long budget,
                             uint64_t seed, rx_status* status);
rx_catalog* rx_catalog_load_file(const char* path, rx_status* status);
rx_catalog* rx_catalog_ingest(int n, const uint8_t* bytes, size_t len,
                              rx_status* status);
rx_status rx_catalog_save_file(const rx_catalog* c, const char* path);
rx_status rx_catalog_merge_into(rx_catalog* dst, const rx_catalog* src);
char* rx_catalog_info_json(const rx_catalog* c, rx_status* status);
void rx_catalog_free(rx_catalog* c);

/* config_json keys, all optional: "epsilon" ("1/4"), "k_max", "mode"
 * ("auto"|"singleton"), "catalog_path", "grid_side", "budget", "effort",
 * "seed", "timings" (bool). NULL or "{}" means defaults. */
char* rx_draw_json(const rx_graph* g, const char* config_json,
                   rx_status* status);
char* rx_draw_svg(const rx_graph* g, const char* config_json,
                  rx_status* status);

char* rx_exact_json(const rx_graph* g, const rx_catalog* c, rx_status* status);

/* points_text: one "x y" line per vertex, rational coordinates. */
char* rx_count_json(const rx_graph* g, const char* points_text,
                    rx_status* status);
char* rx_render_svg(const rx_graph* g, const char* points_text,
                    rx_status* status);

char* rx_partition_json(const rx_graph* g, const char* epsilon, int k_max,
                        int effort, uint64_t seed, rx_status* status);
char* rx_cutdist_json(const rx_graph* a, const rx_graph* b, int exact_cap,
                      int effort, uint64_t seed, rx_status* status);
char* rx_kplanar_json(const rx_graph* g, int k, const rx_catalog* c,
                      long long coloring_cap, rx_status* status);
char* rx_estimate_json(const rx_graph* g, int t, int trials, uint64_t seed,
                       const rx_catalog* c, rx_status* status);

/* spec_json keys: "family" ("gnp"|"paley"|"complete"|"file"), "n" (or "q"),
 * "p" ("1/2"), "trials", "seed", "path", "timings", plus the config_json
 * pipeline keys. format: "csv" or "json". */
char* rx_experiment_report(const char* spec_json, const char* format,
                           rx_status* status);

#ifdef __cplusplus
}
#endif

#endif /* RCROSS_H */
