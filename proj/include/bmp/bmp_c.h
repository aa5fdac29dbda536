/* C interface of the BMP solver shared library. All handles are opaque;
 * functions return a status code and set a thread-local error message
 * retrievable via bmp_last_error(). Strings returned through out-parameters
 * are heap-allocated and must be released with bmp_string_free(). */
#ifndef BMP_C_H
#define BMP_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define BMP_OK 0
#define BMP_ERR_PARSE 1
#define BMP_ERR_INVALID 2
#define BMP_ERR_BUDGET 3
#define BMP_ERR_VERIFY 4

typedef struct bmp_instance bmp_instance;
typedef struct bmp_solution bmp_solution;

const char* bmp_last_error(void);
void bmp_string_free(char* s);

/* --- instances and solutions ------------------------------------------- */
int bmp_instance_parse(const char* text, bmp_instance** out);
int bmp_instance_emit(const bmp_instance* instance, char** out);
void bmp_instance_free(bmp_instance* instance);
int bmp_instance_probes(const bmp_instance* instance);

int bmp_solution_parse(const char* text, bmp_solution** out);
int bmp_solution_emit(const bmp_solution* solution, char** out);
void bmp_solution_free(bmp_solution* solution);
long long bmp_solution_cost(const bmp_solution* solution);

/* --- solving ------------------------------------------------------------ */
/* Randomized pipeline; report_out (optional) receives the flat key-value
 * ratio report. Deterministic for fixed (seed, trials). */
int bmp_solve(const bmp_instance* instance, uint64_t seed, int trials,
              bmp_solution** out, char** report_out);

/* Certified optimum for tiny instances; max_states 0 means the default. */
int bmp_solve_exact(const bmp_instance* instance, uint64_t max_states,
                    bmp_solution** out);

/* Exact 1D solver over a 1xN grid; pin nonzero keeps $/# dummies at the
 * ends when present. */
int bmp_solve_1d_exact(const bmp_instance* instance, uint64_t max_states,
                       int pin, bmp_solution** out);

/* Validates the solution and recomputes the cost by both accountings.
 * Returns BMP_OK or BMP_ERR_VERIFY with the first violation as the error. */
int bmp_verify(const bmp_instance* instance, const bmp_solution* solution);

int bmp_lower_bound(const bmp_instance* instance, long long* out);

/* LCS distance matrix, whitespace-separated integers, one row per line. */
int bmp_metric_text(const bmp_instance* instance, char** out);

/* --- rendering ----------------------------------------------------------- */
int bmp_render_text(const bmp_instance* instance, const bmp_solution* solution,
                    char** out);
int bmp_render_svg(const bmp_instance* instance, const bmp_solution* solution,
                   char** out);

/* --- generators and reductions ------------------------------------------ */
/* Uniform random instance: n probes of the given length over an alphabet of
 * `alphabet` single-letter tokens; square grid when n is a perfect square,
 * 1xN otherwise. */
int bmp_gen_random(int n, int len, int alphabet, uint64_t seed,
                   bmp_instance** out);

/* strings_csv: comma-separated binary strings, e.g. "010,100,00". */
int bmp_gen_scs_ipq(const char* strings_csv, int p, int q, bmp_instance** out,
                    bmp_solution** witness_out);
int bmp_ipq_solve(const char* strings_csv, int p, int q, long long* cost_excl,
                  long long* cost_incl, char** deposition_out);
int bmp_scs_extract(const char* strings_csv, int* length_out, char** witness_out);
int bmp_scs_dp(const char* strings_csv, int* length_out, char** witness_out);

/* graph_text: "n m" header plus one "i j" line per edge, 1-based. */
int bmp_gen_hampath(const char* graph_text, bmp_instance** out);
/* order: permutation of 1..n. achieves_out receives 0/1. */
int bmp_hampath_cert(const char* graph_text, const int* order, int order_len,
                     long long* cost_out, long long* bound_out, int* achieves_out);

int bmp_gen_lift2d(const bmp_instance* instance_1d, bmp_instance** out);

#ifdef __cplusplus
}
#endif

#endif
