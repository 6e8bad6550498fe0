/*
 * C interface to the dmaxsat library.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Counts cross the boundary as decimal strings.
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with dmaxsat_string_free.
 *
 * Functions return a dmaxsat_status; on anything but DMAXSAT_OK the message
 * of the failure is available from dmaxsat_last_error() on the same thread,
 * and out-parameters are left untouched.
 */
#ifndef DMAXSAT_H
#define DMAXSAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define DMAXSAT_API __declspec(dllexport)
#else
#  define DMAXSAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dmaxsat_status {
  DMAXSAT_OK = 0,
  DMAXSAT_ERR_PARSE = 1,
  DMAXSAT_ERR_SCOPE = 2,
  DMAXSAT_ERR_RANGE = 3,
  DMAXSAT_ERR_ARITY = 4,
  DMAXSAT_ERR_LIMIT = 5,
  DMAXSAT_ERR_INVALID_ARGUMENT = 6,
  DMAXSAT_ERR_INTERNAL = 7
} dmaxsat_status;

typedef enum dmaxsat_format {
  DMAXSAT_FORMAT_AUTO = 0,
  DMAXSAT_FORMAT_CIRCUIT = 1,
  DMAXSAT_FORMAT_DIMACS = 2
} dmaxsat_format;

typedef enum dmaxsat_engine {
  DMAXSAT_ENGINE_FAST = 0,
  DMAXSAT_ENGINE_BRUTE = 1
} dmaxsat_engine;

typedef enum dmaxsat_mutation {
  DMAXSAT_MUTATION_NONE = 0,
  DMAXSAT_MUTATION_PACK_PAIR = 1
} dmaxsat_mutation;

typedef struct dmaxsat_formula dmaxsat_formula;
typedef struct dmaxsat_query dmaxsat_query;
typedef struct dmaxsat_instance dmaxsat_instance;
typedef struct dmaxsat_witness dmaxsat_witness;

DMAXSAT_API const char* dmaxsat_last_error(void);
DMAXSAT_API const char* dmaxsat_status_name(dmaxsat_status status);
DMAXSAT_API void dmaxsat_string_free(char* s);

/* Formulas */
DMAXSAT_API dmaxsat_status dmaxsat_formula_parse(const char* text, dmaxsat_format format,
                                                 dmaxsat_formula** out);
DMAXSAT_API void dmaxsat_formula_free(dmaxsat_formula* f);
DMAXSAT_API dmaxsat_status dmaxsat_formula_print(const dmaxsat_formula* f, char** out);
DMAXSAT_API uint32_t dmaxsat_formula_scope(const dmaxsat_formula* f);
DMAXSAT_API size_t dmaxsat_formula_size(const dmaxsat_formula* f);

/* Counting. brute_limit applies to DMAXSAT_ENGINE_BRUTE; 0 selects the default. */
DMAXSAT_API dmaxsat_status dmaxsat_count(const dmaxsat_formula* f, dmaxsat_engine engine,
                                         uint32_t brute_limit, char** out_count);
/* count >= bound; the fast engine stops as soon as the bound is reached. */
DMAXSAT_API dmaxsat_status dmaxsat_threshold(const dmaxsat_formula* f, dmaxsat_engine engine,
                                             uint32_t brute_limit, const char* bound,
                                             int* out_holds);

/* Gadgets */
DMAXSAT_API dmaxsat_status dmaxsat_pack(const dmaxsat_formula* const* operands, size_t count,
                                        dmaxsat_formula** out);
DMAXSAT_API dmaxsat_status dmaxsat_less_than(uint32_t n, const char* c, dmaxsat_formula** out);
DMAXSAT_API dmaxsat_status dmaxsat_psi(const dmaxsat_formula* f, const char* delta,
                                       dmaxsat_formula** out);
DMAXSAT_API dmaxsat_status dmaxsat_k_value(uint32_t n, const char* delta, const char* x,
                                           char** out_value);

/* Reduction. A query holds the threshold formula, its bound and an audit log
 * (JSON lines). */
DMAXSAT_API dmaxsat_status dmaxsat_eq_to_geq(const dmaxsat_formula* h, const char* y,
                                             dmaxsat_query** out);
DMAXSAT_API dmaxsat_status dmaxsat_combine(const dmaxsat_formula* const* formulas,
                                           const char* const* claims, size_t count,
                                           dmaxsat_query** out);
DMAXSAT_API void dmaxsat_query_free(dmaxsat_query* q);
DMAXSAT_API dmaxsat_status dmaxsat_query_formula(const dmaxsat_query* q, dmaxsat_formula** out);
DMAXSAT_API dmaxsat_status dmaxsat_query_bound(const dmaxsat_query* q, char** out);
DMAXSAT_API dmaxsat_status dmaxsat_query_audit(const dmaxsat_query* q, char** out);
DMAXSAT_API dmaxsat_status dmaxsat_query_verify(const dmaxsat_query* q, int* out_holds);

/* Solver. blocks is a declaration such as "x: 1 3 / y: 2"; bound may be NULL. */
DMAXSAT_API dmaxsat_status dmaxsat_instance_new(const dmaxsat_formula* f, const char* blocks,
                                                const char* bound, dmaxsat_instance** out);
DMAXSAT_API void dmaxsat_instance_free(dmaxsat_instance* inst);
/* *out is set to NULL when no chooser assignment reaches the bound. */
DMAXSAT_API dmaxsat_status dmaxsat_dmax(const dmaxsat_instance* inst, int pruned,
                                        dmaxsat_witness** out);
DMAXSAT_API dmaxsat_status dmaxsat_maxcount(const dmaxsat_instance* inst, dmaxsat_witness** out);
DMAXSAT_API void dmaxsat_witness_free(dmaxsat_witness* w);
/* "x1=1 x3=0" in block order. */
DMAXSAT_API dmaxsat_status dmaxsat_witness_assignment(const dmaxsat_witness* w, char** out);
DMAXSAT_API dmaxsat_status dmaxsat_witness_count(const dmaxsat_witness* w, char** out);

/* Randomized property suites. budget < 0 runs the default sizes. */
DMAXSAT_API dmaxsat_status dmaxsat_selftest(uint64_t seed, int64_t budget,
                                            dmaxsat_mutation mutation, char** out_report,
                                            int* out_passed);

#ifdef __cplusplus
}
#endif

#endif /* DMAXSAT_H */
