/* C interface to the finite Gamma-semiring toolkit.
 *
 * Instances are opaque handles. Element sets cross the boundary as 64-bit
 * masks over element indices (bit i is the i-th label of M, or of Gamma
 * where a Gamma set is expected). Every call returns a gsr_status; on
 * failure gsr_last_error() holds a message for the calling thread.
 * Strings and arrays returned through out-parameters are owned by the
 * caller and released with gsr_string_free / gsr_masks_free.
 */
#ifndef GSR_GSR_H
#define GSR_GSR_H

#include <stddef.h>
#include <stdint.h>

#if defined(GSR_BUILDING_LIBRARY)
#define GSR_API __attribute__((visibility("default")))
#else
#define GSR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gsr_instance gsr_instance;

typedef enum gsr_status {
    GSR_OK = 0,
    GSR_MALFORMED_TABLE,
    GSR_BAD_BOUNDS,
    GSR_GAMMA_NOT_CLOSED,
    GSR_CAP_EXCEEDED,
    GSR_NOT_CLOSED,
    GSR_EMPTY_OPERAND,
    GSR_OWNER_MISMATCH,
    GSR_LENGTH_TOO_SHORT,
    GSR_NOT_SUB_GSR,
    GSR_NOT_GEN_BI,
    GSR_KIND_NOT_SATISFIED,
    GSR_UNKNOWN_STATEMENT,
    GSR_EQUIVALENCE_BROKEN,
    GSR_IO_ERROR,
    GSR_AXIOM_VIOLATION,
    GSR_INVALID_ARGUMENT,
    GSR_INTERNAL
} gsr_status;

typedef enum gsr_kind {
    GSR_KIND_SUB_GSR = 0,
    GSR_KIND_GAMMA_IDEAL,
    GSR_KIND_QUASI,
    GSR_KIND_BI,
    GSR_KIND_GEN_BI
} gsr_kind;

typedef struct gsr_budget {
    size_t full_enumeration_max_n;
    uint64_t max_evaluations;
    size_t max_witnesses; /* 0 keeps every witness */
    size_t enumeration_cap;
    size_t workers; /* 0 means one per hardware thread */
} gsr_budget;

GSR_API const char* gsr_status_name(gsr_status status);
GSR_API const char* gsr_last_error(void);

GSR_API void gsr_string_free(char* text);
GSR_API void gsr_masks_free(uint64_t* masks);
GSR_API void gsr_instance_free(gsr_instance* instance);

/* Loading and serialization. Loading validates all axioms. */
GSR_API gsr_status gsr_instance_load(const char* path, gsr_instance** out);
GSR_API gsr_status gsr_instance_from_json(const char* text, gsr_instance** out);
GSR_API gsr_status gsr_instance_to_json(const gsr_instance* m, char** out);
GSR_API gsr_status gsr_write_text(const char* path, const char* text);

/* Full axiom report for interchange text:
 * {"ok": bool, "violations": [{"axiom": id, "witness": "a=1 b=2 ..."}]}.
 * Structural problems are returned as GSR_MALFORMED_TABLE. */
GSR_API gsr_status gsr_validate_json(const char* text, char** out_report);

GSR_API gsr_status gsr_build_minmax(size_t k, size_t g, gsr_instance** out);
GSR_API gsr_status gsr_build_zmod(size_t n, const size_t* residues, size_t count, gsr_instance** out);
GSR_API gsr_status gsr_build_matrix(size_t p, size_t rows, size_t cols, gsr_instance** out);

GSR_API size_t gsr_instance_size(const gsr_instance* m);
GSR_API size_t gsr_instance_gamma_size(const gsr_instance* m);
GSR_API const char* gsr_instance_name(const gsr_instance* m);
GSR_API const char* gsr_instance_label(const gsr_instance* m, size_t index);
GSR_API const char* gsr_instance_gamma_label(const gsr_instance* m, size_t index);
GSR_API size_t gsr_mul(const gsr_instance* m, size_t a, size_t alpha, size_t b);
GSR_API size_t gsr_add(const gsr_instance* m, size_t a, size_t b);
GSR_API size_t gsr_gadd(const gsr_instance* m, size_t alpha, size_t beta);

/* Set literals: comma-separated labels, braces optional. */
GSR_API gsr_status gsr_set_parse(const gsr_instance* m, const char* text, int gamma, uint64_t* out);
GSR_API gsr_status gsr_set_format(const gsr_instance* m, uint64_t set, int gamma, char** out);

GSR_API gsr_status gsr_add_pointwise(const gsr_instance* m, uint64_t a, uint64_t b, uint64_t* out);
GSR_API gsr_status gsr_additive_closure(const gsr_instance* m, uint64_t s, uint64_t* out);
/* A Lambda B; lambda is a Gamma mask. */
GSR_API gsr_status gsr_gamma_product(const gsr_instance* m, uint64_t a, uint64_t lambda, uint64_t b,
                                     uint64_t* out);
GSR_API gsr_status gsr_chain_product(const gsr_instance* m, const uint64_t* sets, size_t count, uint64_t* out);

GSR_API gsr_status gsr_kind_parse(const char* text, gsr_kind* out);
GSR_API const char* gsr_kind_name(gsr_kind kind);

/* holds receives 0/1; when the kind fails and witness is non-null it
 * receives a description of the offending element. */
GSR_API gsr_status gsr_has_kind(const gsr_instance* m, uint64_t s, gsr_kind kind, int* holds, char** witness);
GSR_API gsr_status gsr_generated_gen_bi(const gsr_instance* m, uint64_t a, uint64_t* out);
GSR_API gsr_status gsr_sandwich(const gsr_instance* m, size_t a, uint64_t* out);
GSR_API gsr_status gsr_enumerate_ideals(const gsr_instance* m, gsr_kind kind, uint64_t** out, size_t* count);

/* record receives {"gb_simple", "only_whole_carrier", "sandwich_is_whole",
 * "generated_is_whole", "witness_element", "witness_sandwich", "proper_ideal"}
 * with labels; may be null. */
GSR_API gsr_status gsr_is_gb_simple(const gsr_instance* m, int* verdict, char** record);
/* smaller receives the first strictly smaller subset of the same kind, 0 if
 * minimal. */
GSR_API gsr_status gsr_is_minimal(const gsr_instance* m, uint64_t s, gsr_kind kind, int* minimal, uint64_t* smaller);

GSR_API gsr_status gsr_restrict(const gsr_instance* m, uint64_t s, gsr_instance** out);
GSR_API gsr_status gsr_are_isomorphic(const gsr_instance* a, const gsr_instance* b, int* result);
GSR_API gsr_status gsr_canonical(const gsr_instance* m, gsr_instance** out);

GSR_API void gsr_budget_default(gsr_budget* budget);
/* JSON array of registered statement ids. */
GSR_API gsr_status gsr_statement_ids(char** out);
/* Runs the listed statements (all when count is 0). report receives
 * {"instance", "statements": [...]}; text receives one line per statement;
 * any_fail is 1 when some statement has a counterexample. Null outputs are
 * skipped. */
GSR_API gsr_status gsr_verify(const gsr_instance* m, const char* const* ids, size_t count, const gsr_budget* budget,
                              char** report, char** text, int* any_fail);

GSR_API gsr_status gsr_comm_semigroup_count(size_t n, size_t* out);
/* Gamma-semiring classes of the given order, as a JSON array of interchange
 * objects in canonical order. */
GSR_API gsr_status gsr_enum_gamma_semirings(size_t n, size_t g, size_t workers, size_t cap_n, size_t cap_g,
                                            char** out);
/* Full census. Writes one file per class plus summary.json when out_dir is
 * non-null; summary receives the summary JSON. */
GSR_API gsr_status gsr_census(size_t max_n, size_t max_g, size_t workers, size_t cap_n, size_t cap_g,
                              const char* out_dir, char** summary);

#ifdef __cplusplus
}
#endif

#endif
