#ifndef ORDPAT_H
#define ORDPAT_H

/* ordpat — ordinal pattern representations, encodings and time-series
 * analysis behind a plain C interface.
 *
 * Conventions:
 *   - Pattern tuples are arrays of length d with one-based entries.
 *   - Rank 1 is the minimum (increasing convention).
 *   - Every fallible call returns an ordpat_status; output parameters are
 *     written only on ORDPAT_OK. ordpat_last_error() describes the most
 *     recent failure on the calling thread.
 *   - Objects returned through ordpat_*_create/read functions are owned by
 *     the caller and released with the matching ordpat_*_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ORDPAT_API __declspec(dllexport)
#else
#define ORDPAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ordpat_status {
    ORDPAT_OK = 0,
    ORDPAT_ERR_LENGTH = 1,          /* window/series length or d out of range */
    ORDPAT_ERR_TIE = 2,             /* tied values where distinct ones are required */
    ORDPAT_ERR_INVALID_PATTERN = 3, /* tuple is not a valid pattern */
    ORDPAT_ERR_INPUT = 4,           /* NaN or infinity in the data */
    ORDPAT_ERR_RANGE = 5,           /* code or argument outside its range */
    ORDPAT_ERR_OVERFLOW = 6,        /* d! exceeds 64 bits (d > 20) */
    ORDPAT_ERR_MIXED_CONFIG = 7,    /* codes do not match the configuration */
    ORDPAT_ERR_EMPTY = 8,           /* empty distribution */
    ORDPAT_ERR_LENGTH_MISMATCH = 9, /* paired series of unequal length */
    ORDPAT_ERR_IO = 10,             /* file not readable */
    ORDPAT_ERR_PARSE = 11,          /* malformed CSV content */
    ORDPAT_ERR_EMPTY_COLUMN = 12,   /* CSV column holds no data rows */
    ORDPAT_ERR_ARGUMENT = 13,       /* null pointer or invalid enum value */
    ORDPAT_ERR_NOMEM = 14,
    ORDPAT_ERR_INTERNAL = 15
} ordpat_status;

typedef enum ordpat_scheme {
    ORDPAT_SCHEME_KSE = 0,
    ORDPAT_SCHEME_LEHMER = 1
} ordpat_scheme;

typedef enum ordpat_ties {
    ORDPAT_TIES_SKIP = 0,
    ORDPAT_TIES_PERTURB = 1,
    ORDPAT_TIES_STABLE = 2,
    ORDPAT_TIES_GENERALIZED = 3
} ordpat_ties;

typedef enum ordpat_rep {
    ORDPAT_REP_RANK = 0,
    ORDPAT_REP_PERMUTATION = 1,
    ORDPAT_REP_INVERSION = 2
} ordpat_rep;

ORDPAT_API const char* ordpat_version(void);

/* Message for the last failing call on this thread; never NULL. */
ORDPAT_API const char* ordpat_last_error(void);

/* Stable identifier of a status value, e.g. "ORDPAT_ERR_TIE". */
ORDPAT_API const char* ordpat_status_name(ordpat_status status);

/* ---- tuple representations (tie-free windows) -------------------------- */

ORDPAT_API ordpat_status ordpat_rank_pattern(const double* values, int32_t d, int32_t* ranks);
ORDPAT_API ordpat_status ordpat_permutation_pattern(const double* values, int32_t d,
                                                    int32_t* indices);
/* comparisons (optional, may be NULL) receives the number of pairwise value
 * comparisons spent, always (d*d-d)/2. */
ORDPAT_API ordpat_status ordpat_inversion_pattern(const double* values, int32_t d,
                                                  int32_t* counts, uint64_t* comparisons);

ORDPAT_API ordpat_status ordpat_rank_to_permutation(const int32_t* ranks, int32_t d,
                                                    int32_t* indices);
ORDPAT_API ordpat_status ordpat_permutation_to_rank(const int32_t* indices, int32_t d,
                                                    int32_t* ranks);
ORDPAT_API ordpat_status ordpat_rank_to_inversion(const int32_t* ranks, int32_t d,
                                                  int32_t* counts);
ORDPAT_API ordpat_status ordpat_inversion_to_permutation(const int32_t* counts, int32_t d,
                                                         int32_t* indices);

/* ---- space and time inversion ------------------------------------------ */

ORDPAT_API ordpat_status ordpat_invert_space(ordpat_rep rep, const int32_t* in, int32_t d,
                                             int32_t* out);
ORDPAT_API ordpat_status ordpat_invert_time(ordpat_rep rep, const int32_t* in, int32_t d,
                                            int32_t* out);

/* ---- integer encodings -------------------------------------------------- */

ORDPAT_API ordpat_status ordpat_factorial(int32_t d, uint64_t* out);
ORDPAT_API ordpat_status ordpat_encode(const int32_t* counts, int32_t d, ordpat_scheme scheme,
                                       uint64_t* code);
ORDPAT_API ordpat_status ordpat_decode(uint64_t code, int32_t d, ordpat_scheme scheme,
                                       int32_t* counts);
/* Code of the space-inverted pattern under the same scheme; for the Lehmer
 * scheme code + reflected code == d! - 1. */
ORDPAT_API ordpat_status ordpat_reflect_code(uint64_t code, int32_t d, ordpat_scheme scheme,
                                             uint64_t* out);
ORDPAT_API ordpat_status ordpat_code_to_rank(uint64_t code, int32_t d, ordpat_scheme scheme,
                                             int32_t* ranks);

/* ---- ties ---------------------------------------------------------------- */

ORDPAT_API ordpat_status ordpat_has_ties(const double* values, int32_t d, int32_t* out);
ORDPAT_API ordpat_status ordpat_stable_rank(const double* values, int32_t d, int32_t* ranks);
/* Writes d tie-free stand-in values whose strict order keeps every non-tied
 * pair of the input and resolves tied groups by a seeded uniform shuffle. */
ORDPAT_API ordpat_status ordpat_perturb_resolve(const double* values, int32_t d, uint64_t seed,
                                                double* out);
ORDPAT_API ordpat_status ordpat_generalized_rank(const double* values, int32_t d, int32_t* psi,
                                                 int32_t* m);
ORDPAT_API ordpat_status ordpat_fubini(int32_t d, uint64_t* out);
/* Index of a generalized pattern in the lexicographic enumeration of all
 * fubini(d) patterns (2 <= d <= 7), and its inverse. */
ORDPAT_API ordpat_status ordpat_generalized_code(const int32_t* psi, int32_t d, uint64_t* code);
ORDPAT_API ordpat_status ordpat_generalized_pattern(uint64_t code, int32_t d, int32_t* psi,
                                                    int32_t* m);

/* ---- code table ---------------------------------------------------------- */

typedef struct ordpat_table ordpat_table;

/* All d! patterns of length d (2 <= d <= 9) in lexicographic rank order,
 * with inversion counts and both integer codes per row. */
ORDPAT_API ordpat_status ordpat_table_create(int32_t d, ordpat_table** out);
ORDPAT_API void ordpat_table_free(ordpat_table* table);
ORDPAT_API uint64_t ordpat_table_rows(const ordpat_table* table);
/* Any of rank/inversion/kse/lehmer may be NULL. rank and inversion point to
 * arrays of length d. */
ORDPAT_API ordpat_status ordpat_table_row(const ordpat_table* table, uint64_t row, int32_t* rank,
                                          int32_t* inversion, uint64_t* kse, uint64_t* lehmer);

/* ---- series and extraction ------------------------------------------------ */

typedef struct ordpat_config {
    int32_t d;            /* pattern length, >= 2 */
    int32_t lag;          /* spacing between window entries, >= 1 */
    ordpat_ties ties;     /* tie strategy */
    ordpat_scheme scheme; /* code scheme (ignored under GENERALIZED) */
    uint64_t seed;        /* tie-break seed (used under PERTURB) */
} ordpat_config;

/* d=3, lag=1, stable ties, Lehmer codes, seed 0. */
ORDPAT_API ordpat_config ordpat_config_default(void);

typedef struct ordpat_series ordpat_series;

/* Reads one column of an RFC-4180 CSV file. Pass column_name == NULL to
 * select by zero-based column_index; has_header controls whether the first
 * record is skipped (it is required when selecting by name). */
ORDPAT_API ordpat_status ordpat_series_read_csv(const char* path, const char* column_name,
                                                int32_t column_index, int32_t has_header,
                                                ordpat_series** out);
ORDPAT_API void ordpat_series_free(ordpat_series* series);
ORDPAT_API uint64_t ordpat_series_size(const ordpat_series* series);
ORDPAT_API const double* ordpat_series_values(const ordpat_series* series);

typedef struct ordpat_codes ordpat_codes;

/* One code per window start t = 0, ..., n-1-(d-1)*lag. Windows dropped by
 * the skip strategy are absent. */
ORDPAT_API ordpat_status ordpat_extract(const double* series, uint64_t n,
                                        const ordpat_config* config, ordpat_codes** out);
ORDPAT_API void ordpat_codes_free(ordpat_codes* codes);
ORDPAT_API uint64_t ordpat_codes_count(const ordpat_codes* codes);
/* present receives 0 or 1; code is written only for present entries. */
ORDPAT_API ordpat_status ordpat_codes_get(const ordpat_codes* codes, uint64_t index,
                                          int32_t* present, uint64_t* code);
/* Pairwise value comparisons spent; (d*d-d)/2 per window on tie-free data. */
ORDPAT_API uint64_t ordpat_codes_comparisons(const ordpat_codes* codes);

/* ---- pattern distributions ------------------------------------------------ */

typedef struct ordpat_dist ordpat_dist;

ORDPAT_API ordpat_status ordpat_dist_create(const ordpat_codes* codes, ordpat_dist** out);
/* Distribution from raw codes; entries < 0 mark absent windows. The codes
 * must fit the configuration's code space. */
ORDPAT_API ordpat_status ordpat_dist_from_codes(const int64_t* codes, uint64_t n,
                                                const ordpat_config* config, ordpat_dist** out);
ORDPAT_API void ordpat_dist_free(ordpat_dist* dist);
ORDPAT_API uint64_t ordpat_dist_total(const ordpat_dist* dist);
ORDPAT_API uint64_t ordpat_dist_skipped(const ordpat_dist* dist);
/* Number of codes of the configuration's code space: d! or fubini(d). */
ORDPAT_API ordpat_status ordpat_dist_code_space(const ordpat_dist* dist, uint64_t* out);
/* Distinct observed codes, iterable in ascending code order. */
ORDPAT_API uint64_t ordpat_dist_size(const ordpat_dist* dist);
ORDPAT_API ordpat_status ordpat_dist_row(const ordpat_dist* dist, uint64_t index, uint64_t* code,
                                         uint64_t* count);
ORDPAT_API ordpat_status ordpat_dist_count(const ordpat_dist* dist, uint64_t code,
                                           uint64_t* count);
/* Shannon entropy in nats; ORDPAT_ERR_EMPTY when no windows were counted. */
ORDPAT_API ordpat_status ordpat_dist_entropy(const ordpat_dist* dist, double* out);

/* ---- ordinal pattern dependence ------------------------------------------- */

typedef struct ordpat_opd_report {
    int32_t d;
    double alpha_pos;    /* standardized coincidence of equal codes */
    double alpha_neg;    /* same against space-reflected codes */
    double signed_value; /* alpha_pos if alpha_pos >= alpha_neg, else -alpha_neg */
    uint64_t n_windows;  /* windows present in both series */
    int32_t degenerate;  /* 1 when a side's expected coincidence is 1 or no
                            window survived */
} ordpat_opd_report;

ORDPAT_API ordpat_status ordpat_opd(const double* x, const double* y, uint64_t n,
                                    const ordpat_config* config, ordpat_opd_report* out);

#ifdef __cplusplus
}
#endif

#endif /* ORDPAT_H */
