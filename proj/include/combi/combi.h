/*
 * C interface to the combi library.
 *
 * Objects cross the boundary as opaque handles owned by the caller and
 * released with the matching *_free function. Every fallible call returns a
 * combi_status; on failure the output handle is left untouched and
 * combi_last_error() describes the problem (per thread, valid until the next
 * failing call on that thread).
 *
 * Words and tableau rows are passed as (const int*, size_t) pairs. Tableaux
 * are lists of rows, bottom row first. Calls that produce a single word return
 * a one-element list.
 */
#ifndef COMBI_COMBI_H
#define COMBI_COMBI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define COMBI_API __declspec(dllexport)
#else
#  define COMBI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum combi_status {
  COMBI_OK = 0,
  COMBI_ERR_INVALID_ARGUMENT = 1,
  COMBI_ERR_BOUND_EXCEEDED = 2,
  COMBI_ERR_OVERFLOW = 3,
  COMBI_ERR_INTERNAL = 4
} combi_status;

typedef struct combi_partition combi_partition;
typedef struct combi_seq_list combi_seq_list;
typedef struct combi_expansion combi_expansion;
typedef struct combi_char_table combi_char_table;

COMBI_API const char* combi_version(void);
COMBI_API const char* combi_last_error(void);
COMBI_API const char* combi_status_name(combi_status status);

/* Partitions ------------------------------------------------------------ */

/* "5,2,1"; "" is the empty partition. */
COMBI_API combi_status combi_partition_parse(const char* text, combi_partition** out);
COMBI_API combi_status combi_partition_from_parts(const int* parts, size_t len, combi_partition** out);
COMBI_API void combi_partition_free(combi_partition* p);
COMBI_API size_t combi_partition_length(const combi_partition* p);
COMBI_API const int* combi_partition_parts(const combi_partition* p);
COMBI_API int combi_partition_size(const combi_partition* p);

COMBI_API combi_status combi_partitions_of(int n, combi_seq_list** out);
COMBI_API combi_status combi_count_syt(const combi_partition* p, int64_t* out);
COMBI_API combi_status combi_centralizer_order(const combi_partition* mu, int64_t* out);

/* Integer sequence lists ------------------------------------------------ */

COMBI_API combi_seq_list* combi_seq_list_new(void);
COMBI_API combi_status combi_seq_list_push(combi_seq_list* list, const int* data, size_t len);
COMBI_API void combi_seq_list_free(combi_seq_list* list);
COMBI_API size_t combi_seq_list_count(const combi_seq_list* list);
/* Pointer to element i (NULL if out of range); its length goes to *len. */
COMBI_API const int* combi_seq_list_at(const combi_seq_list* list, size_t i, size_t* len);

/* Words ----------------------------------------------------------------- */

/* "0,2,3,1"; "" is the empty word. */
COMBI_API combi_status combi_word_parse(const char* text, combi_seq_list** out);
COMBI_API combi_status combi_is_yamanouchi(const int* w, size_t len, int* out);
COMBI_API combi_status combi_yamanouchi_words(const combi_partition* mu, combi_seq_list** out);
COMBI_API combi_status combi_standardize(const int* w, size_t len, combi_seq_list** out);

/* Robinson-Schensted and plactic classes -------------------------------- */

COMBI_API combi_status combi_rs(const int* w, size_t len, combi_seq_list** p_rows, combi_seq_list** q_rows);
COMBI_API combi_status combi_rs_inverse(const combi_seq_list* p_rows, const combi_seq_list* q_rows,
                                        combi_seq_list** word);
COMBI_API combi_status combi_greene_row(const int* w, size_t len, int k, int* out);
COMBI_API combi_status combi_greene_col(const int* w, size_t len, int k, int* out);
COMBI_API combi_status combi_plactic_normal_form(const int* w, size_t len, combi_seq_list** out);
COMBI_API combi_status combi_plactic_equiv(const int* u, size_t ulen, const int* v, size_t vlen, int* out);

/* Schur functions and Littlewood-Richardson coefficients ---------------- */

COMBI_API combi_status combi_lr_coeff(const combi_partition* outer, const combi_partition* inner,
                                      const combi_partition* mu, int64_t* out);
/* Yamanouchi reading words of the LR tableaux, lexicographic order. */
COMBI_API combi_status combi_lr_tableaux(const combi_partition* outer, const combi_partition* inner,
                                         const combi_partition* mu, combi_seq_list** out);
COMBI_API combi_status combi_kostka(const combi_partition* lambda, const combi_partition* mu, int64_t* out);
COMBI_API combi_status combi_schur_to_monomial(const combi_partition* lambda, int num_vars, combi_expansion** out);
COMBI_API combi_status combi_schur_product(const combi_partition* lambda, const combi_partition* mu,
                                          unsigned threads, combi_expansion** out);
/* vertical == 0: s_lambda * s_(k); otherwise s_lambda * s_(1^k). */
COMBI_API combi_status combi_pieri(const combi_partition* lambda, int k, int vertical, combi_expansion** out);

COMBI_API void combi_expansion_free(combi_expansion* e);
COMBI_API int combi_expansion_degree(const combi_expansion* e);
/* Terms are in reverse-lexicographic order of their partitions. */
COMBI_API size_t combi_expansion_count(const combi_expansion* e);
COMBI_API const int* combi_expansion_key(const combi_expansion* e, size_t i, size_t* len);
COMBI_API int64_t combi_expansion_coeff(const combi_expansion* e, size_t i);

/* Symmetric group characters -------------------------------------------- */

COMBI_API combi_status combi_cycle_type(const int* images, size_t n, combi_partition** out);
COMBI_API combi_status combi_mn_coeff(const combi_partition* lambda, const combi_partition* mu, int64_t* out);
COMBI_API combi_status combi_char_table_new(int n, combi_char_table** out);
COMBI_API void combi_char_table_free(combi_char_table* t);
COMBI_API size_t combi_char_table_dim(const combi_char_table* t);
/* Row i and column i share label i. */
COMBI_API const int* combi_char_table_label(const combi_char_table* t, size_t i, size_t* len);
COMBI_API int64_t combi_char_table_value(const combi_char_table* t, size_t row, size_t col);

#ifdef __cplusplus
}
#endif

#endif /* COMBI_COMBI_H */
