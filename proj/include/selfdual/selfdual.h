#ifndef SELFDUAL_SELFDUAL_H
#define SELFDUAL_SELFDUAL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes.  0 is success; the rest name the failure. */
typedef enum sd_status {
    SD_OK = 0,
    SD_ERR_INTERNAL = 1,
    SD_ERR_LENGTH_MISMATCH = 2,
    SD_ERR_UNSUPPORTED_ALPHABET,
    SD_ERR_UNSUPPORTED_FAMILY,
    SD_ERR_TOO_LARGE,
    SD_ERR_NON_RATIONAL_RESULT,
    SD_ERR_NEGATIVE_COEFFICIENT,
    SD_ERR_NOT_SELF_DUAL,
    SD_ERR_NOT_SELF_ORTHOGONAL,
    SD_ERR_PRECONDITION_FAILED,
    SD_ERR_CAP_EXCEEDED,
    SD_ERR_NO_MATCH,
    SD_ERR_NOT_IN_RING,
    SD_ERR_DEGREE_MISMATCH,
    SD_ERR_SINGULAR_G,
    SD_ERR_LENGTH_NOT_ADMISSIBLE,
    SD_ERR_ALPHABET_MISMATCH,
    SD_ERR_BAD_GLUE_LABEL,
    SD_ERR_NO_D2M_AT_COLUMNS,
    SD_ERR_NOT_NESTED,
    SD_ERR_NOT_TYPE_II,
    SD_ERR_NOT_A_DIVISOR,
    SD_ERR_PARSE,
    SD_ERR_IO,
    SD_ERR_UNKNOWN_NAME,
    SD_ERR_BAD_ARGUMENT
} sd_status;

typedef struct sd_code sd_code;

/* Name of a status ("NotSelfDual", ...) and the message of the last failure
   on this thread.  Both strings are owned by the library. */
const char* sd_status_name(int status);
const char* sd_last_error(void);

/* Strings returned through char** are malloc'd; release them here. */
void sd_string_free(char* s);

/* ---- codes ---- */
int sd_code_parse(const char* text, sd_code** out);
int sd_code_read_file(const char* path, sd_code** out);
int sd_code_catalog(const char* name, sd_code** out);
void sd_code_free(sd_code* c);
int sd_code_format(const sd_code* c, char** out);
int sd_code_length(const sd_code* c, int* out);
int sd_code_size(const sd_code* c, char** out);
int sd_code_is_self_dual(const sd_code* c, int* out);
int sd_code_dual(const sd_code* c, sd_code** out);

/* kind: hwe | swe | cwe.  metric: hamming | lee | norm.  cap bounds the number
   of enumerated codewords (0 = library default). */
int sd_code_enumerator(const sd_code* c, const char* kind, uint64_t cap, char** out);
int sd_code_min_distance(const sd_code* c, const char* metric, uint64_t cap, int* out);
/* JSON object {"weight": "count", ...} */
int sd_code_weight_distribution(const sd_code* c, const char* metric, uint64_t cap, char** out_json);
/* JSON report: family, self-duality, type, distances, enumerators, shadow, extremality.
   Enumeration-based fields are skipped (with a note) above cap; the shadow word
   list is limited to codes of at most 2^18 words. */
int sd_code_analyze(const sd_code* c, uint64_t cap, char** out_json);
/* JSON: shadow size, enumerator from the word set and from the transform, residue check.
   cap bounds the words each route walks, twice the code size; 0 means 2^19. */
int sd_code_shadow(const sd_code* c, uint64_t cap, char** out_json);
/* Gray image as binary words, one per line. */
int sd_code_gray(const sd_code* c, uint64_t cap, char** out);

/* ---- enumerator transforms ---- */
/* size: decimal size of the code (needed for the scale). */
int sd_macwilliams(const char* poly, const char* family, const char* kind, const char* size, char** out);
int sd_shadow_transform(const char* poly, const char* family, const char* kind, char** out);

/* ---- invariants ---- */
/* group: a named group (G2q, G4, G16, G192, G48, D12, G120) or generator
   matrices "a,b;c,d | ..." in the entry mini-language.  JSON result. */
int sd_molien(const char* group, int q, int terms, const char* denoms, char** out_json);
int sd_extremal(int n, const char* family, char** out_json);
int sd_gleason_decompose(const char* poly, const char* ring, char** out_json);

/* ---- bounds and mass ---- */
int sd_bounds(int n, const char* family, char** out_json);
/* aut_orders: whitespace or newline separated list, may be NULL */
int sd_mass(int n, const char* family, const char* aut_orders, char** out_json);

/* ---- catalog ---- */
int sd_catalog_list(char** out_json);
int sd_catalog_entry(const char* name, char** out_json);

/* ---- constructions ---- */
/* components "d6,d6,d6"; glue "abc,cab,bbb" (may be empty).  self_dual may be NULL. */
int sd_construct_glue(const char* components, const char* glue, sd_code** out, int* self_dual);
int sd_construct_subtract(const sd_code* c, const int* cols, int ncols, sd_code** out);
int sd_construct_lift(const sd_code* c, sd_code** out);
int sd_construct_z4_pair(const sd_code* a, const sd_code* b, sd_code** out);
int sd_construct_graeffe(const char* poly, int n, char** out);
/* alphabet token (F2, F3, Z4, ...), generator polynomial, length n */
int sd_construct_cyclic(const char* alphabet, const char* poly, int n, int extended, sd_code** out);
/* form D1 | D2, hex first row */
int sd_construct_dc(const char* form, const char* hex, int n, sd_code** out);
int sd_construct_shorten(const sd_code* c, int coord, sd_code** out);
int sd_construct_direct_sum(const sd_code* a, const sd_code* b, sd_code** out);
int sd_construct_extend(const sd_code* c, const char* alphabet, sd_code** out);

#ifdef __cplusplus
}
#endif

#endif
