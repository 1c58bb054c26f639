/* C interface to the flagcoh library. All strings are UTF-8; JSON results
 * are heap-allocated and must be released with fc_string_free. Partitions
 * and compositions are passed as comma-separated integers ("4,3,3,2"),
 * tableaux as semicolon-separated rows ("2,1,2,2;3,2,4;4,4,6;6,5"). */
#ifndef FLAGCOH_H
#define FLAGCOH_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FC_API __declspec(dllexport)
#else
#define FC_API __attribute__((visibility("default")))
#endif

typedef enum fc_status {
    FC_OK = 0,
    FC_INVALID_ARGUMENT = 1,
    FC_VERIFICATION_FAILED = 2,
    FC_INTERNAL_ERROR = 3
} fc_status;

typedef enum fc_family { FC_FAMILY_H = 0, FC_FAMILY_E = 1 } fc_family;

typedef struct fc_quotient fc_quotient;

FC_API const char* fc_version(void);
/* Message for the last non-OK status on this thread. After
 * FC_VERIFICATION_FAILED it is the witness JSON. */
FC_API const char* fc_last_error(void);
FC_API void fc_string_free(char* s);

/* Col^λ_μ (or Std^λ_μ when semistandard != 0) as a JSON array of tableaux. */
FC_API fc_status fc_enumerate(const char* lambda, const char* mu, int semistandard, char** out_json);
FC_API fc_status fc_tableau_degree(const char* mu, const char* tableau, int* out_degree);
/* {"columns","gamma","reduced","reduced_shape","reduced_content"} */
FC_API fc_status fc_reduce_tableau(const char* mu, const char* tableau, char** out_json);
FC_API fc_status fc_straighten(const char* mu, const char* tableau, char** out_json);
/* h(T) as a polynomial JSON list. */
FC_API fc_status fc_h_of_tableau(const char* mu, const char* tableau, char** out_json);
FC_API fc_status fc_betti(const char* lambda, const char* mu, char** out_json);
FC_API fc_status fc_components(const char* lambda, const char* mu, char** out_json);
/* DOT text when dot != 0, otherwise {"nodes","edges"} JSON. */
FC_API fc_status fc_poset(const char* lambda, const char* mu, int dot, char** out);

FC_API fc_status fc_quotient_build(const char* lambda, const char* mu, fc_family family, fc_quotient** out);
FC_API void fc_quotient_free(fc_quotient* q);
FC_API fc_status fc_quotient_hilbert(const fc_quotient* q, char** out_json);
FC_API fc_status fc_quotient_total_dimension(const fc_quotient* q, long* out);
FC_API fc_status fc_quotient_generators(const fc_quotient* q, char** out_json);
/* {"lambda","mu","hilbert","basis","family","certified"}; on failure the
 * report is still produced and the status is FC_VERIFICATION_FAILED. */
FC_API fc_status fc_quotient_certify(fc_quotient* q, char** out_json);
/* Coordinates of an S_μ-invariant polynomial (text form, x1..xd) in the
 * h(T) basis, as a JSON array of "p/q" strings. */
FC_API fc_status fc_quotient_normal_form(fc_quotient* q, const char* polynomial, char** out_json);
FC_API fc_status fc_quotient_structure_constants(fc_quotient* q, char** out_json);

FC_API fc_status fc_rel_equivalence(const char* lambda, const char* mu, int* out_equal);
FC_API fc_status fc_transfer(const char* lambda, const char* mu, char** out_json);
/* Basis certification, family equivalence and Betti = Hilbert together. */
FC_API fc_status fc_verify(const char* lambda, const char* mu, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* FLAGCOH_H */
