/* C API for the partial inner automorphism toolkit.
 *
 * All objects are opaque handles; functions return pia_status and write
 * results through out-parameters. Strings returned through char** are
 * heap-allocated and must be released with pia_string_free. On any failure
 * pia_last_error() describes the most recent error in the calling thread.
 */
#ifndef PIA_H
#define PIA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pia_status {
  PIA_OK = 0,
  PIA_ERR_PARSE = 1,    /* malformed input text */
  PIA_ERR_INVALID = 2,  /* validation failed (non-associative table, bad spec, bad argument) */
  PIA_ERR_LIMIT = 3,    /* closure limit exceeded */
  PIA_ERR_PROPERTY = 4, /* a verified property failed */
  PIA_ERR_INTERNAL = 5
} pia_status;

typedef struct pia_semigroup pia_semigroup;

const char* pia_version(void);
const char* pia_last_error(void);
void pia_string_free(char* s);

/* construction */
pia_status pia_semigroup_from_table(const char* text, pia_semigroup** out);
pia_status pia_semigroup_from_name(const char* catalog_name, pia_semigroup** out);
pia_status pia_semigroup_from_rees(const char* rees_text, pia_semigroup** out);
void pia_semigroup_free(pia_semigroup* s);

int pia_semigroup_order(const pia_semigroup* s);
pia_status pia_semigroup_format(const pia_semigroup* s, char** out);

/* reports; json != 0 selects JSON output, text otherwise */
pia_status pia_report_validate(const pia_semigroup* s, const char* echo, int json, char** out);
pia_status pia_report_green(const pia_semigroup* s, const char* echo, int json, char** out);
pia_status pia_report_conj(const pia_semigroup* s, const char* echo, int json, char** out);
pia_status pia_report_inn(const pia_semigroup* s, const char* echo, long limit, int export_cayley,
                          int json, char** out);

/* verification; *failures receives the number of failed checks */
pia_status pia_report_tx_classify(int n, int full, int json, char** out);
pia_status pia_report_tx_verify(int n, int full, int json, char** out, int* failures);
pia_status pia_report_gset_inn(const char* gset_text, const char* echo, int json, char** out);
pia_status pia_report_gset_verify(const char* gset_text, const char* echo, int json, char** out,
                                  int* failures);
pia_status pia_report_rees_verify(const char* rees_text, const char* echo, int json, char** out,
                                  int* failures);
pia_status pia_report_verify_all(int max_order, int tx_max, int tx_full, int json, char** out,
                                 int* failures);

#ifdef __cplusplus
}
#endif

#endif /* PIA_H */
