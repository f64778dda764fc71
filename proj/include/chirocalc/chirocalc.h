#ifndef CHIROCALC_H
#define CHIROCALC_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(CHIROCALC_BUILDING)
#define CHC_API __attribute__((visibility("default")))
#else
#define CHC_API
#endif

typedef struct chc_context chc_context;
typedef struct chc_chirotope chc_chirotope;
typedef struct chc_poly chc_poly;

typedef enum chc_status {
  CHC_OK = 0,
  CHC_E_GENERAL_POSITION,
  CHC_E_TOO_SMALL,
  CHC_E_INVALID_TRIPLE,
  CHC_E_NOT_ROOTED,
  CHC_E_SHARED_ENDPOINT,
  CHC_E_ORACLE_TOO_LARGE,
  CHC_E_INVARIANT,
  CHC_E_EMPTY_INPUT,
  CHC_E_OUT_OF_RANGE,
  CHC_E_TOO_LARGE,
  CHC_E_CONSTRUCTION_FAILED,
  CHC_E_NUMERICAL,
  CHC_E_MALFORMED_FILE,
  CHC_E_PARSE,
  CHC_E_UNKNOWN_IDENTIFIER,
  CHC_E_BAD_ARITY,
  CHC_E_IO,
  CHC_E_INVALID_ARGUMENT,
  CHC_E_INTERNAL
} chc_status;

typedef enum chc_method { CHC_METHOD_BRUTE = 0, CHC_METHOD_POLY = 1 } chc_method;
typedef enum chc_format { CHC_FORMAT_JSON = 0, CHC_FORMAT_TEXT = 1, CHC_FORMAT_CSV = 2 } chc_format;
typedef enum chc_which { CHC_POLY_P = 0, CHC_POLY_Q = 1 } chc_which;
typedef enum chc_metric { CHC_METRIC_WEAK = 0, CHC_METRIC_COUNT = 1 } chc_metric;

/* Strings returned through char** are owned by the caller: release them with
   chc_string_free. Handles are released with their own _free function. */

CHC_API chc_context* chc_context_new(void);
CHC_API void chc_context_free(chc_context* ctx);
CHC_API chc_status chc_set_oracle_cap(chc_context* ctx, int cap);
CHC_API chc_status chc_set_threads(chc_context* ctx, int threads);
CHC_API chc_status chc_set_precision(chc_context* ctx, int digits);

/* Message of the last failed call on ctx; empty after a success. */
CHC_API const char* chc_last_error(const chc_context* ctx);
CHC_API const char* chc_status_name(chc_status status);
CHC_API void chc_string_free(char* s);

/* .chi or .pts file; root < 0 takes the file's root line, if any. */
CHC_API chc_status chc_chirotope_load(chc_context* ctx, const char* path, int root, chc_chirotope** out);
/* Materialized expression, e.g. "meet(triangle, triangle)". */
CHC_API chc_status chc_chirotope_eval(chc_context* ctx, const char* expr, chc_chirotope** out);
CHC_API void chc_chirotope_free(chc_chirotope* chi);
CHC_API int chc_chirotope_size(const chc_chirotope* chi);
/* -1 when unrooted. */
CHC_API int chc_chirotope_root(const chc_chirotope* chi);
CHC_API chc_status chc_chirotope_sign(chc_context* ctx, const chc_chirotope* chi, int x, int y, int z, int* sign);
CHC_API chc_status chc_chirotope_write(chc_context* ctx, const chc_chirotope* chi, char** text);

/* *ok is 1 when no violation exists; report is JSON with the violating tuples. */
CHC_API chc_status chc_check_axioms(chc_context* ctx, const chc_chirotope* chi, int* ok, char** report);

/* Triangulation count of a chirotope by enumeration, as a decimal string. */
CHC_API chc_status chc_count_chirotope(chc_context* ctx, const chc_chirotope* chi, int drop_root, char** count);
/* Triangulation (or, with weak != 0, weak triangulation) count of an
   expression. drop_root requires CHC_METHOD_BRUTE. */
CHC_API chc_status chc_count_expr(chc_context* ctx, const char* expr, chc_method method, int drop_root, int weak,
                                  char** count);

/* P of an expression by the given method. */
CHC_API chc_status chc_poly_eval(chc_context* ctx, const char* expr, chc_method method, chc_poly** out);
CHC_API void chc_poly_free(chc_poly* p);
CHC_API chc_status chc_poly_render(chc_context* ctx, const chc_poly* p, chc_which which, chc_format format,
                                   char** out);
/* Count of P at u = v = 1 (weak triangulations) or of Q at u = 1. */
CHC_API chc_status chc_poly_total(chc_context* ctx, const chc_poly* p, chc_which which, char** count);

/* Rows k = 3..kmax of k,exact,estimate,ratio; CSV or JSON. */
CHC_API chc_status chc_dc_table(chc_context* ctx, int kmax, chc_format format, char** out);
/* JSON report at a rational x in (0, 1/12) with a series of `terms` terms. */
CHC_API chc_status chc_kernel_report(chc_context* ctx, const char* x, int terms, char** json);

/* Ranked CSV record,root,score over an order-type database. Rejected records
   (lenient mode) are listed in notes, one per line. */
CHC_API chc_status chc_search(chc_context* ctx, const char* db_path, int n, int width, int levels, int top,
                              chc_metric metric, int lenient, char** csv, char** notes);

#ifdef __cplusplus
}
#endif

#endif
