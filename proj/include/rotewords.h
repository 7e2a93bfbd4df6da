/* rotewords: exact critical exponents and recurrence functions of
 * complementary symmetric Rote sequences, driven by the directive sequence of
 * the associated standard Sturmian sequence.
 *
 * Directive specs are written START ':' PRE [ '|' PERIOD ], where START is G
 * or D and PRE/PERIOD are comma-separated positive integers, e.g. "G:1|2,2".
 * An absent or empty PERIOD denotes a finite truncation usable only by
 * prefix-level operations.
 *
 * All outputs are heap strings owned by the caller; release them with
 * rw_string_free.  Calls never throw across this boundary; failures return a
 * status code and leave a message in rw_last_error().
 */

#ifndef ROTEWORDS_H
#define ROTEWORDS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rw_spec rw_spec;

typedef enum rw_status {
  RW_OK = 0,
  RW_ERR_PARSE = 1,
  RW_ERR_DOMAIN = 2,
  RW_ERR_MODE = 3,              /* operation needs exact mode (nonempty period) */
  RW_ERR_SCOPE = 4,             /* classifier asked outside its proved family */
  RW_ERR_TRUNCATION = 5,        /* finite directive or prefix margin exhausted */
  RW_ERR_INSUFFICIENT_DATA = 6, /* oracle scan saw too few occurrences */
  RW_ERR_INTERNAL = 7
} rw_status;

/* message describing the most recent failure on this thread */
const char* rw_last_error(void);
void rw_string_free(char* s);

rw_status rw_spec_parse(const char* text, rw_spec** out);
void rw_spec_free(rw_spec* spec);
rw_status rw_spec_render(const rw_spec* spec, char** out);
rw_status rw_spec_canonical(const rw_spec* spec, char** out);

/* '0'/'1' prefix of the Sturmian sequence, or of the associated Rote sequence
 * (first letter v0) when rote is nonzero */
rw_status rw_generate(const rw_spec* spec, uint64_t length, int rote, int v0, char** out);

/* JSON: {"spec","surd":{"a","b","c","d"},"pretty","decimal","attained",
 *        "truncated","witness","limit_of"} */
rw_status rw_critical_exponent(const rw_spec* spec, char** json_out);
rw_status rw_sturmian_critical_exponent(const rw_spec* spec, char** json_out);

/* decimal rendering of (a + b sqrt(d))/c to the requested digit count;
 * components are decimal strings */
rw_status rw_surd_decimal(const char* a, const char* b, const char* c, const char* d,
                          int digits, char** out);

/* JSON: {"n","N","m","len_b","len_r","len_s","parikh_b","parikh_r",
 *        "parikh_s","stable_r","stable_s"} */
rw_status rw_bispecial(const rw_spec* spec, uint64_t n, char** json_out);

/* JSON: {"case","A","B","C","lengths"} */
rw_status rw_return_triple(const rw_spec* spec, uint64_t n, char** json_out);

/* JSON: {"n","level","m","prev_is_bispecial_length","members"} */
rw_status rw_shortest_bispecials(const rw_spec* spec, uint64_t n, char** json_out);

/* decimal value of R_v(n+1) for Rote, R_u(n) for Sturmian */
rw_status rw_rote_recurrence(const rw_spec* spec, uint64_t n, char** decimal_out);
rw_status rw_sturmian_recurrence(const rw_spec* spec, uint64_t n, char** decimal_out);

/* CSV: N,interval_lo,interval_hi,case_tag,L */
rw_status rw_recurrence_table_csv(const rw_spec* spec, uint64_t n_max, char** csv_out);

/* CSV: N,a_N,p_N,q_N,qp_N for N = -1 .. n_max */
rw_status rw_convergents_csv(const rw_spec* spec, int64_t n_max, char** csv_out);

/* family 1..4 of the small-exponent classification, 0 when none applies */
rw_status rw_classify_small(const rw_spec* spec, int* family_out);

/* JSON: {"verdict","blocks":[{"tag","content","repeats_forever"}]} */
rw_status rw_below_seven_halves(const rw_spec* spec, char** json_out);

/* CSV: spec,cr_a,cr_b,cr_c,cr_d,cr_decimal,attained,witness
 * start_filter: -1 both, 0 G only, 1 D only */
rw_status rw_sweep_csv(uint32_t max_preperiod, uint32_t max_period, uint32_t max_exponent,
                       int start_filter, char** csv_out);

/* JSON array of {"check","pass","detail"}; all_pass set to 0/1 */
rw_status rw_verify(const rw_spec* spec, uint32_t depth, char** json_out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* ROTEWORDS_H */
