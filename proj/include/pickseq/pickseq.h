/* Public C interface to the picking-sequence fair-division library.
 *
 * All handles are opaque; destroy them with the matching *_free function.
 * Functions returning pickseq_status put a diagnostic message behind
 * pickseq_last_error() on failure. Strings returned through out-parameters
 * are heap-allocated JSON (or plain text) and must be released with
 * pickseq_string_free().
 *
 * Instance JSON:  {"n": int, "m": int, "utilities": [["p/q"|int, ...], ...],
 *                  "preferences": [[goodIdx, ...], ...]}   (preferences optional)
 * Sequence text:  comma-separated agents with optional '|' round separators,
 *                 e.g. "1,2,3|3,1".
 * Agents and goods are 1-indexed everywhere.
 */

#ifndef PICKSEQ_H
#define PICKSEQ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pickseq_status {
    PICKSEQ_OK = 0,
    PICKSEQ_ERROR_INVALID_ARGUMENT = 1,
    PICKSEQ_ERROR_PARSE = 2,
    PICKSEQ_ERROR_LIMIT = 3, /* a resource cap stopped an enumeration or search */
    PICKSEQ_ERROR_INTERNAL = 4
} pickseq_status;

typedef struct pickseq_instance pickseq_instance;
typedef struct pickseq_sequence pickseq_sequence;

const char* pickseq_version(void);

/* Thread-local message for the most recent failure. */
const char* pickseq_last_error(void);

void pickseq_string_free(char* text);

/* ---- instances ---- */

pickseq_status pickseq_instance_parse(const char* json_text, pickseq_instance** out);
void pickseq_instance_free(pickseq_instance* inst);
pickseq_status pickseq_instance_to_json(const pickseq_instance* inst, char** out_json);
int pickseq_instance_agents(const pickseq_instance* inst);
int pickseq_instance_goods(const pickseq_instance* inst);

/* ---- sequences ---- */

/* agents <= 0 infers n from the largest agent id in the text. */
pickseq_status pickseq_sequence_parse(const char* text, int agents, pickseq_sequence** out);
/* kind: "round-robin", "balanced-alternation", or "last-first". */
pickseq_status pickseq_sequence_make(const char* kind, int agents, int goods, pickseq_sequence** out);
void pickseq_sequence_free(pickseq_sequence* seq);
pickseq_status pickseq_sequence_format(const pickseq_sequence* seq, char** out_text);
int pickseq_sequence_agents(const pickseq_sequence* seq);
int pickseq_sequence_length(const pickseq_sequence* seq);
int pickseq_sequence_recursively_balanced(const pickseq_sequence* seq);

/* ---- operations (JSON in/out) ---- */

/* {"allocation": {"bundles": ..., "pick_log": ...},
    "welfare": {"per_agent": [...], "egalitarian": "p/q"},
    "ef1": {"satisfied": bool, "envier": int, "envied": int}} */
pickseq_status pickseq_simulate(const pickseq_instance* inst, const pickseq_sequence* seq,
                                char** out_json);

/* Per-agent exact MMS values with witness partitions. */
pickseq_status pickseq_mms(const pickseq_instance* inst, char** out_json);

/* Classification record (recursively balanced, regular/irregular, alpha,
   best/worst flags). */
pickseq_status pickseq_classify(const pickseq_sequence* seq, char** out_json);

/* Complete classification of R_{n,m}. */
pickseq_status pickseq_census(int agents, int goods, char** out_json);

/* generator: ew_zero | price_all | price_rb | mms_agent | mms_I1 | mms_I2 |
   ef1_counterexample.
   params_json: {"n": int, "m": int, "sequence": "text", "agent": int}
   (sequence/agent only where the generator needs them). */
pickseq_status pickseq_generate(const char* generator, const char* params_json, char** out_json);

/* theorem: prop_2_1, prop_3_1, thm_3_3, thm_3_4, lem_3_5, lem_3_6,
   lem_4_1 .. lem_4_7, thm_regular, thm_irregular, thm_best, thm_worst,
   cor_two_agents, example_3_7 — or "all" for the default suite.
   params_json: {"n": int, "m": int, "mode": "exhaustive-grid"|"random",
                 "grid": ["0","1","2"], "samples": int, "seed": int}; any field
   may be omitted; {} or NULL runs the theorem's default configurations.
   *out_pass is 1 when every executed check passed. */
pickseq_status pickseq_verify(const char* theorem, const char* params_json, int* out_pass,
                              char** out_json);

/* JSON array of all theorem ids understood by pickseq_verify. */
pickseq_status pickseq_theorems(char** out_json);

/* params_json: {"n": int, "m": int, "sequence": "text", "space": "pi"|"rb",
                 "samples": int, "seed": int, "mode": ...,"grid": [...]}. */
pickseq_status pickseq_price_search(const char* params_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* PICKSEQ_H */
