#ifndef URFORCE_C_H
#define URFORCE_C_H

/* C surface over the forcing laboratory. All payloads are UTF-8 JSON
 * strings; every output string is heap-allocated and must be released with
 * urf_free. Return values are urf_status codes. A handle owns one session
 * (urelement pool, poset, named names, limits) and is not thread-safe. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct urf_session urf_session;

typedef enum urf_status {
  URF_OK = 0,
  URF_INVALID = 1, /* domain violation or counterexamples found */
  URF_PARSE = 2,   /* malformed JSON or wrong payload shape */
  URF_BUDGET = 3,  /* enumeration exceeded the size budget */
  URF_USAGE = 4    /* unknown command or bad arguments */
} urf_status;

urf_session* urf_session_new(void);
void urf_session_free(urf_session* s);

/* Loads {"pool":[...],"poset":{...},"names":{...},"config":{...}}. */
int urf_session_load(urf_session* s, const char* session_json, char** out_err);

int urf_session_set_budget(urf_session* s, unsigned long long budget);
int urf_session_set_depth(urf_session* s, int depth);

/* Runs one command. `request_json` is an object with a "cmd" field:
 *   validate  {"cmd":"validate","payload":<poset|pname|lname|ideal>}
 *   value     {"cmd":"value","name":<pname>,"filter":[ids]}
 *   forces    {"cmd":"forces","p":"id","formula":<f>,"mode":"star"|"semantic"}
 *   generics  {"cmd":"generics"} (or with "poset":<poset>)
 *   mix       {"cmd":"mix","map":{"p":<pname>,...}}
 *   purify    {"cmd":"purify","name":<pname>,"keep":[ids]}
 *   setpart   {"cmd":"setpart","name":<pname>}
 *   j         {"cmd":"j","name":<lname>}
 *   extension {"cmd":"extension","filter":[ids]}
 *   check     {"cmd":"check","suite":"forcing-theorem|mixtures|kernel|appendix|
 *                                     remark33|los|ideals|all"}
 *   diagram   {"cmd":"diagram","format":"json"|"dot"}
 * The result (or {"error":...}) is written to *out_json. */
int urf_eval(urf_session* s, const char* request_json, char** out_json);

void urf_free(char* p);
const char* urf_status_name(int code);

#ifdef __cplusplus
}
#endif

#endif /* URFORCE_C_H */
