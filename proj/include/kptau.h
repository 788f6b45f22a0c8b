/* kptau: exact constructors and verifiers for polynomial tau-functions of the
 * KP / MKP / n-KdV hierarchies.
 *
 * All payloads cross this boundary as JSON strings in the library's canonical
 * formats; every number is an exact rational string "p/q". Strings returned
 * through char** are heap-allocated and must be released with
 * kptau_string_free. Handles are opaque and freed with their _free function.
 */
#ifndef KPTAU_H
#define KPTAU_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kptau_rc {
  KPTAU_OK = 0,     /* success; for verifiers: the identity holds */
  KPTAU_FAIL = 1,   /* verification ran and failed (verdict has a witness) */
  KPTAU_EINVAL = 2, /* malformed input or violated precondition */
  KPTAU_ERROR = 3   /* internal error */
} kptau_rc;

typedef struct kptau_tau kptau_tau;     /* polynomial tau-function + level */
typedef struct kptau_chain kptau_chain; /* consecutive tau-functions */

const char* kptau_version(void);
/* Message for the most recent failing call on this thread. */
const char* kptau_last_error(void);
void kptau_string_free(char* s);
void kptau_tau_free(kptau_tau* t);
void kptau_chain_free(kptau_chain* c);

/* ---- constructors ---- */
kptau_rc kptau_tau_parse(const char* json, kptau_tau** out);
kptau_rc kptau_tau_to_json(const kptau_tau* t, char** json);
/* det(s_{lambda_i+j-i}(t + c_i)): partition "2,1", shifts a JSON array of
 * {index: "p/q"} tables, one per row. */
kptau_rc kptau_tau_kp(const char* partition, const char* shifts_json, kptau_tau** out);
/* Successor data of the MKP chain; successor_case is "prepend", "insert" or
 * "decrement"; result_json carries {"partition", "shifts", "tau"}. */
kptau_rc kptau_mkp_extend(const char* partition, const char* shifts_json,
                          const char* successor_case, int mu, int index, const char* d_json,
                          char** result_json);
/* n-KdV tau for an n-periodic partition; class_shifts_json maps residues mod n
 * to shift tables. Fails with KPTAU_FAIL when the partition is not n-periodic. */
kptau_rc kptau_tau_nkdv(int n, const char* partition, const char* class_shifts_json,
                        kptau_tau** out);
kptau_rc kptau_chain_parse(const char* json, kptau_chain** out);
kptau_rc kptau_chain_to_json(const kptau_chain* c, char** json);
kptau_rc kptau_chain_at(const kptau_chain* c, int pos, kptau_tau** out);
/* Wronskian chain tau_0..tau_{n-1} from permutation pi (csv of 1..n),
 * multiplicities m (csv), and one shift table per slot (JSON array). */
kptau_rc kptau_chain_nkdv_data(int n, const char* pi_csv, const char* m_csv,
                               const char* shifts_json, kptau_chain** out);

/* ---- Schur / partition utilities ---- */
kptau_rc kptau_schur(const char* partition, char** poly_json);
kptau_rc kptau_schur_elementary(int j, char** poly_json);
/* KPTAU_OK when n-periodic, KPTAU_FAIL when not; report carries V_lambda. */
kptau_rc kptau_check_n_periodic(int n, const char* partition, char** report_json);
kptau_rc kptau_enumerate_n_periodic(int n, int max_weight, char** json);

/* ---- verifiers ----
 * KPTAU_OK = identity holds exactly, KPTAU_FAIL = exact counterexample found;
 * verdict_json is {"pass", "witness", "checked", ...}. */
kptau_rc kptau_verify_mkp(const kptau_tau* tau_k, const kptau_tau* tau_l, int d,
                          char** verdict_json);
kptau_rc kptau_verify_first_mkp(const kptau_tau* tau_k, const kptau_tau* tau_k1,
                                char** verdict_json);
kptau_rc kptau_verify_nkdv(const kptau_chain* chain, int n, char** verdict_json);
/* Sato-Wilson + Lax equations (+ dressing adjoint consistency) for each flow
 * in flows_csv, exact down to d^floor. */
kptau_rc kptau_verify_lax(const kptau_tau* t, const char* flows_csv, int floor,
                          char** verdict_json);
/* Consecutive-pair operator checks: intertwining and ratio eigenfunctions. */
kptau_rc kptau_verify_pair(const kptau_tau* tau_l, const kptau_tau* tau_l1,
                           const char* flows_csv, int floor, char** verdict_json);
/* Factorized n-KdV system + the v-flow equation at the given flow index. */
kptau_rc kptau_verify_mkdv(const kptau_chain* chain, int n, int flow, int floor,
                           char** verdict_json);
/* Crum identity over a JSON array of rational functions (or polynomials). */
kptau_rc kptau_crum(const char* funcs_json, char** verdict_json);

#ifdef __cplusplus
}
#endif

#endif /* KPTAU_H */
