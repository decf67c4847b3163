#ifndef CANLIFT_CANLIFT_H
#define CANLIFT_CANLIFT_H

/* C interface to the canonical-basis lifting library.
 *
 * All computation goes through clf_run: pass a subcommand name and a JSON
 * object of parameters, receive a JSON result string. The caller owns the
 * result and releases it with clf_string_free. On failure clf_run returns a
 * nonzero error code (values match the library's internal codes; 0 is Ok)
 * and the context stores a human-readable message.
 *
 * Subcommands and their parameters (all JSON fields):
 *   "words"        {series, rank, word?}            -> {words: [[...], ...]}
 *   "braid-path"   {series, rank, from, to}         -> {moves: [{pos,len},...]}
 *   "star"         {series, rank, i}                -> {star}
 *   "zeta-check"   {series, rank, word, t:["1/2"..]} -> {pass, t_out, ...}
 *   "transition"   {series, rank, side, from, to, t} -> {t_out}
 *   "phi"          {series, rank, lambda, to, from, t} -> {t_out}
 *   "schutz"       {series, rank, lambda, word, t}  -> {word_out, t_out}
 *   "anchor"       {series, rank, lambda, word}     -> {l}
 *   "crystal-dot"  {rank, lambda}                   -> {dot}
 *   "verify"       {suite ("all" or "1".."9"), seed} -> {pass, criteria: [...]}
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct clf_context clf_context;

clf_context* clf_context_create(void);
void clf_context_destroy(clf_context* ctx);

/* Last error recorded on this context; message valid until the next call. */
int clf_last_error_code(const clf_context* ctx);
const char* clf_last_error(const clf_context* ctx);

/* Returns 0 on success and writes a malloc'd JSON string to *result_json. */
int clf_run(clf_context* ctx, const char* subcommand, const char* params_json,
            char** result_json);

void clf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
