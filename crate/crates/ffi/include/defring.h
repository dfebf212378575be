#ifndef DEFRING_H
#define DEFRING_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Monomial order selector for basis computations.
 */
typedef enum DefringOrder {
  DefringOrder_Lex = 0,
  DefringOrder_DegRevLex = 1,
  /**
   * Local order; basis computations use the Mora standard-basis algorithm.
   */
  DefringOrder_NegDegRevLex = 2,
} DefringOrder;

/**
 * Result of every fallible call. `Ok` is zero; anything else leaves a
 * message retrievable with `defring_last_error_message`.
 */
typedef enum DefringStatus {
  DefringStatus_Ok = 0,
  DefringStatus_NullArgument = 1,
  DefringStatus_InvalidArgument = 2,
  DefringStatus_ParseError = 3,
  DefringStatus_MathError = 4,
  DefringStatus_ClaimFailed = 5,
  DefringStatus_Panic = 6,
} DefringStatus;

typedef struct DefringIdeal DefringIdeal;

typedef struct DefringPolynomial DefringPolynomial;

typedef struct DefringRing DefringRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of the engine, as a static string (do not free).
 */
const char *defring_version(void);

/**
 * The last error message on this thread, or NULL. Free the result with
 * `defring_string_free`.
 */
char *defring_last_error_message(void);

/**
 * Free a string returned by this library.
 */
void defring_string_free(char *s);

/**
 * Create a polynomial ring. `characteristic` is 0 for the rationals or an
 * odd prime; `vars` points to `nvars` NUL-terminated variable names.
 */
enum DefringStatus defring_ring_new(uint64_t characteristic,
                                    const char *const *vars,
                                    size_t nvars,
                                    struct DefringRing **out);

void defring_ring_free(struct DefringRing *ring);

/**
 * Parse a polynomial in the ring's grammar.
 */
enum DefringStatus defring_poly_parse(const struct DefringRing *ring,
                                      const char *text,
                                      struct DefringPolynomial **out);

/**
 * Canonical text form of a polynomial; free with `defring_string_free`.
 */
enum DefringStatus defring_poly_to_string(const struct DefringPolynomial *poly, char **out);

void defring_poly_free(struct DefringPolynomial *poly);

/**
 * Build an ideal from `npolys` polynomial handles (which stay owned by the
 * caller).
 */
enum DefringStatus defring_ideal_new(const struct DefringRing *ring,
                                     const struct DefringPolynomial *const *polys,
                                     size_t npolys,
                                     struct DefringIdeal **out);

void defring_ideal_free(struct DefringIdeal *ideal);

/**
 * Number of stored generators.
 */
size_t defring_ideal_size(const struct DefringIdeal *ideal);

/**
 * Copy out one generator as a fresh polynomial handle.
 */
enum DefringStatus defring_ideal_generator(const struct DefringIdeal *ideal,
                                           size_t index,
                                           struct DefringPolynomial **out);

/**
 * Reduced basis of the ideal under the requested order: a Groebner basis for
 * the global orders, a Mora standard basis for `NegDegRevLex`.
 */
enum DefringStatus defring_groebner_basis(const struct DefringIdeal *ideal,
                                          enum DefringOrder order,
                                          struct DefringIdeal **out);

/**
 * Dimension and multiplicity of the quotient by the ideal.
 *
 * Writes the Krull dimension to `out_dim` (-1 for the unit ideal) and to
 * `out_multiplicity` the Hilbert-Samuel multiplicity, or the colength when
 * the dimension is zero. With `local_at_origin` the computation routes
 * through the tangent cone at the origin.
 */
enum DefringStatus defring_dimension_multiplicity(const struct DefringIdeal *ideal,
                                                  bool local_at_origin,
                                                  int64_t *out_dim,
                                                  uint64_t *out_multiplicity);

/**
 * Run the full verification pipeline.
 *
 * `case` is one of "all", "ramified", "indecomposable", "split"; `primes`
 * points to `nprimes` odd primes (NULL selects the default 3, 5, 7, 13).
 * The JSON report is written to `out_json` (free with
 * `defring_string_free`) and the overall verdict to `out_verified`.
 * Returns `ClaimFailed` when the pipeline ran but a claim failed.
 */
enum DefringStatus defring_verify(const char *case_,
                                  const uint64_t *primes,
                                  size_t nprimes,
                                  bool corrupt_i3_sign,
                                  char **out_json,
                                  bool *out_verified);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* DEFRING_H */
