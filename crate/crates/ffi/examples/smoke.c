#include "defring.h"
#include <assert.h>
#include <stdio.h>
#include <string.h>

int main(void) {
    const char *vars[] = {"x", "y", "z"};
    DefringRing *ring = NULL;
    assert(defring_ring_new(0, vars, 3, &ring) == DefringStatus_Ok);

    DefringPolynomial *f = NULL, *g = NULL;
    assert(defring_poly_parse(ring, "y - x^2", &f) == DefringStatus_Ok);
    assert(defring_poly_parse(ring, "z - x^3", &g) == DefringStatus_Ok);

    const DefringPolynomial *gens[] = {f, g};
    DefringIdeal *ideal = NULL, *basis = NULL;
    assert(defring_ideal_new(ring, gens, 2, &ideal) == DefringStatus_Ok);
    assert(defring_groebner_basis(ideal, DefringOrder_Lex, &basis) == DefringStatus_Ok);

    int found = 0;
    for (size_t i = 0; i < defring_ideal_size(basis); i++) {
        DefringPolynomial *gi = NULL;
        char *s = NULL;
        assert(defring_ideal_generator(basis, i, &gi) == DefringStatus_Ok);
        assert(defring_poly_to_string(gi, &s) == DefringStatus_Ok);
        if (strcmp(s, "y^3 - z^2") == 0) found = 1;
        defring_string_free(s);
        defring_poly_free(gi);
    }
    assert(found);

    uint64_t primes[] = {5};
    char *json = NULL;
    bool verified = false;
    assert(defring_verify("all", primes, 1, false, &json, &verified) == DefringStatus_Ok);
    assert(verified);
    assert(strstr(json, "\"verdict\": \"verified\"") != NULL);
    defring_string_free(json);

    defring_ideal_free(basis);
    defring_ideal_free(ideal);
    defring_poly_free(f);
    defring_poly_free(g);
    defring_ring_free(ring);
    printf("c abi smoke test: ok (version %s)\n", defring_version());
    return 0;
}
