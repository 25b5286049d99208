#pragma once

// Shared exact fixtures for the test suites.

#include <vector>

#include "qtoric/qtoric.hpp"

namespace fixtures {

using qtoric::FieldScalar;
using qtoric::Halfspace;
using qtoric::Polytope;
using qtoric::Rational;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline FieldScalar fs(long num, long den = 1) { return FieldScalar(rat(num, den)); }

inline FieldScalar root(long m, long num = 1, long den = 1) {
    return FieldScalar(Rational(0), Rational(num, den), m);
}

/// [0,1] with unit normals; the smooth Delzant interval.
inline Polytope interval() {
    return Polytope(1, {{{fs(1)}, fs(0)}, {{fs(-1)}, fs(-1)}});
}

/// Unit square, standard normals.
inline Polytope square() {
    return Polytope(2, {{{fs(1), fs(0)}, fs(0)},
                        {{fs(0), fs(1)}, fs(0)},
                        {{fs(-1), fs(0)}, fs(-1)},
                        {{fs(0), fs(-1)}, fs(-1)}});
}

/// Standard triangle (projective-plane data).
inline Polytope triangle() {
    return Polytope(2, {{{fs(1), fs(0)}, fs(0)},
                        {{fs(0), fs(1)}, fs(0)},
                        {{fs(-1), fs(-1)}, fs(-1)}});
}

/// [0,1] cut out with an irrational second normal: X = (1, -sqrt(2)).
inline Polytope quasi_sphere() {
    return Polytope(1, {{{fs(1)}, fs(0)}, {{root(2, -1)}, root(2, -1)}});
}

/// Same interval with X = (1, -sqrt(3)), for the discriminant-independence check.
inline Polytope quasi_sphere_sqrt3() {
    return Polytope(1, {{{fs(1)}, fs(0)}, {{root(3, -1)}, root(3, -1)}});
}

/// [0,1] with X = (1, -2): the teardrop orbifold data.
inline Polytope weighted_sphere() {
    return Polytope(1, {{{fs(1)}, fs(0)}, {{fs(-2)}, fs(-2)}});
}

/// Unit square with the corner (1,1) cut off by x + phi*y <= 2, phi the golden
/// ratio. Combinatorially a pentagon; normals live in Q(sqrt(5)).
inline Polytope golden_pentagon() {
    FieldScalar phi(Rational(1, 2), Rational(1, 2), 5);
    return Polytope(2, {{{fs(1), fs(0)}, fs(0)},
                        {{fs(0), fs(1)}, fs(0)},
                        {{fs(-1), fs(0)}, fs(-1)},
                        {{fs(0), fs(-1)}, fs(-1)},
                        {{fs(-1), -phi}, fs(-2)}});
}

/// Square pyramid over [-1,1]^2 with apex (0,0,1): NOT simple (4 facets at apex).
inline Polytope square_pyramid() {
    return Polytope(3, {{{fs(0), fs(0), fs(1)}, fs(0)},
                        {{fs(-1), fs(0), fs(-1)}, fs(-1)},
                        {{fs(1), fs(0), fs(-1)}, fs(-1)},
                        {{fs(0), fs(-1), fs(-1)}, fs(-1)},
                        {{fs(0), fs(1), fs(-1)}, fs(-1)}});
}

inline std::vector<Polytope> simple_corpus() {
    return {interval(), triangle(), square(), golden_pentagon(), quasi_sphere(),
            weighted_sphere()};
}

}  // namespace fixtures
