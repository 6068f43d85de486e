"""Hand-transcribed reference systems and assignment samplers shared by tests."""
import random
from fractions import Fraction as F

from interleavings.polynomial import K, L, Polynomial


def _p(*terms):
    return Polynomial(terms)


# Six polynomials listed for the two-summand example at epsilon = 1/5,
# transcribed to K(i, j) / L(j, i) indices.
EX31_REFERENCE = (
    _p(((L(2, 2),), 1)),
    _p(((K(1, 1),), 1)),
    _p(((L(1, 2), K(2, 1)), 1), ((), -1)),
    _p(((L(2, 1), K(1, 2)), 1), ((), -1)),
    _p(((L(1, 1), K(1, 2)), 1), ((L(1, 2), K(2, 2)), 1)),
    _p(((L(1, 1), K(2, 1)), 1), ((L(2, 1), K(2, 2)), 1)),
)

PALETTE = [F(p, q) for p in range(-4, 5) for q in (1, 2, 3)]


def ex31_family(rng):
    """A point of the solution family: K12 = t, L21 = 1/t, K21 = u, L12 = 1/u,
    K11 = 0, L11 = v, K22 = -v t u, L22 = 0."""
    nz = [x for x in PALETTE if x != 0]
    t, u, v = rng.choice(nz), rng.choice(nz), rng.choice(PALETTE)
    return {
        K(1, 1): F(0), K(1, 2): t, K(2, 1): u, K(2, 2): -v * t * u,
        L(1, 1): v, L(1, 2): 1 / u, L(2, 1): 1 / t, L(2, 2): F(0),
    }


def perturb(rng, values, variables):
    out = dict(values)
    for v in rng.sample(list(variables), rng.randint(1, 2)):
        out[v] = out.get(v, F(0)) + rng.choice([x for x in PALETTE if x != 0])
    return out


def random_assignment(rng, variables):
    return {v: rng.choice(PALETTE) for v in variables}


def ex31_samples(presentation, count, seed=0):
    """Half on the solution family, half perturbed off it; forced zeros held at 0."""
    rng = random.Random(seed)
    free = presentation.unforced()
    forced = {v: F(0) for v in presentation.forced_zero}
    out = []
    for k in range(count):
        base = ex31_family(rng)
        vals = base if k % 2 == 0 else perturb(rng, base, free)
        out.append({**vals, **forced})
    return out
