"""Independent floating-point and brute-force oracles used by the tests."""
import random
from fractions import Fraction

import numpy as np

from concordia.exactnum import Angle
from concordia.jumpcalc import jf_reparam
from concordia.seifert import SeifertMatrix
from concordia.signature import jump_function, sigma_at, simplest_between


def lt_form(A, theta):
    A = np.array(A, dtype=float).reshape(len(A), len(A))
    w = np.exp(1j * theta)
    return (1 - w) * A + (1 - np.conj(w)) * A.T


def sigma_oracle(A, theta):
    """(signature, smallest |eigenvalue|) of the Levine-Tristram form."""
    if len(A) == 0:
        return 0, np.inf
    ev = np.linalg.eigvalsh(lt_form(A, theta))
    return int((ev > 0).sum() - (ev < 0).sum()), float(np.abs(ev).min())


def random_seifert(rng: random.Random, genus: int, spread: int = 2, mix: int = 3) -> SeifertMatrix:
    """Symmetric noise plus a symplectic part, then a unimodular congruence;
    det(A - A^T) = 1 holds by construction."""
    n = 2 * genus
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            A[i][j] = A[j][i] = rng.randint(-spread, spread)
    for k in range(genus):
        A[2 * k][2 * k + 1] += 1
    for _ in range(mix):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-1, 1))
        # row and column operation: A -> E A E^T with E = I + c e_ij
        for col in range(n):
            A[i][col] += c * A[j][col]
        for row in range(n):
            A[row][i] += c * A[row][j]
    return SeifertMatrix(A)


def _between(a: Angle, b: Angle, k: int, parts: int) -> Angle:
    """A rational-pi angle strictly between a < b, near the k-th of parts-1 cut points."""
    lo = a.over_pi_interval(Fraction(1, 10 ** 12))[1]
    hi = b.over_pi_interval(Fraction(1, 10 ** 12))[0]
    x = lo + (hi - lo) * Fraction(k, parts)
    r = (hi - lo) / (4 * parts)
    return Angle.rational_pi(simplest_between(x - r, x + r))


def _sample(K, theta: Angle, d: int):
    image = theta.scale(d)
    if image.is_zero():
        return None          # sigma tends to 0 on both sides; nothing to sample
    want, margin = sigma_oracle(K.entries, float(image))
    got = sigma_at(K, image)
    if margin > 1e-6:
        assert got == want
    return got


def check_reparam_by_sampling(K, d: int) -> None:
    """Sample g(theta) = sigma_K(d theta) directly on (0, pi).  g must be
    constant between the points of jf_reparam, and its upward jump at phi is
    delta_K(d phi) when d phi lies in the upper half circle and -delta_K(d phi)
    otherwise (delta is extended evenly)."""
    f = jf_reparam(jump_function(K), d)
    marks = [Angle.rational_pi(0)] + f.support + [Angle.rational_pi(1)]
    levels = []
    for k in range(len(marks) - 1):
        vals = {_sample(K, _between(marks[k], marks[k + 1], j, 4), d) for j in (1, 2, 3)} - {None}
        assert len(vals) == 1, "sigma(d theta) jumps inside a gap"
        levels.append(vals.pop())
    for k, phi in enumerate(f.support):
        sign = 1 if phi.scale(d)._half() == 0 else -1
        assert levels[k + 1] - levels[k] == sign * f(phi)
