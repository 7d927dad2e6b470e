r"""Leading terms of the matrix spherical functions and the weight matrix.

Everything here lives in one of three coordinate systems on the ordered
two-torus:

* c = (c1, c2): the raw torus coordinates (cosines of the two angles);
* psi = (psi1, psi2): the elementary symmetric functions of (c1^2, c2^2),
  psi1 = c1^2 + c2^2 and psi2 = c1^2 c2^2;
* x = (x1, x2): an affine renormalization of psi chosen so that the
  weight's support becomes the region between a parabola and two lines,
  x1 = 2 psi1 - 2, x2 = 4 psi2 - 2 psi1 + 1.

The size-(a+1) leading-term matrix Q0 has (i,k) entry

    q(i,k) = c1^(a+b-k) * sum_{p=0}^{min(i,k)}
             ((-i)_p (-k)_p / (p! (-a)_p)) (c2^2-c1^2)^p c2^(b+2i+k-2p),

a terminating hypergeometric sum.  The weight matrix is S = Q0 Q0^T,
which is symmetric in c1 <-> c2 entrywise and so pushes down to psi.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .krawtchouk import krawtchouk, poch
from .lie import PairParams
from .matrices import PolyMatrix, flip_matrix
from .poly import MultiPoly, RationalFn, symmetric_reduce
from .report import CheckResult, FAIL, PASS

C_VARS = ("c1", "c2")
PSI_VARS = ("psi1", "psi2")
X_VARS = ("x1", "x2")


def psi_in_c() -> dict[str, MultiPoly]:
    c1 = MultiPoly.var(C_VARS, "c1")
    c2 = MultiPoly.var(C_VARS, "c2")
    return {"psi1": c1 * c1 + c2 * c2, "psi2": c1 * c1 * c2 * c2}


def x_in_psi() -> dict[str, MultiPoly]:
    p1 = MultiPoly.var(PSI_VARS, "psi1")
    p2 = MultiPoly.var(PSI_VARS, "psi2")
    two = MultiPoly.const(PSI_VARS, 2)
    one = MultiPoly.one(PSI_VARS)
    return {"x1": 2 * p1 - two, "x2": 4 * p2 - 2 * p1 + one}


def psi_in_x() -> dict[str, MultiPoly]:
    x1 = MultiPoly.var(X_VARS, "x1")
    x2 = MultiPoly.var(X_VARS, "x2")
    one = MultiPoly.one(X_VARS)
    half = Fraction(1, 2)
    quarter = Fraction(1, 4)
    return {"psi1": half * x1 + one, "psi2": quarter * (x1 + x2 + one)}


def x_in_c() -> dict[str, MultiPoly]:
    # composition of x_in_psi with psi_in_c
    pc = psi_in_c()
    return {name: poly.substitute(pc, C_VARS) for name, poly in x_in_psi().items()}


def _require_weight_regime(params: PairParams):
    if params.b < 0:
        raise ValueError(
            "leading terms are constructed for b >= 0; for b <= -a pass "
            "through the duality map first")


def leading_term(params: PairParams, i: int, k: int) -> MultiPoly:
    """q(i,k) as a polynomial in (c1, c2)."""
    _require_weight_regime(params)
    a, b = params.a, params.b
    if not (0 <= i <= a and 0 <= k <= a):
        raise ValueError(f"indices ({i},{k}) out of range 0..{a}")
    c1 = MultiPoly.var(C_VARS, "c1")
    c2 = MultiPoly.var(C_VARS, "c2")
    diff = c2 * c2 - c1 * c1
    acc = MultiPoly.zero(C_VARS)
    for p in range(min(i, k) + 1):
        coeff = poch(Fraction(-i), p) * poch(Fraction(-k), p) \
            / (factorial(p) * poch(Fraction(-a), p))
        acc = acc + coeff * (diff ** p) * (c2 ** (b + 2 * i + k - 2 * p))
    return (c1 ** (a + b - k)) * acc


@lru_cache(maxsize=None)
def leading_term_matrix(params: PairParams) -> PolyMatrix:
    """Q0: row i, column k, size (a+1) x (a+1)."""
    n = params.size
    return PolyMatrix.from_rows(
        [[leading_term(params, i, k) for k in range(n)] for i in range(n)])


@lru_cache(maxsize=None)
def weight_matrix_c(params: PairParams) -> PolyMatrix:
    q0 = leading_term_matrix(params)
    return q0 @ q0.transpose()


@lru_cache(maxsize=None)
def weight_matrix_psi(params: PairParams) -> PolyMatrix:
    s = weight_matrix_c(params)
    return s.map_entries(lambda p: symmetric_reduce(p, PSI_VARS))


@lru_cache(maxsize=None)
def weight_matrix_x(params: PairParams) -> PolyMatrix:
    return weight_matrix_psi(params).substitute(psi_in_x(), X_VARS)


def det_reference_c(params: PairParams) -> MultiPoly:
    """Closed form for det S in c coordinates:

    (prod_n C(a,n))^-2 (c1 c2)^(2b(a+1)) (c1 c2 (c1^2-c2^2))^(a(a+1)).
    """
    a, b = params.a, params.b
    const = Fraction(1)
    for n in range(a + 1):
        const /= Fraction(comb(a, n)) ** 2
    c1 = MultiPoly.var(C_VARS, "c1")
    c2 = MultiPoly.var(C_VARS, "c2")
    c1c2 = c1 * c2
    return const * (c1c2 ** (2 * b * (a + 1))) \
        * ((c1c2 * (c1 * c1 - c2 * c2)) ** (a * (a + 1)))


def psi_reference_matrix(a: int, b: int) -> PolyMatrix | None:
    """Stored psi-form weight for sizes 2 and 3, entered term by term.

    The b-dependence is the overall factor psi2^b; the b = 0 cores are kept
    verbatim so that a transcription slip cannot hide behind the generator.
    """
    p1 = MultiPoly.var(PSI_VARS, "psi1")
    p2 = MultiPoly.var(PSI_VARS, "psi2")
    if a == 1:
        rows = [[p1, 2 * p2],
                [2 * p2, p1 * p2]]
    elif a == 2:
        rows = [
            [p1 * p1 - p2, Fraction(3, 2) * p1 * p2, 3 * p2 * p2],
            [Fraction(3, 2) * p1 * p2,
             2 * p2 * p2 + Fraction(1, 4) * p1 * p1 * p2,
             Fraction(3, 2) * p1 * p2 * p2],
            [3 * p2 * p2, Fraction(3, 2) * p1 * p2 * p2,
             p2 * p2 * (p1 * p1 - p2)],
        ]
    else:
        return None
    return PolyMatrix.from_rows(rows).scale(p2 ** b)


def x_reference_matrix(a: int) -> PolyMatrix | None:
    """Stored x-form weight for sizes 2 and 3 at b = 0."""
    x1 = MultiPoly.var(X_VARS, "x1")
    x2 = MultiPoly.var(X_VARS, "x2")
    one = MultiPoly.one(X_VARS)
    u = Fraction(1, 2) * x1 + one       # = psi1
    v = x1 + x2 + one                   # = 4 psi2
    if a == 1:
        rows = [[u, Fraction(1, 2) * v],
                [Fraction(1, 2) * v, Fraction(1, 4) * u * v]]
    elif a == 2:
        rows = [
            [u * u - Fraction(1, 4) * v, Fraction(3, 8) * u * v,
             Fraction(3, 16) * v * v],
            [Fraction(3, 8) * u * v,
             Fraction(1, 16) * v * (2 * v + u * u),
             Fraction(3, 32) * u * v * v],
            [Fraction(3, 16) * v * v, Fraction(3, 32) * u * v * v,
             Fraction(1, 16) * v * v * (u * u - Fraction(1, 4) * v)],
        ]
    else:
        return None
    return PolyMatrix.from_rows(rows)


def all_ones_check(params: PairParams) -> CheckResult:
    """Q0 at c1 = c2 = 1 must be the all-ones matrix."""
    name = f"leading terms at identity point {params.tag()}"
    vals = leading_term_matrix(params).evaluate({"c1": Fraction(1), "c2": Fraction(1)})
    bad = [(i, k) for i, row in enumerate(vals) for k, v in enumerate(row) if v != 1]
    if bad:
        return CheckResult(name, FAIL, f"entries {bad} differ from 1")
    return CheckResult(name, PASS)


def swap_symmetry_check(params: PairParams) -> CheckResult:
    """Swapping c1 <-> c2 reverses the column order of Q0."""
    name = f"leading term reflection symmetry {params.tag()}"
    q0 = leading_term_matrix(params)
    swapped = q0.substitute(
        {"c1": MultiPoly.var(C_VARS, "c2"), "c2": MultiPoly.var(C_VARS, "c1")},
        C_VARS)
    if swapped == q0 @ flip_matrix(params.size, C_VARS):
        return CheckResult(name, PASS)
    return CheckResult(name, FAIL, "Q0(c2,c1) != Q0 J")


def weight_factor_check(params: PairParams) -> CheckResult:
    """S at (a,b) equals (c1 c2)^(2b) times S at (a,0)."""
    name = f"weight matrix b-factorization {params.tag()}"
    base = PairParams(params.m, params.a, 0)
    factor = (MultiPoly.var(C_VARS, "c1") * MultiPoly.var(C_VARS, "c2")) ** (2 * params.b)
    if weight_matrix_c(params) == weight_matrix_c(base).scale(factor):
        return CheckResult(name, PASS)
    return CheckResult(name, FAIL, "factorization fails")


def determinant_check(params: PairParams) -> CheckResult:
    name = f"weight matrix determinant {params.tag()}"
    got = weight_matrix_c(params).det()
    want = det_reference_c(params)
    if got == want:
        return CheckResult(name, PASS, f"degree {got.total_degree()}")
    return CheckResult(name, FAIL, f"det S - closed form = {got - want}")


def psi_consistency_check(params: PairParams) -> CheckResult:
    """Pushing the psi-form back through psi(c) recovers S in c."""
    name = f"weight matrix symmetric reduction {params.tag()}"
    back = weight_matrix_psi(params).substitute(psi_in_c(), C_VARS)
    if back == weight_matrix_c(params):
        return CheckResult(name, PASS)
    return CheckResult(name, FAIL, "round trip through psi failed")


def homogeneity_check(params: PairParams) -> CheckResult:
    """q(i,k) is homogeneous of degree a+2b+2i with both exponents of
    fixed parity: c1 carries a+b-k mod 2 and c2 carries b+k mod 2."""
    name = f"leading term homogeneity and parity {params.tag()}"
    a, b = params.a, params.b
    bad = []
    for i in range(a + 1):
        for k in range(a + 1):
            deg = a + 2 * b + 2 * i
            for (e1, e2) in leading_term(params, i, k).terms:
                if e1 + e2 != deg or (e1 - (a + b - k)) % 2 or (e2 - (b + k)) % 2:
                    bad.append((i, k))
                    break
    if bad:
        return CheckResult(name, FAIL, f"entries {bad} break the invariant")
    return CheckResult(name, PASS)


def krawtchouk_route_check(params: PairParams) -> CheckResult:
    """Second route to q(i,k): a Krawtchouk value with rational parameter.

    q(i,k) = c1^(a+b-k) c2^(b+2i+k) K_i(k; p, a) at p = c2^2/(c2^2 - c1^2),
    computed through the rational-function arithmetic rather than by direct
    polynomial accumulation.
    """
    name = f"leading term hypergeometric route {params.tag()}"
    a, b = params.a, params.b
    c1 = MultiPoly.var(C_VARS, "c1")
    c2 = MultiPoly.var(C_VARS, "c2")
    p = RationalFn(c2 * c2, c2 * c2 - c1 * c1)
    for i in range(a + 1):
        for k in range(a + 1):
            via = krawtchouk(i, k, a, p) * (c1 ** (a + b - k)) * (c2 ** (b + 2 * i + k))
            try:
                via_poly = via.as_poly()
            except ValueError:
                return CheckResult(
                    name, FAIL, f"entry ({i},{k}): denominator did not clear")
            if via_poly != leading_term(params, i, k):
                return CheckResult(name, FAIL, f"routes disagree at entry ({i},{k})")
    return CheckResult(name, PASS)


def reference_matrix_check(params: PairParams) -> CheckResult:
    """Computed S against the stored size-2/size-3 displays (both forms)."""
    name = f"weight matrix stored displays {params.tag()}"
    ref_psi = psi_reference_matrix(params.a, params.b)
    if ref_psi is None:
        return CheckResult(name, PASS, "no stored display at this size")
    if weight_matrix_psi(params) != ref_psi:
        return CheckResult(name, FAIL, "psi-form differs from the stored matrix")
    base = PairParams(params.m, params.a, 0)
    if weight_matrix_x(base) != x_reference_matrix(params.a):
        return CheckResult(name, FAIL, "x-form at b=0 differs from the stored matrix")
    return CheckResult(name, PASS)


def weight_suite(params: PairParams) -> list[CheckResult]:
    out = [
        all_ones_check(params),
        homogeneity_check(params),
        swap_symmetry_check(params),
        krawtchouk_route_check(params),
        weight_factor_check(params),
        psi_consistency_check(params),
        determinant_check(params),
    ]
    if params.a in (1, 2):
        out.append(reference_matrix_check(params))
    return out
