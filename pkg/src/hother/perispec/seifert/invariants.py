"""Exact invariants of Seifert homology spheres and of their mapping tori.

Everything here is integer or :class:`fractions.Fraction` arithmetic. For
``Y = Sigma(a_1, ..., a_n)`` with orbifold Euler characteristic ``chi``,
Euler number ``e = -1/(a_1 ... a_n)`` and normalized invariants ``(b; w_k)``:

* ``eta_sign = e/3 + 1 - 4 S`` and
  ``eta_dir = 2 (p_g - 2 v) + chi^2 / (4 e) + e/6 + 1 - 2 S``, where
  ``S = sum_k s(w_k, a_k)``, ``p_g`` is the geometric genus and ``v`` the
  vortex count;
* the combination ``eta_dir/2 + eta_sign/8`` equals ``p_g - 2 v + (K^2 + s)/8``;
* the Casson invariant is ``-(2 v + combination)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from hother.perispec.numerics.rational import JsonRational, as_integer
from hother.perispec.seifert.data import SeifertData
from hother.perispec.seifert.dedekind import dedekind_sum
from hother.perispec.seifert.plumbing import plumbing_graph


class EtaPair(BaseModel):
    """Dirac and signature eta invariants of the adiabatic Seifert metric."""

    model_config = ConfigDict(frozen=True)

    eta_dir: JsonRational = Field(..., description="Eta invariant of the Dirac operator")
    eta_sign: JsonRational = Field(..., description="Eta invariant of the odd signature operator")

    @computed_field
    @property
    def combo(self) -> JsonRational:
        """``eta_dir / 2 + eta_sign / 8``."""
        return self.eta_dir / 2 + self.eta_sign / 8


class LambdaSW(BaseModel):
    """Seiberg-Witten invariants of the three mapping tori of ``Y``."""

    model_config = ConfigDict(frozen=True)

    product: int = Field(..., description="S^1 x Y")
    circle_action: int = Field(..., description="Mapping torus of an element of the circle action")
    conjugation: int = Field(..., description="Mapping torus of the complex conjugation")


class InvariantReport(BaseModel):
    """Every invariant of one Seifert homology sphere, exactly."""

    model_config = ConfigDict(frozen=True)

    multiplicities: tuple[int, ...] = Field(..., description="Exceptional fiber multiplicities")
    chi: JsonRational = Field(..., description="Orbifold Euler characteristic of the base")
    euler_number: JsonRational = Field(..., description="Euler number -1/(a_1...a_n)")
    vortex_count: int = Field(..., ge=0, description="Holomorphic vortices")
    moduli_count: int = Field(..., ge=0, description="Holomorphic plus antiholomorphic vortices")
    geometric_genus: int = Field(..., ge=0, description="Geometric genus of the singularity with link Y")
    canonical_square: int = Field(..., description="K^2 + s of the plumbing")
    etas: EtaPair
    w: JsonRational = Field(..., description="Correction term -(eta_dir/2 + eta_sign/8)")
    casson: int = Field(..., description="Casson invariant")
    mu_bar: int = Field(..., description="Neumann-Siebenmann invariant")
    lambda_sw_product: int = Field(..., description="lambda_SW of S^1 x Y")
    lambda_sw_circle_action: int = Field(..., description="lambda_SW for a circle-action mapping torus")
    lambda_sw_conjugation: int = Field(..., description="lambda_SW for the conjugation mapping torus")
    rohlin_parity_ok: bool = Field(..., description="Every lambda_SW is congruent to mu_bar mod 2")

    @model_validator(mode="after")
    def _check_counts(self) -> Self:
        if self.moduli_count != 2 * self.vortex_count:
            msg = f"moduli_count {self.moduli_count} is not twice vortex_count {self.vortex_count}"
            raise ValueError(msg)
        if self.casson != -self.lambda_sw_product:
            msg = f"casson {self.casson} is not -lambda_sw_product {self.lambda_sw_product}"
            raise ValueError(msg)
        return self


def euler_orbifold(s: SeifertData) -> Fraction:
    """``chi = 2 - sum_k (1 - 1/a_k)``; degenerate data is accepted.

    Example:
        >>> euler_orbifold(SeifertData.of(2, 3, 5))
        Fraction(1, 30)
    """
    return 2 - sum((1 - Fraction(1, a) for a in s.multiplicities), Fraction(0))


def euler_number(s: SeifertData) -> Fraction:
    """``e = -1 / (a_1 ... a_n)``."""
    return Fraction(-1, s.require_genuine().product)


def _count_below(weights: list[int], allowance: int, ranges: list[int]) -> int:
    """Vectors ``0 <= eps_k < ranges[k]`` with ``sum eps_k * weights[k] <= allowance``."""
    if allowance < 0:
        return 0
    if not weights:
        return 1
    head, rest = weights[0], weights[1:]
    steps = min(ranges[0] - 1, allowance // head)
    return sum(_count_below(rest, allowance - eps * head, ranges[1:]) for eps in range(steps + 1))


def vortex_count(s: SeifertData) -> int:
    """Vectors ``0 <= eps_k < a_k`` with ``sum eps_k / a_k <= -chi/2``, counted exactly.

    Scaled by ``2 a_1 ... a_n`` the condition is the integer inequality
    ``sum 2 eps_k (A / a_k) <= -chi A``.

    Example:
        >>> vortex_count(SeifertData.of(2, 3, 7))
        1
    """
    s.require_genuine()
    product = s.product
    allowance = as_integer(-euler_orbifold(s) * product, quantity="chi * product")
    weights = [2 * (product // a) for a in s.multiplicities]
    return _count_below(weights, allowance, list(s.multiplicities))


def geometric_genus(s: SeifertData) -> int:
    """Geometric genus of the weighted-homogeneous singularity whose link is ``Y``.

    ``p_g = sum_{l >= 0} max(0, -N(l) - 1)`` with
    ``N(l) = b l - sum_k ceil(l w_k / a_k)``; the terms vanish once
    ``l > (n - 1) a_1 ... a_n``.
    """
    invariants = s.normalized()
    bound = (s.fiber_count - 1) * s.product
    total = 0
    for level in range(bound + 1):
        degree = invariants.b * level + sum((-level * w) // a for a, w in invariants.pairs)
        total += max(0, -degree - 1)
    return total


def dedekind_total(s: SeifertData) -> Fraction:
    """``sum_k s(w_k, a_k)`` over the normalized invariants."""
    return sum((dedekind_sum(w, a) for a, w in s.normalized().pairs), Fraction(0))


def canonical_square_closed_form(s: SeifertData) -> Fraction:
    """``K^2 + s = chi^2 / e + e + 5 - 12 sum_k s(w_k, a_k)``.

    Agrees with :meth:`PlumbingGraph.canonical_square` on the plumbing.
    """
    chi = euler_orbifold(s)
    e = euler_number(s)
    return chi * chi / e + e + 5 - 12 * dedekind_total(s)


def eta_invariants(s: SeifertData) -> EtaPair:
    """Dirac and signature eta invariants in closed form.

    Example:
        >>> eta_invariants(SeifertData.of(2, 3, 5)).combo
        Fraction(1, 1)
    """
    chi = euler_orbifold(s)
    e = euler_number(s)
    total = dedekind_total(s)
    eta_sign = e / 3 + 1 - 4 * total
    eta_dir = 2 * (geometric_genus(s) - 2 * vortex_count(s)) + chi * chi / (4 * e) + e / 6 + 1 - 2 * total
    return EtaPair(eta_dir=eta_dir, eta_sign=eta_sign)


def w_correction(s: SeifertData) -> Fraction:
    """``w = -(eta_dir/2 + eta_sign/8)``."""
    return -eta_invariants(s).combo


def casson(s: SeifertData) -> int:
    """Casson invariant ``-(2 v + eta_dir/2 + eta_sign/8)``.

    Raises:
        IntegralityError: If the result is not an integer.

    Example:
        >>> casson(SeifertData.of(2, 3, 5))
        -1
    """
    value = -(2 * vortex_count(s) + eta_invariants(s).combo)
    return as_integer(value, quantity=f"casson{s.multiplicities}")


def mu_bar(s: SeifertData) -> int:
    """``(sigma - w.w) / 8`` on the plumbing, ``w`` its Wu class.

    Raises:
        WuClassError: If the Wu class system is singular mod 2.
        IntegralityError: If the result is not an integer.
    """
    graph = plumbing_graph(s)
    return as_integer(Fraction(graph.signature() - graph.wu_square(), 8), quantity=f"mu_bar{s.multiplicities}")


def lambda_sw_mapping_tori(s: SeifertData) -> LambdaSW:
    """Seiberg-Witten invariants of the product, circle-action and conjugation mapping tori.

    The circle-action count is the same whichever fiber's rotation is used,
    since that map can be included into the circle action.
    """
    product = -casson(s)
    conjugation = as_integer(eta_invariants(s).combo, quantity=f"eta combination{s.multiplicities}")
    return LambdaSW(product=product, circle_action=product, conjugation=conjugation)


def brieskorn_casson(p: int, q: int, r: int) -> int:
    """Casson invariant of ``Sigma(p, q, r)`` as the Milnor fiber signature over 8.

    For ``0 < i < p``, ``0 < j < q``, ``0 < k < r`` the point contributes +1 when
    ``i/p + j/q + k/r`` lies in ``(0, 1)`` modulo 2, -1 when it lies in ``(1, 2)``
    and nothing at integers.

    Raises:
        NonCoprimeError: If two arguments share a factor.
        IntegralityError: If the signature is not divisible by 8.
    """
    SeifertData.of(p, q, r).require_genuine()
    period = p * q * r
    signature = 0
    for i in range(1, p):
        for j in range(1, q):
            partial = i * q * r + j * p * r
            for k in range(1, r):
                residue = (partial + k * p * q) % (2 * period)
                if 0 < residue < period:
                    signature += 1
                elif residue > period:
                    signature -= 1
    return as_integer(Fraction(signature, 8), quantity=f"brieskorn signature/8 ({p},{q},{r})")


def invariant_report(s: SeifertData) -> InvariantReport:
    """Compute every invariant of ``s`` once and bundle them.

    Raises:
        DegenerateSeifertError: For degenerate data.
        IntegralityError: If an integer-valued quantity comes out fractional.
    """
    s.require_genuine()
    graph = plumbing_graph(s)
    v = vortex_count(s)
    p_g = geometric_genus(s)
    chi = euler_orbifold(s)
    e = euler_number(s)
    total = dedekind_total(s)
    etas = EtaPair(
        eta_dir=2 * (p_g - 2 * v) + chi * chi / (4 * e) + e / 6 + 1 - 2 * total,
        eta_sign=e / 3 + 1 - 4 * total,
    )
    label = f"{s.multiplicities}"
    combo = as_integer(etas.combo, quantity=f"eta combination{label}")
    casson_value = -(2 * v + combo)
    bar = as_integer(Fraction(graph.signature() - graph.wu_square(), 8), quantity=f"mu_bar{label}")
    lambdas = (-casson_value, -casson_value, combo)
    return InvariantReport(
        multiplicities=s.multiplicities,
        chi=chi,
        euler_number=e,
        vortex_count=v,
        moduli_count=2 * v,
        geometric_genus=p_g,
        canonical_square=as_integer(graph.canonical_square(), quantity=f"K^2 + s{label}"),
        etas=etas,
        w=-etas.combo,
        casson=casson_value,
        mu_bar=bar,
        lambda_sw_product=lambdas[0],
        lambda_sw_circle_action=lambdas[1],
        lambda_sw_conjugation=lambdas[2],
        rohlin_parity_ok=all((value - bar) % 2 == 0 for value in lambdas),
    )
