"""Registry of partition identities with exact machine-checkable verdicts.

Each identity computes its left side and right side by genuinely different
routes and reports structural equality of exact values. Identities whose
statement is a pair of equations carry both sides as ordered pairs, so
``equal`` is still literally ``lhs == rhs``.

Registry keys are opaque stable strings (the CLI wire format).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian_product
from typing import Callable, Iterable, Mapping, Sequence, Union

from .core import (
    SequenceSpec,
    SumProblem,
    brute_multiple_sum,
    brute_recurrent_sum,
    eval_sequence,
    power_sums,
    reduce_from_power_sums,
    reduce_multiple_sum,
    sequence_spec_from_json,
    sequence_spec_to_json,
)
from .exact_arith import PiPolynomial, binomial, factorial, rational_to_str, stirling_first_unsigned
from .partitions import PartitionMultiplicities, enumerate_partitions

__all__ = ["IdentityId", "VerificationReport", "verify", "verify_sweep", "identity_parameter_names"]


class IdentityId(str, enum.Enum):
    """Stable registry keys; values double as the CLI spelling."""

    LEMMA_3_1 = "LEMMA_3_1"
    LEMMA_3_2 = "LEMMA_3_2"
    STIRLING_ALTERNATING = "STIRLING_ALTERNATING"
    BINOMIAL_PARTITION = "BINOMIAL_PARTITION"
    PRODUCT_IDENTITY = "PRODUCT_IDENTITY"
    RECURRENT_BRIDGE = "RECURRENT_BRIDGE"
    EVEN_ODD_WEIGHTS = "EVEN_ODD_WEIGHTS"
    EVEN_ODD_BINOM = "EVEN_ODD_BINOM"
    EVEN_ODD_N = "EVEN_ODD_N"


Side = Union[Fraction, tuple, PiPolynomial]


@dataclass(frozen=True)
class VerificationReport:
    """One identity check: both sides exactly, and whether they agree."""

    identity: IdentityId
    params: dict
    lhs: Side
    rhs: Side
    equal: bool
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity.value,
            "params": _params_to_json(self.params),
            "lhs": _side_to_json(self.lhs),
            "rhs": _side_to_json(self.rhs),
            "equal": self.equal,
            "note": self.note,
        }


def _side_to_json(side: Side):
    if isinstance(side, PiPolynomial):
        return side.to_json_dict()
    if isinstance(side, tuple):
        return [_side_to_json(v) for v in side]
    return rational_to_str(side)


def _params_to_json(params: Mapping) -> dict:
    out = {}
    for key, value in params.items():
        if key == "spec" and not isinstance(value, (int, str)):
            out[key] = sequence_spec_to_json(value)
        elif isinstance(value, tuple):
            out[key] = list(value)
        else:
            out[key] = value
    return out


def _partition_sum(m: int, weight: Callable[[int, int], Fraction], parity: str | None = None) -> Fraction:
    """sum over partitions y of m of prod over i with y_i > 0 of weight(i, y_i)."""
    total = Fraction(0)
    for part in enumerate_partitions(m):
        if parity is not None and part.parity != parity:
            continue
        term = Fraction(1)
        for i, mult in enumerate(part.y, start=1):
            if mult:
                term *= weight(i, mult)
        total += term
    return total


def _normalize_phi(phi: Sequence[int], m: int) -> tuple[int, ...]:
    """Multiplicity vector for the sub-partition, padded with zeros to length m."""
    phi = tuple(int(v) for v in phi)
    if any(v < 0 for v in phi):
        raise ValueError("phi multiplicities must be >= 0")
    if len(phi) > m:
        if any(phi[m:]):
            raise ValueError("phi has parts larger than m")
        phi = phi[:m]
    else:
        phi = phi + (0,) * (m - len(phi))
    r = sum(i * v for i, v in enumerate(phi, start=1))
    if r > m:
        raise ValueError("phi must be a partition of r <= m")
    return phi


def _require_int(params: Mapping, key: str, minimum: int) -> int:
    if key not in params:
        raise ValueError(f"missing parameter {key!r}")
    value = int(params[key])
    if value < minimum:
        raise ValueError(f"parameter {key!r} must be >= {minimum}")
    return value


def _require_spec(params: Mapping) -> SequenceSpec:
    spec = params.get("spec")
    if spec is None:
        raise ValueError("missing parameter 'spec'")
    if isinstance(spec, dict):
        return sequence_spec_from_json(spec)
    return spec


def _signed_weight(i: int, mult: int) -> Fraction:
    # (-1)^mult / (i^mult mult!)
    value = Fraction(1, i**mult * factorial(mult))
    return -value if mult % 2 else value


def _plain_weight(i: int, mult: int) -> Fraction:
    # 1 / (i^mult mult!)
    return Fraction(1, i**mult * factorial(mult))


def _binom_weight(phi: tuple[int, ...]) -> Callable[[int, int], Fraction]:
    # C(y_i, phi_i) / (i^(y_i) y_i!); positions with y_i = 0 but phi_i > 0
    # must still contribute a zero factor, handled by the caller.
    def weight(i: int, mult: int) -> Fraction:
        return Fraction(binomial(mult, phi[i - 1]), i**mult * factorial(mult))

    return weight


def _binom_partition_sum(m: int, phi: tuple[int, ...], signed: bool, parity: str | None = None,
                         restricted: bool = False) -> Fraction:
    """Partition sums with binomial selection factors against phi.

    A zero multiplicity with phi_i > 0 kills the term (C(0, phi_i) = 0),
    so the product must range over all i with y_i > 0 or phi_i > 0.
    """
    total = Fraction(0)
    for part in enumerate_partitions(m):
        if parity is not None and part.parity != parity:
            continue
        if restricted and any(part.y[i] < phi[i] for i in range(m)):
            continue
        term = Fraction(1)
        for i in range(1, m + 1):
            mult, want = part.y[i - 1], phi[i - 1]
            if mult == 0 and want == 0:
                continue
            choose = binomial(mult, want)
            if choose == 0:
                term = Fraction(0)
                break
            piece = Fraction(choose, i**mult * factorial(mult))
            if signed and mult % 2:
                piece = -piece
            term *= piece
        total += term
    return total


def _phi_product(phi: tuple[int, ...], signed: bool) -> Fraction:
    # prod_i (+-1)^(phi_i) / (i^(phi_i) phi_i!)
    value = Fraction(1)
    for i, mult in enumerate(phi, start=1):
        if mult:
            value /= Fraction(i**mult * factorial(mult))
            if signed and mult % 2:
                value = -value
    return value


def _verify_lemma_3_1(params: Mapping) -> VerificationReport:
    """Alternating partition weights collapse: sum = (-1)^m for m <= 1, else 0."""
    m = _require_int(params, "m", 0)
    lhs = _partition_sum(m, _signed_weight)
    rhs = Fraction(-1 if m % 2 else 1) if m <= 1 else Fraction(0)
    return VerificationReport(IdentityId.LEMMA_3_1, {"m": m}, lhs, rhs, lhs == rhs)


def _verify_lemma_3_2(params: Mapping) -> VerificationReport:
    """Binomial-filtered alternating weights; full and restricted sums agree."""
    m = _require_int(params, "m", 0)
    phi = _normalize_phi(params.get("phi", ()), m)
    full = _binom_partition_sum(m, phi, signed=True)
    restricted = _binom_partition_sum(m, phi, signed=True, restricted=True)
    r = sum(i * v for i, v in enumerate(phi, start=1))
    d = m - r
    if d <= 1:
        closed = _phi_product(phi, signed=True)
        if d % 2:
            closed = -closed
    else:
        closed = Fraction(0)
    lhs = (full, restricted)
    rhs = (closed, closed)
    return VerificationReport(
        IdentityId.LEMMA_3_2,
        {"m": m, "phi": phi},
        lhs,
        rhs,
        lhs == rhs,
        note="lhs = (full sum, sum restricted to y_i >= phi_i)",
    )


def _verify_stirling_alternating(params: Mapping) -> VerificationReport:
    """Alternating row sums of the first-kind triangle vanish past m = 1."""
    m = _require_int(params, "m", 0)
    lhs = Fraction(0)
    for k in range(m + 1):
        term = Fraction(stirling_first_unsigned(m, k))
        lhs += -term if k % 2 else term
    rhs = Fraction((-1 if m % 2 else 1) * factorial(m)) if m <= 1 else Fraction(0)
    return VerificationReport(IdentityId.STIRLING_ALTERNATING, {"m": m}, lhs, rhs, lhs == rhs)


def _verify_binomial_partition(params: Mapping) -> VerificationReport:
    """Partition reduction with every power sum set to n equals C(n, m)."""
    m = _require_int(params, "m", 0)
    n = _require_int(params, "n", 0)
    lhs = reduce_from_power_sums([Fraction(n)] * m, m)
    rhs = Fraction(binomial(n, m))
    return VerificationReport(IdentityId.BINOMIAL_PARTITION, {"n": n, "m": m}, lhs, rhs, lhs == rhs)


def _verify_product_identity(params: Mapping) -> VerificationReport:
    """Full-window reduction (m = n - q + 1) collapses to the plain product."""
    spec = _require_spec(params)
    q = _require_int(params, "q", 0)
    n = _require_int(params, "n", 0)
    if n < q:
        raise ValueError("need n >= q")
    m = n - q + 1
    lhs = reduce_multiple_sum(spec, m, q, n)
    rhs = Fraction(1)
    for j in range(q, n + 1):
        rhs *= eval_sequence(spec, j)
    return VerificationReport(
        IdentityId.PRODUCT_IDENTITY,
        {"spec": spec, "q": q, "n": n, "m": m},
        lhs,
        rhs,
        lhs == rhs,
    )


def _verify_recurrent_bridge(params: Mapping) -> VerificationReport:
    """Recurrent and multiple sums meet the even/odd partition split.

    recurrent + (-1)^m multiple = 2 * even-partition sum
    recurrent - (-1)^m multiple = 2 * odd-partition sum
    """
    spec = _require_spec(params)
    m = _require_int(params, "m", 0)
    q = _require_int(params, "q", 0)
    n = _require_int(params, "n", 0)
    recurrent = brute_recurrent_sum(spec, m, q, n)
    multiple = brute_multiple_sum(SumProblem((spec,) * m, q, n))
    signed_multiple = -multiple if m % 2 else multiple
    sums = power_sums(spec, q, n, m)

    def weight(i: int, mult: int) -> Fraction:
        return (sums[i - 1] / i) ** mult / factorial(mult)

    even_sum = _partition_sum(m, weight, parity="even")
    odd_sum = _partition_sum(m, weight, parity="odd")
    lhs = (recurrent + signed_multiple, recurrent - signed_multiple)
    rhs = (2 * even_sum, 2 * odd_sum)
    note = (
        f"recurrent={rational_to_str(recurrent)} multiple={rational_to_str(multiple)} "
        f"even_sum={rational_to_str(even_sum)} odd_sum={rational_to_str(odd_sum)}"
    )
    return VerificationReport(
        IdentityId.RECURRENT_BRIDGE,
        {"spec": spec, "m": m, "q": q, "n": n},
        lhs,
        rhs,
        lhs == rhs,
        note=note,
    )


def _verify_even_odd_weights(params: Mapping) -> VerificationReport:
    """Even and odd partition weight totals: (1,0), (0,1), then (1/2, 1/2)."""
    m = _require_int(params, "m", 0)
    lhs = (
        _partition_sum(m, _plain_weight, parity="even"),
        _partition_sum(m, _plain_weight, parity="odd"),
    )
    if m == 0:
        rhs = (Fraction(1), Fraction(0))
    elif m == 1:
        rhs = (Fraction(0), Fraction(1))
    else:
        rhs = (Fraction(1, 2), Fraction(1, 2))
    return VerificationReport(IdentityId.EVEN_ODD_WEIGHTS, {"m": m}, lhs, rhs, lhs == rhs,
                              note="lhs = (even-partition sum, odd-partition sum)")


def _verify_even_odd_binom(params: Mapping) -> VerificationReport:
    """Binomial-filtered even/odd weight totals against the three-case closed form."""
    m = _require_int(params, "m", 0)
    phi = _normalize_phi(params.get("phi", ()), m)
    r = sum(i * v for i, v in enumerate(phi, start=1))
    s = sum(phi)
    base = _phi_product(phi, signed=False)
    d = m - r
    if d == 0:
        even_closed = base if s % 2 == 0 else Fraction(0)
        odd_closed = base if s % 2 else Fraction(0)
    elif d == 1:
        even_closed = base if s % 2 else Fraction(0)
        odd_closed = base if s % 2 == 0 else Fraction(0)
    else:
        even_closed = odd_closed = base / 2
    lhs = (
        _binom_partition_sum(m, phi, signed=False, parity="even"),
        _binom_partition_sum(m, phi, signed=False, parity="odd"),
    )
    rhs = (even_closed, odd_closed)
    return VerificationReport(
        IdentityId.EVEN_ODD_BINOM,
        {"m": m, "phi": phi},
        lhs,
        rhs,
        lhs == rhs,
        note="lhs = (even-partition sum, odd-partition sum)",
    )


def _verify_even_odd_n(params: Mapping) -> VerificationReport:
    """Even/odd split of the (n/i)-weighted partition sum, binomial closed form.

    Uses C(n+m-1, m) +/- (-1)^m C(n, m) over 2. A sometimes-printed variant
    with C(n-m+1, m) in the first slot fails direct evaluation (already at
    n=3, m=2) and is deliberately not implemented; the note records that.
    """
    m = _require_int(params, "m", 0)
    n = _require_int(params, "n", 0)

    def weight(i: int, mult: int) -> Fraction:
        return Fraction(n, i) ** mult / factorial(mult)

    lhs = (
        _partition_sum(m, weight, parity="even"),
        _partition_sum(m, weight, parity="odd"),
    )
    # n = m = 0 gives C(-1, 0) = 1 (empty choice); binomial() wants n >= 0
    main = Fraction(1) if n + m - 1 < 0 else Fraction(binomial(n + m - 1, m))
    correction = Fraction(binomial(n, m))
    if m % 2:
        correction = -correction
    rhs = ((main + correction) / 2, (main - correction) / 2)
    note = (
        "closed form uses C(n+m-1, m); the printed variant C(n-m+1, m) "
        "disagrees with direct evaluation and is corrected here"
    )
    return VerificationReport(IdentityId.EVEN_ODD_N, {"n": n, "m": m}, lhs, rhs, lhs == rhs, note=note)


_HANDLERS: dict[IdentityId, Callable[[Mapping], VerificationReport]] = {
    IdentityId.LEMMA_3_1: _verify_lemma_3_1,
    IdentityId.LEMMA_3_2: _verify_lemma_3_2,
    IdentityId.STIRLING_ALTERNATING: _verify_stirling_alternating,
    IdentityId.BINOMIAL_PARTITION: _verify_binomial_partition,
    IdentityId.PRODUCT_IDENTITY: _verify_product_identity,
    IdentityId.RECURRENT_BRIDGE: _verify_recurrent_bridge,
    IdentityId.EVEN_ODD_WEIGHTS: _verify_even_odd_weights,
    IdentityId.EVEN_ODD_BINOM: _verify_even_odd_binom,
    IdentityId.EVEN_ODD_N: _verify_even_odd_n,
}

_PARAMETER_NAMES: dict[IdentityId, tuple[str, ...]] = {
    IdentityId.LEMMA_3_1: ("m",),
    IdentityId.LEMMA_3_2: ("m", "phi"),
    IdentityId.STIRLING_ALTERNATING: ("m",),
    IdentityId.BINOMIAL_PARTITION: ("n", "m"),
    IdentityId.PRODUCT_IDENTITY: ("spec", "q", "n"),
    IdentityId.RECURRENT_BRIDGE: ("spec", "m", "q", "n"),
    IdentityId.EVEN_ODD_WEIGHTS: ("m",),
    IdentityId.EVEN_ODD_BINOM: ("m", "phi"),
    IdentityId.EVEN_ODD_N: ("n", "m"),
}

_PHI_IDENTITIES = {IdentityId.LEMMA_3_2, IdentityId.EVEN_ODD_BINOM}


def identity_parameter_names(identity: IdentityId) -> tuple[str, ...]:
    return _PARAMETER_NAMES[identity]


def verify(identity: IdentityId, params: Mapping) -> VerificationReport:
    """Run one identity check with the given parameters."""
    identity = IdentityId(identity)
    return _HANDLERS[identity](params)


def verify_sweep(
    identity: IdentityId,
    ranges: Mapping[str, Iterable[int]],
    base: Mapping | None = None,
) -> list[VerificationReport]:
    """Cartesian sweep over integer parameter ranges, deterministic order.

    For the phi-bearing identities, when no explicit phi is supplied every
    sub-partition phi of every r <= m is checked at each swept m.
    """
    identity = IdentityId(identity)
    base = dict(base or {})
    names = list(ranges.keys())
    values = [list(ranges[name]) for name in names]
    reports: list[VerificationReport] = []
    for combo in cartesian_product(*values):
        params = dict(base)
        params.update(dict(zip(names, combo)))
        if identity in _PHI_IDENTITIES and "phi" not in params:
            m = int(params["m"])
            for r in range(m + 1):
                for sub in enumerate_partitions(r):
                    phi = dict(params)
                    phi["phi"] = sub.y + (0,) * (m - r)
                    reports.append(verify(identity, phi))
        else:
            reports.append(verify(identity, params))
    return reports
