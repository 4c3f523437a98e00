"""Order bounds for r-regular graphs of chromatic number chi."""

from __future__ import annotations

from dataclasses import asdict, dataclass


class InfeasibleError(ValueError):
    pass


def feasible(r: int, chi: int) -> bool:
    """``2 <= chi <= r+1``, plus the edgeless case ``(0, 1)``."""
    if r < 0 or chi < 1:
        return False
    if chi == 1:
        return r == 0
    return chi <= r + 1


def _check(r: int, chi: int) -> None:
    if not feasible(r, chi):
        raise InfeasibleError(f"no r-regular graph with r={r} has chromatic number {chi}")


def decomposition(r: int, chi: int) -> tuple[int, int]:
    """``(a, b)`` with ``r = a(chi-1) + b`` and ``b = r mod (chi-1)``."""
    _check(r, chi)
    if chi == 1:
        return 0, 0
    return divmod(r, chi - 1)


def raw_lower_bound(r: int, chi: int) -> int:
    """``ceil(r chi / (chi-1))`` without the parity correction."""
    _check(r, chi)
    if chi == 1:
        return 1
    return -(-(r * chi) // (chi - 1))


def lower_bound(r: int, chi: int) -> int:
    n = raw_lower_bound(r, chi)
    if r % 2 and n % 2:
        n += 1
    return n


def upper_bound_thm2(r: int, chi: int) -> int:
    """Order ``a chi (b+1)`` of the product witness."""
    a, b = decomposition(r, chi)
    if chi == 1:
        return 1
    return a * chi * (b + 1)


def upper_bound_thm3(r: int, chi: int) -> int:
    _check(r, chi)
    if chi == 1:
        return 1
    return min(2 * ((r * chi) // (chi - 1)), upper_bound_thm2(r, chi))


@dataclass(frozen=True)
class BoundsReport:
    r: int
    chi: int
    a: int
    b: int
    raw_lower: int
    lower: int
    upper_thm2: int
    upper_thm3: int

    def to_dict(self) -> dict:
        return asdict(self)


def bounds_report(r: int, chi: int) -> BoundsReport:
    a, b = decomposition(r, chi)
    return BoundsReport(
        r=r,
        chi=chi,
        a=a,
        b=b,
        raw_lower=raw_lower_bound(r, chi),
        lower=lower_bound(r, chi),
        upper_thm2=upper_bound_thm2(r, chi),
        upper_thm3=upper_bound_thm3(r, chi),
    )
