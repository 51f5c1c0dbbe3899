"""Integer Laurent polynomials in one variable ``q``."""
from __future__ import annotations

from typing import Mapping

from .errors import NotDivisible

__all__ = ["Laurent"]


class Laurent:
    """Sparse Laurent polynomial ``sum c_k q^k`` with integer coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.c = {int(k): int(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def monomial(cls, k: int, coef: int = 1) -> "Laurent":
        return cls({k: coef})

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, 0) + v
        return Laurent(out)

    def __neg__(self) -> "Laurent":
        return Laurent({k: -v for k, v in self.c.items()})

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other) -> "Laurent":
        if isinstance(other, int):
            return Laurent({k: v * other for k, v in self.c.items()})
        out: dict[int, int] = {}
        for a, x in self.c.items():
            for b, y in other.c.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return Laurent(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        return isinstance(other, Laurent) and self.c == other.c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.c.items())))

    def __bool__(self) -> bool:
        return bool(self.c)

    def divide_one_plus_qinv(self) -> "Laurent":
        """Exact quotient by ``1 + q^-1``; raises :class:`NotDivisible` otherwise."""
        if not self.c:
            return Laurent()
        top, bot = max(self.c), min(self.c)
        v: dict[int, int] = {}
        prev = 0
        # coefficient of q^k in (1 + q^-1) V is v_k + v_{k+1}
        for k in range(top, bot - 1, -1):
            v[k] = self.c.get(k, 0) - prev
            prev = v[k]
        if v[bot]:
            raise NotDivisible(f"{self} is not divisible by 1 + q^-1")
        return Laurent(v)

    def to_dict(self) -> dict[str, int]:
        return {str(k): v for k, v in sorted(self.c.items(), reverse=True)}

    def __repr__(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for k, v in sorted(self.c.items(), reverse=True):
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            coef = str(v) if (abs(v) != 1 or not mono) else ("-" if v < 0 else "")
            parts.append(f"{coef}{mono}")
        return " + ".join(parts).replace("+ -", "- ")
