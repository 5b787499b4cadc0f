"""Monodromy multiplicities e_d and the characteristic polynomial of h_1.

Nothing here computes homology of local systems.  Each e_d is pinned down by
combining known rules, and every status records the rules that produced it:

R1  no rank-2 flat has multiplicity divisible by d        -> e_d = 0
R2  the arrangement is a product                          -> e_d = 0
R3  d = p prime and A is a reflection arrangement         -> e_p = beta_p
R4  d = p^s                                               -> e_d <= beta_p
R5  a k-multinet with weights = 1 (mod k) and d | k       -> e_d >= 1
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrangement import Arrangement, FlatTable, compute_flat_table, decompose
from .cyclotomic import cyclotomic_polynomial, poly_mul
from .multinet import Multinet, is_h_reduced, verify

RULES = {
    "R1": "no flat multiplicity divisible by d",
    "R2": "arrangement is decomposable",
    "R3": "reflection arrangement, d prime: e_p = beta_p",
    "R4": "prime power d = p^s: e_d <= beta_p",
    "R5": "reduced k-multinet with d | k: e_d >= 1",
}


class InconsistentRules(RuntimeError):
    """Two rules gave incompatible answers; this indicates a bug upstream."""


@dataclass(frozen=True)
class DiagonalCharacter:
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")


@dataclass
class Status:
    kind: str  # "zero" | "exact" | "range"
    lo: int = 0
    hi: int | None = None
    rules: list = field(default_factory=list)

    @property
    def value(self) -> int | None:
        return self.lo if self.kind in ("zero", "exact") else None

    def to_json(self) -> dict:
        out = {"status": self.kind, "rules": list(self.rules)}
        if self.kind == "range":
            out["lo"], out["hi"] = self.lo, self.hi
        else:
            out["value"] = self.lo
        return out


@dataclass
class MonodromyProfile:
    name: str
    n: int
    statuses: dict  # d -> Status, for divisors d > 1 of n

    @property
    def e1(self) -> int:
        return self.n - 1

    def e(self, d: int) -> Status:
        return self.statuses[d]

    def to_json(self) -> dict:
        e = {"1": self.n - 1}
        e.update({str(d): s.to_json() for d, s in sorted(self.statuses.items())})
        return {"arrangement": self.name, "n": self.n, "e": e,
                "char_poly": char_poly(self).to_json()}


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_power(d: int) -> tuple[int, int] | None:
    """(p, s) with d = p^s, or None."""
    for p in range(2, d + 1):
        if d % p == 0:
            s, x = 0, d
            while x % p == 0:
                x //= p
                s += 1
            return (p, s) if x == 1 else None
    return None


def divisor_flat_screen(flats: FlatTable, d: int) -> bool:
    """True iff some rank-2 flat has multiplicity divisible by d."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return any(X.multiplicity % d == 0 for X in flats.flats)


def monodromy_profile(arr: Arrangement, flats: FlatTable | None, betti: dict,
                      nets: list[Multinet] = (), is_reflection: bool | None = None
                      ) -> MonodromyProfile:
    """Combine rules R1..R5 for each divisor d > 1 of n = |A|.

    ``betti`` maps primes to beta_p values; a prime needed by R3/R4 but missing
    raises KeyError.  ``nets`` must be multinets on ``arr``; each is re-verified.
    """
    flats = flats if flats is not None else compute_flat_table(arr)
    if is_reflection is None:
        is_reflection = arr.is_reflection
    n = arr.n
    decomposable = len(decompose(arr)) > 1
    net_orders = []
    for net in nets:
        if not verify(arr, flats, net).valid:
            raise ValueError("multinet fails the block-sum axiom")
        if is_h_reduced(net, arr, net.k):
            net_orders.append(net.k)

    statuses = {}
    for d in divisors(n)[1:]:
        lo, hi, rules, zero = 0, None, [], False
        if not divisor_flat_screen(flats, d):
            zero = True
            rules.append("R1")
        if decomposable:
            zero = True
            rules.append("R2")
        pp = prime_power(d)
        if pp is not None:
            p, s = pp
            if p not in betti:
                raise KeyError(f"beta_{p} is needed for d = {d}")
            if s == 1 and is_reflection:
                lo = max(lo, betti[p])
                hi = betti[p]
                rules.append("R3")
            else:
                hi = betti[p] if hi is None else min(hi, betti[p])
                rules.append("R4")
        if any(k % d == 0 for k in net_orders):
            lo = max(lo, 1)
            rules.append("R5")
        if zero:
            if lo > 0:
                raise InconsistentRules(f"d = {d}: vanishing rule vs lower bound {lo}")
            statuses[d] = Status("zero", 0, 0, rules)
        elif hi is not None and lo > hi:
            raise InconsistentRules(f"d = {d}: lower bound {lo} exceeds upper bound {hi}")
        elif hi is not None and lo == hi:
            statuses[d] = Status("exact", lo, hi, rules)
        else:
            statuses[d] = Status("range", lo, hi, rules)
    return MonodromyProfile(arr.family or "arrangement", n, statuses)


@dataclass
class CharPoly:
    n: int
    exponents: dict  # d -> e_d for d > 1 with e_d > 0 (exact entries only)
    complete: bool
    unresolved: list

    def factors(self) -> list[tuple[str, int]]:
        out = [("t-1", self.n - 1)]
        out += [(f"Phi_{d}", e) for d, e in sorted(self.exponents.items()) if e]
        return out

    def expand(self) -> tuple:
        """Integer coefficients, lowest degree first."""
        poly = (1,)
        for d, e in [(1, self.n - 1)] + sorted(self.exponents.items()):
            for _ in range(e):
                poly = poly_mul(poly, cyclotomic_polynomial(d))
        return poly

    def degree(self) -> int:
        return len(self.expand()) - 1

    def __str__(self):
        parts = []
        for name, e in self.factors():
            base = "(t-1)" if name == "t-1" else _phi_text(int(name.split("_")[1]))
            parts.append(base if e == 1 else f"{base}^{e}")
        text = " ".join(parts)
        if not self.complete:
            text += "  [unresolved: " + ", ".join(f"d={d}" for d in self.unresolved) + "]"
        return text

    def to_json(self) -> dict:
        return {"factors": [list(f) for f in self.factors()], "complete": self.complete,
                "unresolved": list(self.unresolved)}


def _phi_text(d: int) -> str:
    coeffs = cyclotomic_polynomial(d)
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if mono:
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        else:
            body = str(abs(c))
        sign = "-" if c < 0 else "+"
        terms.append(body if not terms and c > 0 else (f"-{body}" if not terms else f" {sign} {body}"))
    return "(" + "".join(terms) + ")"


def char_poly(profile: MonodromyProfile) -> CharPoly:
    exps, unresolved = {}, []
    for d, s in sorted(profile.statuses.items()):
        if s.kind == "range":
            unresolved.append(d)
        elif s.lo:
            exps[d] = s.lo
    return CharPoly(profile.n, exps, not unresolved, unresolved)


def profile_for(arr: Arrangement, nets: list[Multinet] = (), flats: FlatTable | None = None
                ) -> MonodromyProfile:
    """Compute the needed beta_p values and the profile in one call."""
    from .resonance import beta_p

    flats = flats if flats is not None else compute_flat_table(arr)
    primes = sorted({prime_power(d)[0] for d in divisors(arr.n)[1:] if prime_power(d)})
    betti = {p: beta_p(arr, p, flats).value for p in primes}
    return monodromy_profile(arr, flats, betti, nets)
