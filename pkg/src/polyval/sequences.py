"""Residual-distance sequences and the exact slope calculus.

A residual sequence (y_0, .., y_n) records integer distances measured in a
residue polygon: y_0 = 0, consecutive entries differ by exactly one, and
nothing goes negative.  Each sequence determines an exact slope

    slope(y) = sum_{i=1}^{n-1} sin(i*pi/n) * e_i * sin(y_i*pi/n) / sin(pi/n)

where e_i is -1 at peaks, +1 at valleys and 0 elsewhere.  Raising any
valley by 2 preserves the slope; repeatedly raising valleys therefore
drains every sequence into the unique valley-free (standard) sequence with
the same endpoint, and the slope only depends on (n, y_n).  The four
trigonometric identities driving that invariance are checkable exactly for
any parameters, as is the width sin(pi/n) * u of a chimney of valuation u.

Piecewise-linear schedules built from such slopes can be integrated
exactly to check continuity, nonnegativity and terminal behaviour.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CycloNumber, radical_string, sin_pi_frac
from .values import INFINITY


@dataclass(frozen=True)
class ResidualSequence:
    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) < 4:
            raise ValueError("need at least 4 entries (n >= 3)")
        if vals[0] != 0:
            raise ValueError(f"sequence must start at 0, got {vals[0]}")
        for i, v in enumerate(vals):
            if v < 0:
                raise ValueError(f"negative entry {v} at index {i}")
        for i in range(len(vals) - 1):
            if abs(vals[i] - vals[i + 1]) != 1:
                raise ValueError(
                    f"consecutive entries must differ by one: {vals[i]}, {vals[i + 1]}"
                )

    @property
    def n(self):
        return len(self.values) - 1

    @property
    def endpoint(self):
        return self.values[-1]

    def chi(self):
        """Sum of all entries; strictly increases under valley raising."""
        return sum(self.values)

    def __str__(self):
        return "(" + ",".join(str(v) for v in self.values) + ")"


def find_peaks_valleys(s: ResidualSequence):
    """Interior indices (1..n-1) where both neighbours are strictly
    smaller (peak) or strictly larger (valley); extremities never
    classified."""
    peaks, valleys = [], []
    y = s.values
    for i in range(1, s.n):
        if y[i - 1] < y[i] and y[i + 1] < y[i]:
            peaks.append(i)
        elif y[i - 1] > y[i] and y[i + 1] > y[i]:
            valleys.append(i)
    return {"peaks": peaks, "valleys": valleys}


def turn_sign(s: ResidualSequence, i):
    """-1 at a peak, +1 at a valley, 0 when the neighbours differ."""
    if not 1 <= i <= s.n - 1:
        raise IndexError(f"interior index required, got {i} for n={s.n}")
    y = s.values
    if y[i - 1] != y[i + 1]:
        return 0
    return -1 if y[i - 1] == y[i] - 1 else 1


def slope(s: ResidualSequence):
    """The exact slope contributed by a sequence, a single division by
    sin(pi/n) at the end."""
    n = s.n
    total = None
    for i in range(1, n):
        e = turn_sign(s, i)
        if e == 0:
            continue
        term = sin_pi_frac(i, n) * sin_pi_frac(s.values[i], n)
        if e < 0:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return CycloNumber.zero(4 * n)
    return total / sin_pi_frac(1, n)


def raise_valley(s: ResidualSequence, j):
    """Replace y_j by y_j + 2; j must be a valley."""
    fp = find_peaks_valleys(s)
    if j not in fp["valleys"]:
        raise ValueError(f"index {j} is not a valley of {s}")
    vals = list(s.values)
    vals[j] += 2
    return ResidualSequence(tuple(vals))


def standard_sequence(n, c):
    """The unique valley-free sequence: rise 0,1,..,p then fall to c,
    with peak p = (n+c)/2."""
    if not 0 <= c <= n:
        raise ValueError(f"endpoint {c} out of range for n={n}")
    if (c - n) % 2:
        raise ValueError(f"endpoint {c} has wrong parity for n={n}")
    p = (n + c) // 2
    vals = tuple(range(p + 1)) + tuple(range(p - 1, c - 1, -1))
    return ResidualSequence(vals)


def reduce_to_standard(s: ResidualSequence, strategy="leftmost"):
    """Raise valleys until none remain.

    The default raises the leftmost valley each step; "rightmost" is
    provided to witness order independence of the result.  Every step
    strictly increases chi and leaves the slope untouched, so the loop
    terminates at standard_sequence(n, y_n)."""
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    steps = []
    current = s
    while True:
        valleys = find_peaks_valleys(current)["valleys"]
        if not valleys:
            break
        j = valleys[0] if strategy == "leftmost" else valleys[-1]
        nxt = raise_valley(current, j)
        if nxt.chi() != current.chi() + 2:
            raise AssertionError("chi must grow by exactly 2 per step")
        steps.append((j, nxt))
        current = nxt
    return {"steps": steps, "final": current}


# the five-entry windows (y_{j-2} .. y_{j+2}) around a raised valley y_j = m,
# and the two sides of the exact identity certifying slope invariance there
_CASE_WINDOWS = {
    "i": lambda m: (m + 2, m + 1, m, m + 1, m),
    "ii": lambda m: (m, m + 1, m, m + 1, m + 2),
    "iii": lambda m: (m, m + 1, m, m + 1, m),
    "iv": lambda m: (m + 2, m + 1, m, m + 1, m + 2),
}


def verify_case_identity(case, j, m, n):
    """Evaluate both sides of the slope-invariance identity for one of the
    four valley neighbourhoods, exactly.

    Index range 2 <= j <= n-1: a valley never sits at j < 2, and j = n-1
    rides on the same identities because the would-be extra term carries
    the coefficient sin(n*pi/n) = 0."""
    if case not in _CASE_WINDOWS:
        raise ValueError(f"unknown case {case!r}")
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if not 2 <= j <= n - 1:
        raise ValueError(f"need 2 <= j <= n-1, got j={j} for n={n}")
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")

    def S(k):
        return sin_pi_frac(k, n)

    if case == "i":
        lhs = -(S(j) * S(m)) + S(j + 1) * S(m + 1)
        rhs = -(S(j - 1) * S(m + 1)) + S(j) * S(m + 2)
    elif case == "ii":
        lhs = -(S(j - 1) * S(m + 1)) + S(j) * S(m)
        rhs = -(S(j) * S(m + 2)) + S(j + 1) * S(m + 1)
    elif case == "iii":
        lhs = S(j - 1) * S(m + 1) - S(j) * S(m) + S(j + 1) * S(m + 1)
        rhs = S(j) * S(m + 2)
    else:  # iv
        lhs = -(S(j) * S(m))
        rhs = -(S(j - 1) * S(m + 1)) + S(j) * S(m + 2) - S(j + 1) * S(m + 1)
    return lhs == rhs


def case_identity_sweep(n_max=12, n_min=3, m_max=None):
    """Exhaustively check all four identities for 3 <= n <= n_max, all
    valid j, and 0 <= m <= (m_max or 2n)."""
    report = {"cases": {}, "checked": 0, "failures": [], "pass": True}
    for case in _CASE_WINDOWS:
        count = 0
        for n in range(n_min, n_max + 1):
            top = 2 * n if m_max is None else m_max
            for j in range(2, n):
                for m in range(0, top + 1):
                    count += 1
                    if not verify_case_identity(case, j, m, n):
                        report["failures"].append({"case": case, "n": n, "j": j, "m": m})
            report["cases"][case] = count
        report["checked"] += count
    report["pass"] = not report["failures"]
    return report


def chimney_width(n, u):
    """sin(pi/n) times a finite valuation u."""
    if u is INFINITY:
        raise ValueError("chimney width needs a finite valuation")
    return sin_pi_frac(1, n) * Fraction(u)


def enumerate_residual_sequences(n, endpoint=None):
    """All valid sequences of the given length, optionally with a fixed
    endpoint; at most 2^(n-1) of them."""
    out = []
    stack = [(0,)]
    while stack:
        prefix = stack.pop()
        if len(prefix) == n + 1:
            if endpoint is None or prefix[-1] == endpoint:
                out.append(ResidualSequence(prefix))
            continue
        last = prefix[-1]
        stack.append(prefix + (last + 1,))
        if last > 0:
            stack.append(prefix + (last - 1,))
    out.sort(key=lambda s: s.values)
    return out


# ---------------------------------------------------------------------------
# schedules


@dataclass(frozen=True)
class FSchedule:
    """Ordered (sequence, length) segments with a nonnegative start value;
    all segments must share n."""

    segments: tuple
    f0: CycloNumber

    def __post_init__(self):
        segs = []
        for seq, length in self.segments:
            if not isinstance(seq, ResidualSequence):
                raise TypeError("segments carry ResidualSequence entries")
            length = Fraction(length)
            if length <= 0:
                raise ValueError(f"segment length must be positive, got {length}")
            segs.append((seq, length))
        object.__setattr__(self, "segments", tuple(segs))
        ns = {seq.n for seq, _ in segs}
        if len(ns) > 1:
            raise ValueError(f"segments mix different n: {sorted(ns)}")
        if not isinstance(self.f0, CycloNumber):
            raise TypeError("initial value must be a CycloNumber")
        if self.f0.sign() < 0:
            raise ValueError("initial value must be nonnegative")


def integrate_schedule(sch: FSchedule):
    """Integrate the segment slopes from f0.

    Returns the exact breakpoints, whether the terminal value is zero and
    whether the terminal slope is zero.  Within a segment the function is
    linear, so negativity can only show at a breakpoint; any negative
    breakpoint is an inconsistency and raises."""
    position = Fraction(0)
    value = sch.f0
    breakpoints = [(position, value)]
    last_slope = None
    for seq, length in sch.segments:
        a = slope(seq)
        last_slope = a
        position += length
        value = value + a * length
        if value.sign() < 0:
            raise ValueError(
                f"schedule drives the value negative at position {position}"
            )
        breakpoints.append((position, value))
    terminal_zero = value.is_zero()
    terminal_slope_zero = last_slope.is_zero() if last_slope is not None else True
    return {
        "breakpoints": breakpoints,
        "terminal_zero": terminal_zero,
        "terminal_slope_zero": terminal_slope_zero,
    }


def slope_str(x):
    """Radical form when available, else the coefficient vector."""
    return radical_string(x) or str([str(c) for c in x.coeffs])
