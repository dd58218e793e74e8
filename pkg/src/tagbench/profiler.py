"""Distribution profiler for streams of boxed float bits.

Values are bucketed by their 5-bit exponent prefix into 32 magnitude
ranges; exact zeros and Inf/NaN get rows of their own in the rendered
table. A FloatProfile's add method is shaped to be a Runtime profile_hook,
so a workload can be profiled by running it once under any scheme.

The magnitude boundary labels are two-significant-digit decimal strings,
with the first and last bounds pinned to the smallest subnormal and the
largest finite double."""

import io
from typing import NamedTuple

from .schemes import (
    BOXED,
    MANTISSA,
    SELF_TAG_VARIANTS,
    class_lo,
    covered_prefix_classes,
)
from .words import EXP_MASK_64, SIGN_64

MIN_SUBNORMAL = 5e-324
MAX_FINITE = 1.7976931348623157e308

_ABS_MASK = SIGN_64 - 1  # low 63 bits


def fmt_magnitude(x):
    """Two-significant-digit label: mantissa trimmed of a trailing .0,
    no exponent part for e0, edge values pinned."""
    if x == MIN_SUBNORMAL:
        return "5e-324"
    if x == MAX_FINITE:
        return "1.8e308"
    m, e = ("%.1e" % x).split("e")
    if m.endswith(".0"):
        m = m[:-2]
    e = int(e)
    return m if e == 0 else "%se%d" % (m, e)


def bound_labels():
    """The 33 boundary labels of the 32 magnitude rows."""
    labels = [fmt_magnitude(MIN_SUBNORMAL)]
    labels += [fmt_magnitude(class_lo(p)) for p in range(1, 32)]
    labels.append(fmt_magnitude(MAX_FINITE))
    return labels


class Classified(NamedTuple):
    prefix: int
    is_zero: bool
    is_inf_nan: bool


def classify(bits):
    return Classified(
        (bits >> 58) & 31,
        bits & _ABS_MASK == 0,
        bits & EXP_MASK_64 == EXP_MASK_64,
    )


class FloatProfile:
    """Histogram over the 32 exponent-prefix classes plus zero and
    Inf/NaN sub-counts (subsets of classes 0 and 31)."""

    __slots__ = ("name", "_prefix", "_zeros", "_inf_nan", "_total")

    def __init__(self, name="boxes"):
        self.name = name
        self._prefix = [0] * 32
        self._zeros = 0
        self._inf_nan = 0
        self._total = 0

    def add(self, bits):
        self._prefix[(bits >> 58) & 31] += 1
        self._total += 1
        if not bits & 0x7FFFFFFFFFFFFFFF:
            self._zeros += 1
        elif bits & 0x7FF0000000000000 == 0x7FF0000000000000:
            self._inf_nan += 1

    @property
    def total(self):
        return self._total

    @property
    def zeros(self):
        return self._zeros

    @property
    def inf_nan(self):
        return self._inf_nan

    @property
    def prefix_counts(self):
        return tuple(self._prefix)

    def range_count(self, p):
        """Count for magnitude row p, zeros and Inf/NaN excluded."""
        c = self._prefix[p]
        if p == 0:
            c -= self._zeros
        if p == 31:
            c -= self._inf_nan
        return c

    def class_mass(self, classes):
        """Fraction of all counted boxes whose prefix class is in
        classes (zeros land in class 0, Inf/NaN in class 31)."""
        if self._total == 0:
            return 0.0
        return sum(self._prefix[p] for p in classes) / self._total

    def hit_ratio(self, scheme):
        """Fraction of the counted boxes the scheme would have kept
        immediate. Exponent-prefix schemes only; the mantissa scheme's
        decision needs low bits this histogram does not keep."""
        if scheme.variant == MANTISSA:
            raise ValueError("mantissa coverage is not a prefix-class function")
        if self._total == 0:
            return 1.0
        if scheme.variant in SELF_TAG_VARIANTS:
            return self.class_mass(covered_prefix_classes(scheme))
        return 0.0 if scheme.variant == BOXED else 1.0

    def merged(self, other, name=None):
        out = FloatProfile(self.name if name is None else name)
        out._prefix = [a + b for a, b in zip(self._prefix, other._prefix)]
        out._zeros = self._zeros + other._zeros
        out._inf_nan = self._inf_nan + other._inf_nan
        out._total = self._total + other._total
        return out


def merge(profiles, name="merged"):
    out = FloatProfile(name)
    for p in profiles:
        out = out.merged(p, name=name)
    return out


def _pct(count, total):
    if count == 0:
        return "-"
    frac = count / total
    if frac < 0.005:
        return "0%"
    return "%d%%" % int(frac * 100 + 0.5)


def _rows(profiles):
    """(row id, lo label, hi label, cells) per table row."""
    bounds = bound_labels()
    rows = [("zero", "0", "0", [_pct(p.zeros, p.total or 1) for p in profiles])]
    for i in range(32):
        rows.append(
            (
                format(i, "05b"),
                bounds[i],
                bounds[i + 1],
                [_pct(p.range_count(i), p.total or 1) for p in profiles],
            )
        )
    rows.append(
        ("inf_nan", "inf", "inf", [_pct(p.inf_nan, p.total or 1) for p in profiles])
    )
    return rows


def render_table(profiles, fmt="text"):
    """Render one column per profile over the 34 rows (zero, 32 magnitude
    ranges, Inf/NaN). fmt is "text" or "csv"."""
    profiles = list(profiles)
    rows = _rows(profiles)
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(",".join(["prefix", "range_lo", "range_hi"] + [p.name for p in profiles]))
        buf.write("\n")
        for rid, lo, hi, cells in rows:
            buf.write(",".join([rid, lo, hi] + cells))
            buf.write("\n")
        return buf.getvalue()
    if fmt != "text":
        raise ValueError("unknown table format: %r" % (fmt,))
    labels = {
        "zero": "0",
        "inf_nan": "Inf/NaN",
    }
    out = []
    body = []
    for rid, lo, hi, cells in rows:
        label = labels.get(rid, "%s .. %s" % (lo, hi))
        body.append((label, cells))
    lw = max(len(label) for label, _ in body)
    lw = max(lw, len("range"))
    widths = [max(len(p.name), 4) for p in profiles]
    out.append(
        "range".ljust(lw) + "".join("  " + p.name.rjust(w) for p, w in zip(profiles, widths))
    )
    for label, cells in body:
        out.append(
            label.ljust(lw) + "".join("  " + c.rjust(w) for c, w in zip(cells, widths))
        )
    return "\n".join(out) + "\n"
