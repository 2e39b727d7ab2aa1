"""A small, independent checker for the LP-format subset we emit."""

import re

NUM = r"[0-9]+(?:\.[0-9]+)?(?:e[-+]?[0-9]+)?"
TERM = re.compile(rf"\+ ({NUM}) x([1-9][0-9]*)")


def _logical(lines):
    """Join 3-space continuation lines onto the previous line."""
    out = []
    for ln in lines:
        if ln.startswith("   "):
            assert out, "continuation before any statement"
            out[-1] += " " + ln.strip()
        else:
            out.append(ln)
    return out


def check_lp(text: str, n: int):
    """Parse ``text``; return (objective coefficients, constraint rows, relaxed).
    Raises AssertionError on any grammar violation."""
    assert text.endswith("\n") and not text.endswith("\n\n")
    raw = text[:-1].split("\n")
    assert all(len(ln) <= 255 for ln in raw)
    lines = _logical(raw)
    assert lines[0] == "Minimize" and lines[-1] == "End"
    m = re.fullmatch(rf" obj:((?: {TERM.pattern})+)", lines[1])
    assert m, lines[1]
    obj = {int(i): float(c) for c, i in TERM.findall(m.group(1))}
    assert sorted(obj) == list(range(1, n + 1))
    assert lines[2] == "Subject To"
    rows = []
    for j in range(n):
        m = re.fullmatch(rf" dom{j + 1}:((?: {TERM.pattern})+) >= 1", lines[3 + j])
        assert m, lines[3 + j]
        terms = TERM.findall(m.group(1))
        assert all(c == "1" for c, _ in terms)
        idx = [int(i) for _, i in terms]
        assert idx == sorted(set(idx)) and idx[-1] <= n
        rows.append(idx)
    rest = lines[3 + n:-1]
    if rest[0] == "Bounds":
        assert rest[1:] == [f" 0 <= x{i} <= 1" for i in range(1, n + 1)]
        return obj, rows, True
    assert rest[0] == "Binaries" and len(rest) == 2
    assert rest[1] == " " + " ".join(f"x{i}" for i in range(1, n + 1))
    return obj, rows, False
