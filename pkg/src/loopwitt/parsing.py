"""Textual syntax for loop-algebra elements.

Terms look like ``D(1,0;0,1)*x`` or ``t(1,0)*1`` or ``-2*D(1;0)*1``:
a D(u;r) or t(r) head, optional scalar prefixes and an optional B
coefficient.  B coefficients are polynomials in the presentation
generator x, e.g. ``(4*x - 4)`` or ``x^-1`` (laurent only).  Sums use
top-level + and -.
"""

from __future__ import annotations

import re
from typing import List, Tuple

from .coeff import BElem, BPresentation
from .loop import LoopElem
from .scalars import GaussRat, parse_gauss


class ParseError(ValueError):
    pass


def _split_top(s: str, seps: str) -> List[str]:
    """Split on separators not nested in parentheses, keeping signs."""
    parts = []
    depth = 0
    cur = ""
    for k, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses")
        if depth == 0 and ch in seps and cur.strip():
            parts.append(cur)
            cur = ch if ch in "+-" else ""
            continue
        cur += ch
    if depth != 0:
        raise ParseError("unbalanced parentheses")
    if cur.strip():
        parts.append(cur)
    return parts


_MONO = re.compile(r"^\s*x(?:\^(-?\d+))?\s*$")


def parse_b_elem(s: str, pres: BPresentation) -> BElem:
    """Parse a B coefficient: a sum of c, x^k and c*x^k terms."""
    s = s.strip()
    if s.startswith("(") and s.endswith(")") and _balanced(s[1:-1]):
        s = s[1:-1]
    out = pres.zero()
    for part in _split_top(s, "+-"):
        sign = 1
        part = part.strip()
        while part and part[0] in "+-":
            if part[0] == "-":
                sign = -sign
            part = part[1:].strip()
        coeff = GaussRat(1)
        mono_exp = 0
        for factor in _split_top(part, "*"):
            factor = factor.strip()
            if factor.startswith("(") and factor.endswith(")"):
                factor = factor[1:-1].strip()
            m = _MONO.match(factor)
            if m:
                mono_exp += int(m.group(1)) if m.group(1) else 1
                continue
            try:
                coeff = coeff * parse_gauss(factor)
            except ValueError as exc:
                raise ParseError(f"bad coefficient factor {factor!r}") from exc
        term = pres.from_poly({mono_exp: coeff * sign})
        out = out + term
    return out


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return False
    return depth == 0


_HEAD = re.compile(r"^(D|t)\((.*)\)$")


def parse_loop_expr(s: str, n: int, pres: BPresentation) -> LoopElem:
    out = LoopElem.zero(n, pres)
    for part in _split_top(s, "+-"):
        sign = 1
        part = part.strip()
        while part and part[0] in "+-":
            if part[0] == "-":
                sign = -sign
            part = part[1:].strip()
        head = None
        b = pres.one()
        scalar = GaussRat(sign)
        for factor in _split_top(part, "*"):
            factor = factor.strip()
            m = _HEAD.match(factor)
            if m:
                if head is not None:
                    raise ParseError("term has two D/t heads")
                head = (m.group(1), m.group(2))
                continue
            if "x" in factor:
                b = b * parse_b_elem(factor, pres)
                continue
            try:
                scalar = scalar * parse_gauss(factor.strip("()"))
            except ValueError as exc:
                raise ParseError(f"cannot parse factor {factor!r}") from exc
        if head is None:
            raise ParseError(f"term {part!r} has no D(u;r) or t(r) head")
        kind, body = head
        coeff = b.scale(scalar)
        if kind == "t":
            r = _parse_int_vec(body, n)
            out = out + LoopElem.t_part(n, pres, r, coeff)
        else:
            if ";" not in body:
                raise ParseError("D head needs the form D(u;r)")
            u_s, r_s = body.split(";", 1)
            u = [parse_gauss(x) for x in u_s.split(",")]
            if len(u) != n:
                raise ParseError(f"u must have {n} components")
            r = _parse_int_vec(r_s, n)
            out = out + LoopElem.d_vec(n, pres, u, r, coeff)
    return out


def _parse_int_vec(s: str, n: int) -> Tuple[int, ...]:
    try:
        vec = tuple(int(x.strip()) for x in s.split(","))
    except ValueError as exc:
        raise ParseError(f"bad integer vector {s!r}") from exc
    if len(vec) != n:
        raise ParseError(f"degree must have {n} components")
    return vec


# -- printing ---------------------------------------------------------


def _format_gauss_factor(c: GaussRat) -> str:
    """Short scalar form for printing: omit unit denominators."""
    if c.im == 0:
        f = c.re
        return str(f.numerator) if f.denominator == 1 else f"{f}"
    return f"({c})"


def format_b_elem(b: BElem) -> str:
    pres = b.pres
    if pres.kind == "trivial":
        return _format_gauss_factor(b.rep)
    if pres.kind == "polyquot":
        items = [(e, c) for e, c in enumerate(b.rep) if c]
    else:
        items = sorted(b.rep.items(), reverse=True)
    if not items:
        return "0"
    if len(items) == 1 and items[0][0] == 0:
        return _format_gauss_factor(items[0][1])
    parts = []
    for e, c in items:
        mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        cs = _format_gauss_factor(c)
        if mono and cs == "1":
            piece = mono
        elif mono and cs == "-1":
            piece = f"-{mono}"
        elif mono:
            piece = f"{cs}*{mono}"
        else:
            piece = cs
        parts.append(piece)
    out = parts[0]
    for piece in parts[1:]:
        out += piece if piece.startswith("-") else f"+{piece}"
    return f"({out})"


def format_loop_elem(x: LoopElem) -> str:
    if x.is_zero():
        return "0"
    pieces = []
    for (kind, i, r), b in x.sorted_terms():
        deg = ",".join(str(a) for a in r)
        if kind == "t":
            head = f"t({deg})"
        else:
            u = ",".join("1" if j == i else "0" for j in range(1, x.n + 1))
            head = f"D({u};{deg})"
        bs = format_b_elem(b)
        if bs.startswith("(") or bs in ("0",) or not _is_plain_scalar(bs):
            pieces.append(f"{head}*{bs}")
        elif bs == "1":
            pieces.append(f"{head}*1")
        elif bs.startswith("-"):
            pieces.append(f"{bs}*{head}*1" if bs != "-1" else f"-{head}*1")
        else:
            pieces.append(f"{bs}*{head}*1")
    out = pieces[0]
    for p in pieces[1:]:
        out += f" {p}" if p.startswith("-") else f" + {p}"
    if out.startswith("-") is False and out.startswith(" "):
        out = out.lstrip()
    return out


_PLAIN = re.compile(r"^-?\d+(/\d+)?$")


def _is_plain_scalar(s: str) -> bool:
    return bool(_PLAIN.match(s))
