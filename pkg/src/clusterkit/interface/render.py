"""Human-facing rendering: canonical Laurent strings and DOT output.

Variable display names ("x1", "x2", ...) exist only here; the core modules
identify variables positionally.
"""

from __future__ import annotations

from ..laurent import LaurentPoly
from ..quiver import Quiver, TranslationQuiver


def _monomial_str(exponents, names) -> str:
    parts = []
    for idx, e in enumerate(exponents):
        if e == 0:
            continue
        parts.append(names[idx] if e == 1 else f"{names[idx]}^{e}")
    return "".join(parts)


def poly_str(poly: LaurentPoly, names: list[str] | None = None) -> str:
    """Canonical rendering: numerator over a monomial denominator.

    Terms appear in descending canonical order, e.g. "(1+x2)/x1" and
    "(1+x2+x1)/(x1x2)".  The denominator collects the negative exponents;
    it is parenthesized when it has more than one variable.
    """
    if names is None:
        names = [f"x{i + 1}" for i in range(poly.num_vars)]
    if poly.is_zero():
        return "0"
    den = tuple(
        max(0, -min(e[i] for e in poly.terms)) for i in range(poly.num_vars)
    )
    numerator = poly * LaurentPoly.monomial(poly.num_vars, den)
    terms = list(reversed(numerator.sorted_terms()))
    chunks = []
    for exps, coeff in terms:
        body = _monomial_str(exps, names)
        mag = abs(coeff)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}{body}"
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"+{body}" if coeff > 0 else f"-{body}")
    num_str = "".join(chunks)
    if not any(den):
        return num_str
    den_str = _monomial_str(den, names)
    if len(terms) > 1:
        num_str = f"({num_str})"
    if sum(1 for d in den if d) > 1:
        den_str = f"({den_str})"
    return f"{num_str}/{den_str}"


def _dot_id(label) -> str:
    text = str(label)
    if text.isalnum():
        return text
    escaped = text.replace('"', '\\"')
    return f'"{escaped}"'


def emit_dot(q: Quiver | TranslationQuiver) -> str:
    """Deterministic DOT rendering; tau appears as dashed edges."""
    tq = q if isinstance(q, TranslationQuiver) else None
    quiver = tq.quiver if tq else q
    lines = ["digraph G {"]
    for v in sorted(quiver.vertices, key=str):
        lines.append(f"  {_dot_id(v)};")
    for src, dst in sorted(quiver.arrows, key=lambda a: (str(a[0]), str(a[1]))):
        lines.append(f"  {_dot_id(src)} -> {_dot_id(dst)};")
    if tq:
        for src in sorted(tq.tau, key=str):
            lines.append(f"  {_dot_id(src)} -> {_dot_id(tq.tau[src])} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
