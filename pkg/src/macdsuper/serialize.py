"""Deterministic rendering: canonical text, JSON documents, LaTeX.

One total order everywhere: theta monomials by member tuple, x-monomials
by (degree, sorted exponents, exponents), so identical inputs render byte
for byte identically.  JSON documents round-trip exactly (coefficients are
carried as canonical num/den polynomial strings).
"""

from __future__ import annotations

from .fermion import FermionPoly, members_of, mask_of
from .qtfield import QTRat, normalize, parse_poly, rat_str
from .superspace import SuperPoly, order_key

# ---------------------------------------------------------------------------
# Text
# ---------------------------------------------------------------------------


def _theta_txt(mask: int) -> str:
    return "*".join(f"theta_{i}" for i in members_of(mask))


def _x_txt(alpha) -> str:
    parts = []
    for i, a in enumerate(alpha, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts)


def _term_txt(coeff: QTRat, body: str) -> str:
    cs = f"({rat_str(coeff)})"
    return f"{cs}*{body}" if body else cs


def fermion_str(f: FermionPoly) -> str:
    if f.is_zero():
        return "0"
    parts = [
        _term_txt(c, _theta_txt(mask))
        for mask, c in sorted(f.terms.items(), key=lambda kv: members_of(kv[0]))
    ]
    return " + ".join(parts)


def super_key(item):
    (alpha, mask), _ = item
    return (order_key(alpha), members_of(mask))


def super_str(p: SuperPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for (alpha, mask), c in sorted(p.terms.items(), key=super_key):
        body = "*".join(s for s in (_x_txt(alpha), _theta_txt(mask)) if s)
        parts.append(_term_txt(c, body))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def _coeff_json(c: QTRat) -> dict:
    return {"num": str(c.num), "den": str(c.den)}


def _coeff_from_json(doc: dict) -> QTRat:
    return normalize(parse_poly(doc["num"]), parse_poly(doc["den"]))


def superpoly_to_json(p: SuperPoly, label: dict | None = None) -> dict:
    terms = [
        {
            "alpha": list(alpha),
            "theta": list(members_of(mask)),
            "coeff": _coeff_json(c),
        }
        for (alpha, mask), c in sorted(p.terms.items(), key=super_key)
    ]
    doc = {"N": p.n, "m": p.m, "terms": terms}
    if label is not None:
        doc = {"label": label, **doc}
    return doc


def superpoly_from_json(doc: dict, n: int | None = None, m: int | None = None) -> SuperPoly:
    n = doc.get("N", n)
    m = doc.get("m", m)
    out = SuperPoly(n, m)
    for term in doc["terms"]:
        alpha = tuple(term["alpha"])
        mask = mask_of(term["theta"], n)
        out._add_term((alpha, mask), _coeff_from_json(term["coeff"]))
    return out


def fermion_to_json(f: FermionPoly, n_vars: int, label: dict | None = None) -> dict:
    return superpoly_to_json(SuperPoly.from_fermion(f, _fermion_degree(f)), label)


def _fermion_degree(f: FermionPoly) -> int:
    degs = f.degrees()
    return degs.pop() if len(degs) == 1 else 0


# ---------------------------------------------------------------------------
# LaTeX
# ---------------------------------------------------------------------------


def _poly_latex(poly) -> str:
    terms = sorted(poly.terms().items(), key=lambda mc: (sum(mc[0]), mc[0][0]))
    if not terms:
        return "0"
    out = []
    for (a, b), c in terms:
        mono = []
        if a == 1:
            mono.append("q")
        elif a > 1:
            mono.append(f"q^{{{a}}}")
        if b == 1:
            mono.append("t")
        elif b > 1:
            mono.append(f"t^{{{b}}}")
        body = " ".join(mono)
        ac = abs(c)
        if ac != 1 or not body:
            body = (f"{ac} " + body).strip()
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def _coeff_latex(c: QTRat) -> str:
    num = c.num
    den = c.den
    if den.is_one():
        s = _poly_latex(num)
        return f"\\left({s}\\right)" if len(num.terms()) > 1 else s
    return f"\\frac{{{_poly_latex(num)}}}{{{_poly_latex(den)}}}"


def _body_latex(alpha, mask: int) -> str:
    parts = []
    for i, a in enumerate(alpha, start=1):
        if a == 1:
            parts.append(f"x_{{{i}}}")
        elif a > 1:
            parts.append(f"x_{{{i}}}^{{{a}}}")
    parts.extend(f"\\theta_{{{i}}}" for i in members_of(mask))
    return " ".join(parts)


def super_latex(p: SuperPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for (alpha, mask), c in sorted(p.terms.items(), key=super_key):
        body = _body_latex(alpha, mask)
        cs = _coeff_latex(c)
        parts.append(f"{cs}\\, {body}" if body else cs)
    return " + ".join(parts)


def fermion_latex(f: FermionPoly) -> str:
    return super_latex(SuperPoly.from_fermion(f, _fermion_degree(f)))
