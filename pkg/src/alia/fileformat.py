"""Reader and canonical writer for ``.alia`` structure files.

Line oriented, ``#`` starts a comment::

    dim 4
    param lambda
    bracket 3 1 = 1*1
    comul 3 = -1*(1,2)
    map N = 1*(1<-1) + 1*(1<-2)
    tensor r = 1*(2,3) - 1*(3,2)
    form omega = lambda*(2,4) - lambda*(4,2)

Indices are 1-based in files.  Coefficients are rational expressions in the
declared parameters; the parser substitutes bound values and remembers the
largest polynomial degree it met, which certification uses as a bound.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import numpy as np

from .core import (
    AliaError, Algebra, BilinearForm, Coalgebra, LinearMap, TwoTensor, as_scalar, zeros,
)


class FileError(AliaError):
    pass


def _syntax(line: int, col: int, msg: str) -> FileError:
    return FileError(f"SYNTAX({line},{col}): {msg}", "SYNTAX")


@dataclass
class Bundle:
    """Everything a file can declare, with the algebra and coalgebra defaulting to zero."""

    dim: int
    params: tuple[str, ...] = ()
    algebra: Algebra | None = None
    coalgebra: Coalgebra | None = None
    maps: dict[str, LinearMap] = field(default_factory=dict)
    tensors: dict[str, TwoTensor] = field(default_factory=dict)
    forms: dict[str, BilinearForm] = field(default_factory=dict)
    degree: int = 0

    def __post_init__(self):
        if self.algebra is None:
            self.algebra = Algebra.zero(self.dim)
        if self.coalgebra is None:
            self.coalgebra = Coalgebra.zero(self.dim)

    def __eq__(self, other):
        if not isinstance(other, Bundle):
            return NotImplemented
        return (self.dim == other.dim and self.algebra == other.algebra
                and self.coalgebra == other.coalgebra and self.maps == other.maps
                and self.tensors == other.tensors and self.forms == other.forms)

    def replace(self, **changes) -> "Bundle":
        data = dict(dim=self.dim, params=self.params, algebra=self.algebra,
                    coalgebra=self.coalgebra, maps=dict(self.maps), tensors=dict(self.tensors),
                    forms=dict(self.forms), degree=self.degree)
        data.update(changes)
        return Bundle(**data)


# ------------------------------------------------------------ expressions

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class _Expr:
    """Recursive-descent evaluator returning (value, degree in the parameters)."""

    def __init__(self, text: str, line: int, col0: int, params: tuple[str, ...],
                 bindings: Mapping[str, Fraction]):
        self.toks = []
        for m in _TOKEN.finditer(text):
            if m.group(0).strip() == "":
                continue
            kind = "num" if m.group(1) else "name" if m.group(2) else "op"
            self.toks.append((kind, m.group(m.lastindex), col0 + m.start(m.lastindex)))
        self.i = 0
        self.line, self.col0, self.text = line, col0, text
        self.params, self.bindings = params, bindings

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", "", self.col0 + len(self.text))

    def _take(self):
        tok = self._peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise _syntax(self.line, self.col0 + 1, "empty coefficient")
        val = self._sum()
        kind, tok, col = self._peek()
        if kind != "end":
            raise _syntax(self.line, col + 1, f"unexpected {tok!r}")
        return val

    def _sum(self):
        v, d = self._product()
        while self._peek()[1] in ("+", "-") and self._peek()[0] == "op":
            op = self._take()[1]
            w, e = self._product()
            v = v + w if op == "+" else v - w
            d = max(d, e)
        return v, d

    def _product(self):
        v, d = self._unary()
        while self._peek()[0] == "op" and self._peek()[1] in ("*", "/"):
            _, op, col = self._take()
            w, e = self._unary()
            if op == "*":
                v, d = v * w, d + e
            else:
                if e:
                    raise _syntax(self.line, col + 1, "division by a parameter expression")
                if w == 0:
                    raise _syntax(self.line, col + 1, "division by zero")
                v = v / w
        return v, d

    def _unary(self):
        kind, tok, _ = self._peek()
        if kind == "op" and tok in ("+", "-"):
            self._take()
            v, d = self._unary()
            return (v if tok == "+" else -v), d
        return self._power()

    def _power(self):
        v, d = self._atom()
        if self._peek()[0] == "op" and self._peek()[1] == "^":
            self._take()
            kind, tok, col = self._take()
            if kind != "num":
                raise _syntax(self.line, col + 1, "exponent must be a non-negative integer")
            k = int(tok)
            return v ** k, d * k
        return v, d

    def _atom(self):
        kind, tok, col = self._take()
        if kind == "num":
            return Fraction(int(tok)), 0
        if kind == "name":
            if tok not in self.params:
                raise FileError(f"UNBOUND_PARAM({tok}): not declared", "UNBOUND_PARAM")
            if tok not in self.bindings:
                raise FileError(f"UNBOUND_PARAM({tok}): no value given", "UNBOUND_PARAM")
            return Fraction(self.bindings[tok]), 1
        if kind == "op" and tok == "(":
            v = self._sum()
            k2, t2, c2 = self._take()
            if t2 != ")":
                raise _syntax(self.line, c2 + 1, "expected ')'")
            return v
        raise _syntax(self.line, col + 1, f"unexpected {tok!r}" if tok else "unexpected end")


def _split_terms(text: str, line: int, col0: int) -> list[tuple[int, str, int]]:
    """Split at top-level binary + and -; returns (sign, term, column) triples."""
    terms, opens, start, sign = [], [], 0, 1
    prev = ""
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            opens.append(i)
        elif ch == ")":
            if not opens:
                raise _syntax(line, col0 + i + 1, "unbalanced ')'")
            opens.pop()
        elif ch in "+-" and not opens and prev and prev not in "*/^(+-<,":
            terms.append((sign, text[start:i], col0 + start))
            sign = 1 if ch == "+" else -1
            start = i + 1
        if not ch.isspace():
            prev = ch
        i += 1
    if opens:
        raise _syntax(line, col0 + opens[-1] + 1, "unbalanced '('")
    terms.append((sign, text[start:], col0 + start))
    return terms


def _last_star(term: str) -> int:
    depth, at = 0, -1
    for i, ch in enumerate(term):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            at = i
    return at


_TARGETS = {
    "bracket": re.compile(r"^\s*(\d+)\s*$"),
    "comul": re.compile(r"^\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$"),
    "map": re.compile(r"^\s*\(\s*(\d+)\s*<-\s*(\d+)\s*\)\s*$"),
    "tensor": re.compile(r"^\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$"),
}
_TARGETS["form"] = _TARGETS["tensor"]


class _Ctx:
    def __init__(self, params, bindings):
        self.params, self.bindings, self.degree = params, bindings, 0


def _parse_rhs(kind: str, rhs: str, line: int, col0: int, ctx: _Ctx):
    out = []
    for sign, term, col in _split_terms(rhs, line, col0):
        body = term.strip()
        if not body:
            raise _syntax(line, col + 1, "empty term")
        lead = len(term) - len(term.lstrip())
        star = _last_star(body)
        if star >= 0:
            coef_text, target = body[:star], body[star + 1:]
            coef, deg = _Expr(coef_text, line, col + lead, ctx.params, ctx.bindings).parse()
        else:
            # bare target, possibly with leading signs
            stripped = body.lstrip("+-")
            flips = body[:len(body) - len(stripped)].count("-")
            coef, deg, target = Fraction((-1) ** flips), 0, stripped
        m = _TARGETS[kind].match(target)
        if not m:
            raise _syntax(line, col + lead + (star + 2 if star >= 0 else 1),
                          f"bad {kind} target {target.strip()!r}")
        ctx.degree = max(ctx.degree, deg)
        out.append((sign * coef, tuple(int(g) for g in m.groups())))
    return out


def _check_index(idx: int, n: int, line: int) -> int:
    if not 1 <= idx <= n:
        raise FileError(f"INDEX_OUT_OF_RANGE: line {line}: index {idx} not in 1..{n}",
                        "INDEX_OUT_OF_RANGE")
    return idx - 1


_HEAD = re.compile(r"^(\S+)(.*)$")


def parse_structure(text: str, bindings: Mapping[str, object] | None = None) -> Bundle:
    bindings = {k: Fraction(v) if not isinstance(v, Fraction) else v
                for k, v in (bindings or {}).items()}
    n = None
    params: list[str] = []
    c = d = None
    maps, tensors, forms = {}, {}, {}
    ctx = _Ctx((), bindings)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        head = _HEAD.match(line.strip())
        word, rest = head.group(1), head.group(2)
        col_rest = indent + len(word)
        if word == "dim":
            if n is not None:
                raise _syntax(lineno, indent + 1, "dim declared twice")
            if not re.fullmatch(r"\s+\d+\s*", rest):
                raise _syntax(lineno, col_rest + 1, "dim expects a non-negative integer")
            n = int(rest)
            c, d = zeros((n, n, n)), zeros((n, n, n))
            continue
        if word == "param":
            name = rest.strip()
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise _syntax(lineno, col_rest + 1, "param expects a name")
            params.append(name)
            ctx.params = tuple(params)
            continue
        if word not in _TARGETS:
            raise FileError(f"UNKNOWN_SECTION: line {lineno}: {word!r}", "UNKNOWN_SECTION")
        if n is None:
            raise _syntax(lineno, indent + 1, "dim must come first")
        if "=" not in rest:
            raise _syntax(lineno, col_rest + len(rest) + 1, "expected '='")
        lhs, rhs = rest.split("=", 1)
        col_rhs = col_rest + len(lhs) + 1
        lhs_items = lhs.split()
        if word == "bracket":
            if len(lhs_items) != 2 or not all(x.isdigit() for x in lhs_items):
                raise _syntax(lineno, col_rest + 1, "bracket expects two indices")
            i, j = (_check_index(int(x), n, lineno) for x in lhs_items)
            for coef, (k,) in _parse_rhs(word, rhs, lineno, col_rhs, ctx):
                c[i, j, _check_index(k, n, lineno)] += coef
        elif word == "comul":
            if len(lhs_items) != 1 or not lhs_items[0].isdigit():
                raise _syntax(lineno, col_rest + 1, "comul expects one index")
            i = _check_index(int(lhs_items[0]), n, lineno)
            for coef, (p, q) in _parse_rhs(word, rhs, lineno, col_rhs, ctx):
                d[i, _check_index(p, n, lineno), _check_index(q, n, lineno)] += coef
        else:
            if len(lhs_items) != 1 or not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", lhs_items[0]):
                raise _syntax(lineno, col_rest + 1, f"{word} expects a name")
            store = {"map": maps, "tensor": tensors, "form": forms}[word]
            m = store.setdefault(lhs_items[0], zeros((n, n)))
            for coef, (a, b) in _parse_rhs(word, rhs, lineno, col_rhs, ctx):
                m[_check_index(a, n, lineno), _check_index(b, n, lineno)] += coef
    if n is None:
        raise _syntax(1, 1, "missing dim")
    demote = np.frompyfunc(as_scalar, 1, 1)
    fix = lambda a: demote(a).astype(object) if a.size else a
    return Bundle(
        dim=n, params=tuple(params), algebra=Algebra(fix(c)), coalgebra=Coalgebra(fix(d)),
        maps={k: LinearMap(fix(v)) for k, v in maps.items()},
        tensors={k: TwoTensor(fix(v)) for k, v in tensors.items()},
        forms={k: BilinearForm(fix(v)) for k, v in forms.items()},
        degree=ctx.degree,
    )


def load(path, bindings=None) -> Bundle:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FileError(f"cannot read {path}: {exc.strerror}", "IO_ERROR") from None
    return parse_structure(text, bindings)


# ---------------------------------------------------------------- emitter

def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _join(terms: list[tuple[object, str]]) -> str:
    out = []
    for k, target in terms:
        k = Fraction(k)
        if not out:
            out.append(f"{fmt_rational(k)}*{target}")
        else:
            out.append(f"{'-' if k < 0 else '+'} {fmt_rational(abs(k))}*{target}")
    return " ".join(out)


def emit_structure(b: Bundle) -> str:
    """Canonical text: fixed section order, lexicographic entries, parameters already substituted."""
    n = b.dim
    lines = [f"dim {n}"]
    c, d = b.algebra.c, b.coalgebra.d
    for i in range(n):
        for j in range(n):
            terms = [(c[i, j, k], str(k + 1)) for k in range(n) if c[i, j, k] != 0]
            if terms:
                lines.append(f"bracket {i + 1} {j + 1} = {_join(terms)}")
    for i in range(n):
        terms = [(d[i, p, q], f"({p + 1},{q + 1})") for p in range(n) for q in range(n)
                 if d[i, p, q] != 0]
        if terms:
            lines.append(f"comul {i + 1} = {_join(terms)}")
    for word, store, attr, arrow in (("map", b.maps, "m", True), ("tensor", b.tensors, "t", False),
                                     ("form", b.forms, "w", False)):
        for name in sorted(store):
            m = getattr(store[name], attr)
            sep = "<-" if arrow else ","
            terms = [(m[i, j], f"({i + 1}{sep}{j + 1})") for i in range(m.shape[0])
                     for j in range(m.shape[1]) if m[i, j] != 0]
            lines.append(f"{word} {name} = {_join(terms)}" if terms else f"{word} {name} = 0*(1{sep}1)"
                         if n else f"# {word} {name} is empty")
    return "\n".join(lines) + "\n"


def save(b: Bundle, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_structure(b))
